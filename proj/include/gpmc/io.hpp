// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON interchange for instances, colorings, lists, labels and kernels.
//
//   instance   {"elements": n, "matroid1": {"parts": [[..]..], "caps": [..]},
//               "matroid2": {...}}
//   bipartite  {"left_caps": [..], "right_caps": [..], "edges": [[l, r]..]}
//   coloring   {"classes": [[..]..]}
//   lists      {"lists": [["a", "b"]..]}
//   assignment {"assignment": ["a"..]}
//   labels     {"labels": [..]}            labels[v] in 1..n
//   kernel     {"ground": [..], "kernel": [..], "rounds": r}
//
// Malformed documents raise Error(kMalformedInstance).

#ifndef GPMC_IO_HPP_
#define GPMC_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gpmc/chromatic.hpp"
#include "gpmc/core.hpp"
#include "gpmc/kernel.hpp"
#include "gpmc/listcolor.hpp"
#include "json.hpp"

namespace gpmc::io {

using Json = nlohmann::json;

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
// Compact, key-sorted, newline-terminated.
std::string dump(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

bool is_bipartite_form(const Json& j);

// Accepts either form; the bipartite form goes through from_bipartite.
MatroidPair instance_from_json(const Json& j);
BipartiteInstance bipartite_from_json(const Json& j);
Json instance_to_json(const MatroidPair& p);
Json bipartite_to_json(const BipartiteInstance& g);

Coloring coloring_from_json(const Json& j);
Json coloring_to_json(const Coloring& c);

ListAssignment lists_from_json(const Json& j);
Json lists_to_json(const ListAssignment& la);

ListColoringOutput assignment_from_json(const Json& j);
Json assignment_to_json(const ListColoringOutput& out);

std::vector<int> labels_from_json(const Json& j);
Json labels_to_json(const std::vector<int>& labels);

struct KernelFile {
  // Empty means the whole ground set.
  std::optional<ElementSet> ground;
  ElementSet kernel;
};
KernelFile kernel_from_json(const Json& j);
Json kernel_to_json(const ElementSet& ground, const KernelResult& result);

}  // namespace gpmc::io

#endif  // GPMC_IO_HPP_
