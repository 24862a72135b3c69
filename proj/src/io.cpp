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

#include "gpmc/io.hpp"

#include <fstream>
#include <sstream>

#include "gpmc/error.hpp"

namespace gpmc::io {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInstance, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

// Runs a conversion, mapping nlohmann type errors to kMalformedInstance.
template <typename T, typename F>
T convert(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string(what) + ": " + e.what());
  }
}

GeneralizedPartitionMatroid gpm_from_json(int n, const Json& j) {
  auto parts = convert<std::vector<std::vector<Element>>>(
      "parts", [&] { return field(j, "parts").get<std::vector<ElementSet>>(); });
  auto caps = convert<std::vector<int>>(
      "caps", [&] { return field(j, "caps").get<std::vector<int>>(); });
  return GeneralizedPartitionMatroid::build(n, std::move(parts),
                                            std::move(caps));
}

Json gpm_to_json(const GeneralizedPartitionMatroid& m) {
  return Json{{"caps", m.caps()}, {"parts", m.parts()}};
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  }
  out << text;
}

bool is_bipartite_form(const Json& j) {
  return j.is_object() && j.contains("edges") && !j.contains("elements");
}

MatroidPair instance_from_json(const Json& j) {
  if (is_bipartite_form(j)) {
    return from_bipartite(bipartite_from_json(j)).pair;
  }
  const int n =
      convert<int>("elements", [&] { return field(j, "elements").get<int>(); });
  return MatroidPair::make(gpm_from_json(n, field(j, "matroid1")),
                           gpm_from_json(n, field(j, "matroid2")));
}

BipartiteInstance bipartite_from_json(const Json& j) {
  BipartiteInstance g;
  g.left_caps = convert<std::vector<int>>(
      "left_caps", [&] { return field(j, "left_caps").get<std::vector<int>>(); });
  g.right_caps = convert<std::vector<int>>("right_caps", [&] {
    return field(j, "right_caps").get<std::vector<int>>();
  });
  const auto edges = convert<std::vector<std::vector<int>>>("edges", [&] {
    return field(j, "edges").get<std::vector<std::vector<int>>>();
  });
  for (const auto& e : edges) {
    if (e.size() != 2) malformed("edge must be a [left, right] pair");
    g.edges.emplace_back(e[0], e[1]);
  }
  validate(g);
  return g;
}

Json instance_to_json(const MatroidPair& p) {
  return Json{{"elements", p.n_elements()},
              {"matroid1", gpm_to_json(p.m1())},
              {"matroid2", gpm_to_json(p.m2())}};
}

Json bipartite_to_json(const BipartiteInstance& g) {
  Json edges = Json::array();
  for (auto [l, r] : g.edges) edges.push_back(Json::array({l, r}));
  return Json{{"edges", edges},
              {"left_caps", g.left_caps},
              {"right_caps", g.right_caps}};
}

Coloring coloring_from_json(const Json& j) {
  return Coloring{convert<std::vector<ElementSet>>("classes", [&] {
    return field(j, "classes").get<std::vector<ElementSet>>();
  })};
}

Json coloring_to_json(const Coloring& c) { return Json{{"classes", c.classes}}; }

ListAssignment lists_from_json(const Json& j) {
  return ListAssignment{
      convert<std::vector<std::vector<std::string>>>("lists", [&] {
        return field(j, "lists").get<std::vector<std::vector<std::string>>>();
      })};
}

Json lists_to_json(const ListAssignment& la) {
  return Json{{"lists", la.lists}};
}

ListColoringOutput assignment_from_json(const Json& j) {
  return ListColoringOutput{convert<std::vector<std::string>>("assignment", [&] {
    return field(j, "assignment").get<std::vector<std::string>>();
  })};
}

Json assignment_to_json(const ListColoringOutput& out) {
  return Json{{"assignment", out.assignment}};
}

std::vector<int> labels_from_json(const Json& j) {
  return convert<std::vector<int>>(
      "labels", [&] { return field(j, "labels").get<std::vector<int>>(); });
}

Json labels_to_json(const std::vector<int>& labels) {
  return Json{{"labels", labels}};
}

KernelFile kernel_from_json(const Json& j) {
  KernelFile kf;
  kf.kernel = convert<ElementSet>(
      "kernel", [&] { return field(j, "kernel").get<ElementSet>(); });
  if (j.contains("ground")) {
    kf.ground = convert<ElementSet>(
        "ground", [&] { return j.at("ground").get<ElementSet>(); });
  }
  return kf;
}

Json kernel_to_json(const ElementSet& ground, const KernelResult& result) {
  return Json{{"ground", ground},
              {"kernel", result.kernel},
              {"rounds", result.rounds}};
}

}  // namespace gpmc::io
