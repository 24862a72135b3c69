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

// Exhaustive ground truth and seeded instance generation.
//
// Every routine here works from the definitions alone (independence tests
// and enumeration), never from the closed forms the solver relies on.
// Size guards are hard errors.

#ifndef GPMC_ORACLE_HPP_
#define GPMC_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gpmc/chromatic.hpp"
#include "gpmc/circulation.hpp"
#include "gpmc/core.hpp"
#include "gpmc/kernel.hpp"
#include "gpmc/listcolor.hpp"

namespace gpmc {

inline constexpr int kBruteChiMaxElements = 12;
inline constexpr int kBruteKernelMaxGround = 12;
inline constexpr int64_t kBruteListMaxProduct = 10'000'000;
inline constexpr int64_t kBruteCirculationMaxProduct = 10'000'000;

// Seeded generator with platform-independent output.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next() % i]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorParams {
  int n_elements = 6;
  int max_parts = 3;
  int max_cap = 2;
  uint64_t seed = 0;
};

struct BipartiteGeneratorParams {
  int n_edges = 6;
  int max_left = 3;
  int max_right = 3;
  int max_cap = 1;
  uint64_t seed = 0;
};

// Minimum number of common independent sets covering the ground set.
int brute_chi(const MatroidPair& p);

// A coloring with exactly k classes (some possibly empty), if one exists.
std::optional<Coloring> brute_coloring(const MatroidPair& p, int k);

// Domination straight from the matroid definition: v is in d, or some
// independent I inside d, entirely below v, becomes dependent when v joins.
bool brute_dominates(const OrderedContext& ctx, int side,
                     std::span<const Element> d, Element v);

// Every kernel of the restriction to ground, in increasing bitmask order.
std::vector<ElementSet> brute_kernel(const OrderedContext& ctx,
                                     std::span<const Element> ground);

std::optional<ListColoringOutput> brute_list_color(const MatroidPair& p,
                                                   const ListAssignment& la);

// Feasibility by enumerating every integer arc assignment within bounds.
// All uppers must be finite.
bool brute_circulation_feasible(const CirculationInstance& inst);

MatroidPair random_instance(const GeneratorParams& gp);

// No isolated vertices; vertex counts are capped by the edge count.
BipartiteInstance random_bipartite(const BipartiteGeneratorParams& gp);

}  // namespace gpmc

#endif  // GPMC_ORACLE_HPP_
