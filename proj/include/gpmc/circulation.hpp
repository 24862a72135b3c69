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

// Integral circulations with lower and upper arc bounds.
//
// solve_circulation either returns an integral circulation f with
// lower <= f <= upper on every arc, or a vertex set U with
// lower(in-arcs of U) > upper(out-arcs of U), which proves none exists.

#ifndef GPMC_CIRCULATION_HPP_
#define GPMC_CIRCULATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gpmc {

struct Arc {
  int tail = 0;
  int head = 0;
  int64_t lower = 0;
  // nullopt means unbounded.
  std::optional<int64_t> upper;
};

struct CirculationInstance {
  int n_vertices = 0;
  std::vector<Arc> arcs;
};

struct CirculationResult {
  // Per-arc values; present iff a feasible circulation exists.
  std::optional<std::vector<int64_t>> flow;
  // Violating vertex set (sorted) when infeasible.
  std::vector<int> cut;

  bool feasible() const { return flow.has_value(); }
};

struct CutSums {
  int64_t lower_in = 0;
  // nullopt when an unbounded arc leaves U.
  std::optional<int64_t> upper_out;

  bool violated() const { return upper_out && lower_in > *upper_out; }
};

// Throws kMalformedInstance on bad endpoints, negative lower bounds or
// lower > upper.
void validate(const CirculationInstance& inst);

CirculationResult solve_circulation(const CirculationInstance& inst);

// (lower(in-arcs of U), upper(out-arcs of U)). Throws kVertexOutOfRange.
CutSums violating_cut_check(const CirculationInstance& inst,
                            std::span<const int> u);

// Conservation and bounds check of a candidate flow.
bool is_feasible_circulation(const CirculationInstance& inst,
                             std::span<const int64_t> flow);

}  // namespace gpmc

#endif  // GPMC_CIRCULATION_HPP_
