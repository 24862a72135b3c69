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

// Shared instances and definition-level helpers for the test suites.

#ifndef GPMC_TESTS_FIXTURES_HPP_
#define GPMC_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gpmc/core.hpp"

namespace gpmc::testing {

inline MatroidPair make_pair(int n, std::vector<std::vector<Element>> parts1,
                             std::vector<int> caps1,
                             std::vector<std::vector<Element>> parts2,
                             std::vector<int> caps2) {
  return MatroidPair::make(
      GeneralizedPartitionMatroid::build(n, std::move(parts1), std::move(caps1)),
      GeneralizedPartitionMatroid::build(n, std::move(parts2),
                                         std::move(caps2)));
}

// m1 = {0,1,2}:1 {3,4,5}:2, m2 = {0,3}:1 {1,4}:1 {2,5}:2.
inline MatroidPair e1() {
  return make_pair(6, {{0, 1, 2}, {3, 4, 5}}, {1, 2}, {{0, 3}, {1, 4}, {2, 5}},
                   {1, 1, 2});
}

// 2x2 grid: rows on side 1, columns on side 2, all caps 1.
inline MatroidPair dinitz2() {
  return make_pair(4, {{0, 1}, {2, 3}}, {1, 1}, {{0, 2}, {1, 3}}, {1, 1});
}

inline ElementSet subset_of(uint32_t mask, int n) {
  ElementSet s;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1u) s.push_back(v);
  }
  return s;
}

// Independence computed from raw part lists by set intersection.
inline bool naive_independent(const std::vector<std::vector<Element>>& parts,
                              const std::vector<int>& caps,
                              const ElementSet& s) {
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<Element> part = parts[i];
    std::sort(part.begin(), part.end());
    std::vector<Element> common;
    std::set_intersection(part.begin(), part.end(), s.begin(), s.end(),
                          std::back_inserter(common));
    if (static_cast<int>(common.size()) > caps[i]) return false;
  }
  return true;
}

}  // namespace gpmc::testing

#endif  // GPMC_TESTS_FIXTURES_HPP_
