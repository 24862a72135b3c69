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

// Generalized partition matroids, pairs of them over a shared ground set,
// and the correspondence with capacitated bipartite multigraphs.
//
// A generalized partition matroid partitions the elements 0..n-1 into parts
// P_1..P_a with positive caps p_1..p_a; a set I is independent iff it holds
// at most p_i elements of every P_i. A pair of such matroids is the same
// thing as a bipartite multigraph with vertex capacities: parts become
// vertices, and each element becomes an edge joining its two parts.

#ifndef GPMC_CORE_HPP_
#define GPMC_CORE_HPP_

#include <span>
#include <utility>
#include <vector>

#include "gpmc/error.hpp"

namespace gpmc {

using Element = int;
// Sorted, duplicate-free element ids.
using ElementSet = std::vector<Element>;

class GeneralizedPartitionMatroid {
 public:
  // Validates and builds. Parts are stored sorted; part order is preserved.
  static GeneralizedPartitionMatroid build(
      int n_elements, std::vector<std::vector<Element>> parts,
      std::vector<int> caps);

  int n_elements() const { return n_elements_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  std::span<const Element> part(int i) const { return parts_[i]; }
  int cap(int i) const { return caps_[i]; }
  // Index of the part containing v.
  int part_of(Element v) const { return part_of_[v]; }

  const std::vector<std::vector<Element>>& parts() const { return parts_; }
  const std::vector<int>& caps() const { return caps_; }

  friend bool operator==(const GeneralizedPartitionMatroid&,
                         const GeneralizedPartitionMatroid&) = default;

 private:
  GeneralizedPartitionMatroid() = default;

  int n_elements_ = 0;
  std::vector<std::vector<Element>> parts_;
  std::vector<int> caps_;
  std::vector<int> part_of_;
};

// Two generalized partition matroids on the same ground set.
class MatroidPair {
 public:
  static MatroidPair make(GeneralizedPartitionMatroid m1,
                          GeneralizedPartitionMatroid m2);

  int n_elements() const { return m1_.n_elements(); }
  const GeneralizedPartitionMatroid& m1() const { return m1_; }
  const GeneralizedPartitionMatroid& m2() const { return m2_; }
  // Side 1 or 2.
  const GeneralizedPartitionMatroid& side(int s) const {
    return s == 1 ? m1_ : m2_;
  }

  friend bool operator==(const MatroidPair&, const MatroidPair&) = default;

 private:
  MatroidPair(GeneralizedPartitionMatroid m1, GeneralizedPartitionMatroid m2)
      : m1_(std::move(m1)), m2_(std::move(m2)) {}

  GeneralizedPartitionMatroid m1_;
  GeneralizedPartitionMatroid m2_;
};

struct BipartiteInstance {
  std::vector<int> left_caps;
  std::vector<int> right_caps;
  // (left index, right index); parallel edges are distinguished by position.
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const BipartiteInstance&,
                         const BipartiteInstance&) = default;
};

// Throws on out-of-range endpoints or non-positive caps.
void validate(const BipartiteInstance& g);

// Throws kElementOutOfRange / kInvalidArgument unless s is a duplicate-free
// list of ids in [0, n).
void check_element_set(int n, std::span<const Element> s);

// Sorted copy of s.
ElementSet to_element_set(std::span<const Element> s);

bool is_independent(const GeneralizedPartitionMatroid& m,
                    std::span<const Element> s);

bool is_common_independent(const MatroidPair& p, std::span<const Element> s);

// Closure of a: every part that already holds cap-many elements of a is
// added whole.
ElementSet span(const GeneralizedPartitionMatroid& m,
                std::span<const Element> a);

struct BipartiteView {
  BipartiteInstance graph;
  // edge index -> element id.
  std::vector<Element> edge_to_element;
};

// Left vertices are the parts of m1, right vertices the parts of m2.
BipartiteView to_bipartite(const MatroidPair& p);

struct MatroidPairView {
  MatroidPair pair;
  // element id -> edge index.
  std::vector<int> element_to_edge;
};

// Ground set is the edge set; parts are vertex stars. Throws
// kIsolatedVertex for a vertex with no edges.
MatroidPairView from_bipartite(const BipartiteInstance& g);

bool is_simple_b_matching(const BipartiteInstance& g, std::span<const int> f);

}  // namespace gpmc

#endif  // GPMC_CORE_HPP_
