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

// Ordered matroid pairs and their kernels.
//
// Both matroids share one labeling of the ground set: side 1 orders elements
// by ascending label, side 2 by descending label. A set D dominates v on a
// side if v is in D, or D holds cap-many elements of v's part on that side,
// all smaller than v in that side's order. A kernel is a common independent
// set that dominates every element of the ground set on at least one side.

#ifndef GPMC_KERNEL_HPP_
#define GPMC_KERNEL_HPP_

#include <span>
#include <vector>

#include "gpmc/chromatic.hpp"
#include "gpmc/core.hpp"

namespace gpmc {

class OrderedContext {
 public:
  // labels[v] is the label of element v; must be a permutation of 1..n.
  static OrderedContext from_labels(MatroidPair pair, std::vector<int> labels);

  const MatroidPair& pair() const { return pair_; }
  int n_elements() const { return pair_.n_elements(); }
  int label(Element v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }

  // u strictly before v in the order of the given side (1 or 2).
  bool less(int side, Element u, Element v) const {
    return side == 1 ? labels_[u] < labels_[v] : labels_[u] > labels_[v];
  }

 private:
  OrderedContext(MatroidPair pair, std::vector<int> labels)
      : pair_(std::move(pair)), labels_(std::move(labels)) {}

  MatroidPair pair_;
  std::vector<int> labels_;
};

struct KernelResult {
  ElementSet kernel;
  int rounds = 0;
  // Elements in the order they were rejected; none is ever re-admitted.
  std::vector<Element> rejected;
};

// Labels the classes as consecutive blocks 1..|N_1|, |N_1|+1.., ascending
// element id within a block. Throws kIncompleteColoring unless the coloring
// is a complete valid coloring of p.
OrderedContext canonical_orders(const MatroidPair& p, const Coloring& coloring);

bool dominates(const OrderedContext& ctx, int side, std::span<const Element> d,
               Element v, std::span<const Element> ground);

bool is_kernel(const OrderedContext& ctx, std::span<const Element> k,
               std::span<const Element> ground);

// Deferred acceptance: every side-1 part proposes its cap-many best
// unrejected elements, every side-2 part keeps its cap-many best proposals
// and rejects the rest for good, until a round passes with no rejection.
KernelResult find_kernel(const OrderedContext& ctx,
                         std::span<const Element> ground);

}  // namespace gpmc

#endif  // GPMC_KERNEL_HPP_
