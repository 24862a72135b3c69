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

// List coloring of the intersection of two generalized partition matroids.
//
// Every element gets a token from its own list, and each token's fiber is
// common independent. Lists of size chi_of_pair always suffice. The
// algorithm repeatedly takes a color c from an element with the longest
// remaining list, computes a kernel of the elements still able to take c,
// gives c to the kernel and strikes c from the other lists.

#ifndef GPMC_LISTCOLOR_HPP_
#define GPMC_LISTCOLOR_HPP_

#include <span>
#include <string>
#include <vector>

#include "gpmc/chromatic.hpp"
#include "gpmc/core.hpp"
#include "gpmc/kernel.hpp"

namespace gpmc {

struct ListAssignment {
  // lists[v] holds the permissible tokens of element v, without repeats.
  std::vector<std::vector<std::string>> lists;
};

struct ListColoringOutput {
  // assignment[v] is the token given to element v.
  std::vector<std::string> assignment;

  friend bool operator==(const ListColoringOutput&,
                         const ListColoringOutput&) = default;
};

// Elements of the ground below v in the same part, side 1 and side 2.
struct GammaSets {
  ElementSet below1;
  ElementSet below2;
};

// Throws kLengthMismatch or kInvalidArgument on malformed lists.
void validate(const ListAssignment& la, int n_elements);

// Elements whose list is shorter than chi_of_pair(p).
std::vector<Element> short_lists(const MatroidPair& p,
                                 const ListAssignment& la);

GammaSets gamma_sets(const OrderedContext& ctx,
                     std::span<const Element> ground, Element v);

struct ListColorStats {
  int iterations = 0;
  int kernel_elements = 0;
  int invariant_checks = 0;
};

// Precomputes the optimal coloring and canonical orders of a pair once, so
// that many list assignments can be colored against it.
class ListColorer {
 public:
  explicit ListColorer(const MatroidPair& p);

  int colors() const { return colors_; }
  const Coloring& base_coloring() const { return coloring_; }
  const OrderedContext& context() const { return ctx_; }

  // Throws kListTooShort if some list is shorter than colors(); lists
  // longer than that are cut down to their colors() smallest tokens.
  ListColoringOutput color(const ListAssignment& la,
                           ListColorStats* stats = nullptr) const;

 private:
  int colors_;
  Coloring coloring_;
  OrderedContext ctx_;
  // 1-based index of the base class holding each element.
  std::vector<int> class_of_;
};

ListColoringOutput list_color(const MatroidPair& p, const ListAssignment& la);

VerificationReport verify_list_coloring(const MatroidPair& p,
                                        const ListAssignment& la,
                                        const ListColoringOutput& out);

}  // namespace gpmc

#endif  // GPMC_LISTCOLOR_HPP_
