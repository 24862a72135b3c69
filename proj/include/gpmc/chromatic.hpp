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

// Expansion numbers, chromatic numbers and constructive optimal colorings of
// the intersection of two generalized partition matroids.

#ifndef GPMC_CHROMATIC_HPP_
#define GPMC_CHROMATIC_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gpmc/circulation.hpp"
#include "gpmc/core.hpp"

namespace gpmc {

// Exact nonnegative rational in lowest terms, den > 0.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational of(int64_t num, int64_t den);

  int64_t ceil() const { return (num + den - 1) / den; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

struct Coloring {
  std::vector<ElementSet> classes;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct VerificationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// max over parts of |P_i| / p_i.
Rational expansion_number(const GeneralizedPartitionMatroid& m);

int chi_of_gpm(const GeneralizedPartitionMatroid& m);

int chi_of_pair(const MatroidPair& p);

// Complete coloring with exactly chi_of_pair(p) classes.
Coloring optimal_coloring(const MatroidPair& p);

// Extends a partial coloring to cover v without changing the class count.
// Inserts v directly into the first class with room on both sides;
// otherwise re-splits two classes through an integral circulation.
Coloring augment_once(const MatroidPair& p, const Coloring& partial,
                      Element v);

// Auxiliary digraph used by augment_once to re-split two classes around an
// uncovered element v. Vertices: 0 = s, 1 = t, then the side-1 parts met by
// the elements, then the side-2 parts. Arc k < elements.size() carries
// elements[k] from its side-1 part to its side-2 part with bounds [0, 1];
// then s -> P arcs bounded by [max(0, |U cap P| - p), p], Q -> t arcs by
// [max(0, |U cap Q| - q), q], and an unbounded t -> s arc, U being the
// elements.
struct AugmentationDigraph {
  CirculationInstance instance;
  // n_alpha + n_beta + {v}, ascending.
  ElementSet elements;
};

AugmentationDigraph augmentation_digraph(const MatroidPair& p,
                                         const ElementSet& n_alpha,
                                         const ElementSet& n_beta, Element v);

// Disjointness, per-class common independence and coverage.
VerificationReport verify_coloring(const MatroidPair& p,
                                   const Coloring& coloring);

}  // namespace gpmc

#endif  // GPMC_CHROMATIC_HPP_
