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

#include "gpmc/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gpmc/circulation.hpp"
#include "gpmc/error.hpp"

namespace gpmc {
namespace {

// Throws kInvalidPartial unless the classes are disjoint common independent
// sets. Returns the covered-element mask.
std::vector<bool> check_partial(const MatroidPair& p, const Coloring& c) {
  std::vector<bool> covered(p.n_elements(), false);
  for (size_t k = 0; k < c.classes.size(); ++k) {
    const ElementSet& cls = c.classes[k];
    for (Element u : cls) {
      if (u < 0 || u >= p.n_elements()) {
        throw Error(ErrorCode::kElementOutOfRange,
                    "element " + std::to_string(u) + " in class " +
                        std::to_string(k));
      }
      if (covered[u]) {
        throw Error(ErrorCode::kInvalidPartial,
                    "element " + std::to_string(u) + " in two classes");
      }
      covered[u] = true;
    }
    if (!is_common_independent(p, cls)) {
      throw Error(ErrorCode::kInvalidPartial,
                  "class " + std::to_string(k) + " is not common independent");
    }
  }
  return covered;
}

int count_in_part(const GeneralizedPartitionMatroid& m, const ElementSet& s,
                  int part) {
  return static_cast<int>(std::count_if(
      s.begin(), s.end(), [&](Element u) { return m.part_of(u) == part; }));
}

// Dense vertex ids for the parts on one side of the auxiliary digraph.
struct SideIndex {
  std::vector<int> vertex_of_part;
  std::vector<int> parts;
};

SideIndex index_parts(const GeneralizedPartitionMatroid& m,
                      const ElementSet& elements, int first_vertex) {
  SideIndex idx;
  idx.vertex_of_part.assign(m.num_parts(), -1);
  for (Element u : elements) {
    const int part = m.part_of(u);
    if (idx.vertex_of_part[part] == -1) {
      idx.vertex_of_part[part] = -2;
      idx.parts.push_back(part);
    }
  }
  std::sort(idx.parts.begin(), idx.parts.end());
  for (size_t k = 0; k < idx.parts.size(); ++k) {
    idx.vertex_of_part[idx.parts[k]] = first_vertex + static_cast<int>(k);
  }
  return idx;
}

}  // namespace

AugmentationDigraph augmentation_digraph(const MatroidPair& p,
                                         const ElementSet& n_alpha,
                                         const ElementSet& n_beta, Element v) {
  AugmentationDigraph out;
  ElementSet& united = out.elements;
  std::set_union(n_alpha.begin(), n_alpha.end(), n_beta.begin(), n_beta.end(),
                 std::back_inserter(united));
  united.insert(std::upper_bound(united.begin(), united.end(), v), v);

  constexpr int kSource = 0;
  constexpr int kSink = 1;
  const SideIndex left = index_parts(p.m1(), united, 2);
  const SideIndex right = index_parts(
      p.m2(), united, 2 + static_cast<int>(left.parts.size()));

  CirculationInstance& inst = out.instance;
  inst.n_vertices =
      2 + static_cast<int>(left.parts.size() + right.parts.size());
  for (Element u : united) {
    inst.arcs.push_back({left.vertex_of_part[p.m1().part_of(u)],
                         right.vertex_of_part[p.m2().part_of(u)], 0, 1});
  }
  // Lower bounds are clamped at zero: the star arcs carry nonnegative flow
  // anyway because the element arcs do.
  for (int part : left.parts) {
    const int64_t cap = p.m1().cap(part);
    const int64_t deg = count_in_part(p.m1(), united, part);
    inst.arcs.push_back({kSource, left.vertex_of_part[part],
                         std::max<int64_t>(0, deg - cap), cap});
  }
  for (int part : right.parts) {
    const int64_t cap = p.m2().cap(part);
    const int64_t deg = count_in_part(p.m2(), united, part);
    inst.arcs.push_back({right.vertex_of_part[part], kSink,
                         std::max<int64_t>(0, deg - cap), cap});
  }
  inst.arcs.push_back({kSink, kSource, 0, std::nullopt});
  return out;
}

Rational Rational::of(int64_t num, int64_t den) {
  const int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational expansion_number(const GeneralizedPartitionMatroid& m) {
  Rational best{0, 1};
  for (int i = 0; i < m.num_parts(); ++i) {
    best = std::max(
        best, Rational::of(static_cast<int64_t>(m.part(i).size()), m.cap(i)));
  }
  return best;
}

int chi_of_gpm(const GeneralizedPartitionMatroid& m) {
  return static_cast<int>(expansion_number(m).ceil());
}

int chi_of_pair(const MatroidPair& p) {
  return std::max(chi_of_gpm(p.m1()), chi_of_gpm(p.m2()));
}

Coloring augment_once(const MatroidPair& p, const Coloring& given,
                      Element v) {
  const std::vector<bool> covered = check_partial(p, given);
  Coloring partial = given;
  for (ElementSet& cls : partial.classes) std::sort(cls.begin(), cls.end());
  if (v < 0 || v >= p.n_elements()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "element " + std::to_string(v));
  }
  if (covered[v]) {
    throw Error(ErrorCode::kAlreadyCovered,
                "element " + std::to_string(v) + " is already colored");
  }
  const int pi = p.m1().part_of(v);
  const int qj = p.m2().part_of(v);
  const int p_cap = p.m1().cap(pi);
  const int q_cap = p.m2().cap(qj);

  std::optional<size_t> alpha;
  std::optional<size_t> beta;
  for (size_t k = 0; k < partial.classes.size(); ++k) {
    const bool p_room = count_in_part(p.m1(), partial.classes[k], pi) < p_cap;
    const bool q_room = count_in_part(p.m2(), partial.classes[k], qj) < q_cap;
    if (p_room && q_room) {
      Coloring out = partial;
      ElementSet& cls = out.classes[k];
      cls.insert(std::upper_bound(cls.begin(), cls.end(), v), v);
      return out;
    }
    if (p_room && !alpha) alpha = k;
    if (q_room && !beta) beta = k;
  }
  if (!alpha || !beta) {
    throw Error(ErrorCode::kInvalidPartial,
                "too few classes to place element " + std::to_string(v));
  }

  // Flow-carrying elements form one class, the rest the other.
  const AugmentationDigraph d = augmentation_digraph(
      p, partial.classes[*alpha], partial.classes[*beta], v);
  const CirculationResult result = solve_circulation(d.instance);
  if (!result.feasible()) {
    throw Error(ErrorCode::kInternalInfeasible,
                "no circulation while inserting element " + std::to_string(v));
  }
  ElementSet carried;
  ElementSet rest;
  for (size_t k = 0; k < d.elements.size(); ++k) {
    ((*result.flow)[k] == 1 ? carried : rest).push_back(d.elements[k]);
  }
  if (!is_common_independent(p, carried) || !is_common_independent(p, rest)) {
    throw Error(ErrorCode::kInternalInvariantViolated,
                "circulation split is not common independent");
  }
  Coloring out = partial;
  out.classes[*alpha] = std::move(carried);
  out.classes[*beta] = std::move(rest);
  return out;
}

Coloring optimal_coloring(const MatroidPair& p) {
  const int n = p.n_elements();
  const int colors = chi_of_pair(p);
  Coloring coloring;
  coloring.classes.resize(colors);

  // Greedy first-fit packing in id order.
  std::vector<std::vector<int>> load1(colors,
                                      std::vector<int>(p.m1().num_parts(), 0));
  std::vector<std::vector<int>> load2(colors,
                                      std::vector<int>(p.m2().num_parts(), 0));
  std::vector<Element> missed;
  for (Element v = 0; v < n; ++v) {
    const int i = p.m1().part_of(v);
    const int j = p.m2().part_of(v);
    bool placed = false;
    for (int k = 0; k < colors && !placed; ++k) {
      if (load1[k][i] < p.m1().cap(i) && load2[k][j] < p.m2().cap(j)) {
        coloring.classes[k].push_back(v);
        ++load1[k][i];
        ++load2[k][j];
        placed = true;
      }
    }
    if (!placed) missed.push_back(v);
  }
  for (Element v : missed) coloring = augment_once(p, coloring, v);

  const VerificationReport report = verify_coloring(p, coloring);
  if (!report.ok()) {
    throw Error(ErrorCode::kInternalInvariantViolated,
                "optimal_coloring produced an invalid coloring: " +
                    report.violations.front());
  }
  return coloring;
}

VerificationReport verify_coloring(const MatroidPair& p,
                                   const Coloring& coloring) {
  VerificationReport report;
  const int n = p.n_elements();
  std::vector<int> class_of(n, -1);
  for (size_t k = 0; k < coloring.classes.size(); ++k) {
    const ElementSet& cls = coloring.classes[k];
    std::vector<int> load1(p.m1().num_parts(), 0);
    std::vector<int> load2(p.m2().num_parts(), 0);
    for (Element u : cls) {
      if (u < 0 || u >= n) {
        report.violations.push_back("class " + std::to_string(k) +
                                    ": element " + std::to_string(u) +
                                    " out of range");
        continue;
      }
      if (class_of[u] != -1) {
        report.violations.push_back(
            "element " + std::to_string(u) + " appears in class " +
            std::to_string(class_of[u]) + " and class " + std::to_string(k));
        continue;
      }
      class_of[u] = static_cast<int>(k);
      ++load1[p.m1().part_of(u)];
      ++load2[p.m2().part_of(u)];
    }
    for (int i = 0; i < p.m1().num_parts(); ++i) {
      if (load1[i] > p.m1().cap(i)) {
        report.violations.push_back(
            "class " + std::to_string(k) + ": matroid1 part " +
            std::to_string(i) + " holds " + std::to_string(load1[i]) +
            " > cap " + std::to_string(p.m1().cap(i)));
      }
    }
    for (int j = 0; j < p.m2().num_parts(); ++j) {
      if (load2[j] > p.m2().cap(j)) {
        report.violations.push_back(
            "class " + std::to_string(k) + ": matroid2 part " +
            std::to_string(j) + " holds " + std::to_string(load2[j]) +
            " > cap " + std::to_string(p.m2().cap(j)));
      }
    }
  }
  for (Element u = 0; u < n; ++u) {
    if (class_of[u] == -1) {
      report.violations.push_back("element " + std::to_string(u) +
                                  " is not colored");
    }
  }
  return report;
}

}  // namespace gpmc
