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

#include "gpmc/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gpmc/error.hpp"

namespace gpmc {
namespace {

void too_large(const std::string& what) {
  throw Error(ErrorCode::kInstanceTooLarge, what);
}

// Backtracking over element -> class assignments. Class c+1 only opens once
// class c is used, and element 0 always lands in class 0.
class ColoringSearch {
 public:
  ColoringSearch(const MatroidPair& p, int k)
      : p_(p),
        k_(k),
        class_of_(p.n_elements(), -1),
        load1_(k, std::vector<int>(p.m1().num_parts(), 0)),
        load2_(k, std::vector<int>(p.m2().num_parts(), 0)) {}

  bool run() { return place(0, 0); }

  Coloring coloring() const {
    Coloring c;
    c.classes.resize(k_);
    for (Element v = 0; v < p_.n_elements(); ++v) {
      c.classes[class_of_[v]].push_back(v);
    }
    return c;
  }

 private:
  bool place(Element v, int used) {
    if (v == p_.n_elements()) return true;
    const int i = p_.m1().part_of(v);
    const int j = p_.m2().part_of(v);
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (load1_[c][i] == p_.m1().cap(i) || load2_[c][j] == p_.m2().cap(j)) {
        continue;
      }
      ++load1_[c][i];
      ++load2_[c][j];
      class_of_[v] = c;
      if (place(v + 1, std::max(used, c + 1))) return true;
      --load1_[c][i];
      --load2_[c][j];
    }
    return false;
  }

  const MatroidPair& p_;
  int k_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> load1_;
  std::vector<std::vector<int>> load2_;
};

}  // namespace

std::optional<Coloring> brute_coloring(const MatroidPair& p, int k) {
  if (p.n_elements() > kBruteChiMaxElements) {
    too_large(std::to_string(p.n_elements()) + " elements > " +
              std::to_string(kBruteChiMaxElements));
  }
  if (k < 1) return std::nullopt;
  ColoringSearch search(p, k);
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

int brute_chi(const MatroidPair& p) {
  for (int k = 1;; ++k) {
    if (brute_coloring(p, k)) return k;
  }
}

bool brute_dominates(const OrderedContext& ctx, int side,
                     std::span<const Element> d, Element v) {
  if (std::find(d.begin(), d.end(), v) != d.end()) return true;
  const GeneralizedPartitionMatroid& m = ctx.pair().side(side);
  std::vector<Element> below;
  for (Element u : d) {
    if (ctx.less(side, u, v)) below.push_back(u);
  }
  if (below.size() > 20) too_large("domination check over > 20 elements");
  const uint32_t subsets = 1u << below.size();
  std::vector<Element> with_v;
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    std::vector<Element> subset;
    for (size_t b = 0; b < below.size(); ++b) {
      if (mask >> b & 1u) subset.push_back(below[b]);
    }
    if (!is_independent(m, subset)) continue;
    with_v = subset;
    with_v.push_back(v);
    if (!is_independent(m, with_v)) return true;
  }
  return false;
}

std::vector<ElementSet> brute_kernel(const OrderedContext& ctx,
                                     std::span<const Element> ground) {
  if (ground.size() > static_cast<size_t>(kBruteKernelMaxGround)) {
    too_large("ground of " + std::to_string(ground.size()) + " elements");
  }
  check_element_set(ctx.n_elements(), ground);
  const ElementSet sorted = to_element_set(ground);
  std::vector<ElementSet> kernels;
  const uint32_t subsets = 1u << sorted.size();
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    ElementSet k;
    for (size_t b = 0; b < sorted.size(); ++b) {
      if (mask >> b & 1u) k.push_back(sorted[b]);
    }
    if (!is_common_independent(ctx.pair(), k)) continue;
    const bool dominating =
        std::all_of(sorted.begin(), sorted.end(), [&](Element v) {
          return brute_dominates(ctx, 1, k, v) || brute_dominates(ctx, 2, k, v);
        });
    if (dominating) kernels.push_back(std::move(k));
  }
  return kernels;
}

std::optional<ListColoringOutput> brute_list_color(const MatroidPair& p,
                                                   const ListAssignment& la) {
  validate(la, p.n_elements());
  const int n = p.n_elements();
  int64_t product = 1;
  for (const auto& list : la.lists) {
    product *= static_cast<int64_t>(std::max<size_t>(list.size(), 1));
    if (product > kBruteListMaxProduct) {
      too_large("list product exceeds " + std::to_string(kBruteListMaxProduct));
    }
  }
  std::map<std::string, int> token_id;
  for (const auto& list : la.lists) {
    for (const auto& token : list) token_id.emplace(token, 0);
  }
  int next_id = 0;
  for (auto& [token, id] : token_id) id = next_id++;
  std::vector<std::vector<int>> ids(n);
  for (int v = 0; v < n; ++v) {
    for (const auto& token : la.lists[v]) ids[v].push_back(token_id[token]);
  }

  std::vector<std::vector<int>> load1(next_id,
                                      std::vector<int>(p.m1().num_parts(), 0));
  std::vector<std::vector<int>> load2(next_id,
                                      std::vector<int>(p.m2().num_parts(), 0));
  std::vector<int> choice(n, -1);
  // Iterative depth-first search; choice[v] indexes into la.lists[v].
  Element v = 0;
  while (v >= 0 && v < n) {
    const int i = p.m1().part_of(v);
    const int j = p.m2().part_of(v);
    if (choice[v] >= 0) {
      const int c = ids[v][choice[v]];
      --load1[c][i];
      --load2[c][j];
    }
    int next = choice[v] + 1;
    while (next < static_cast<int>(ids[v].size())) {
      const int c = ids[v][next];
      if (load1[c][i] < p.m1().cap(i) && load2[c][j] < p.m2().cap(j)) break;
      ++next;
    }
    if (next == static_cast<int>(ids[v].size())) {
      choice[v] = -1;
      --v;
      continue;
    }
    choice[v] = next;
    const int c = ids[v][next];
    ++load1[c][i];
    ++load2[c][j];
    ++v;
  }
  if (v < 0) return std::nullopt;
  ListColoringOutput out;
  out.assignment.resize(n);
  for (int u = 0; u < n; ++u) out.assignment[u] = la.lists[u][choice[u]];
  return out;
}

bool brute_circulation_feasible(const CirculationInstance& inst) {
  validate(inst);
  int64_t product = 1;
  for (const Arc& arc : inst.arcs) {
    if (!arc.upper) too_large("unbounded arc in exhaustive circulation check");
    product *= *arc.upper - arc.lower + 1;
    if (product > kBruteCirculationMaxProduct) {
      too_large("too many arc assignments");
    }
  }
  const size_t m = inst.arcs.size();
  std::vector<int64_t> value(m);
  for (size_t a = 0; a < m; ++a) value[a] = inst.arcs[a].lower;
  while (true) {
    if (is_feasible_circulation(inst, value)) return true;
    size_t a = 0;
    while (a < m && value[a] == *inst.arcs[a].upper) {
      value[a] = inst.arcs[a].lower;
      ++a;
    }
    if (a == m) return false;
    ++value[a];
  }
}

namespace {

// Random partition of 0..n-1 into between 1 and max_parts nonempty parts.
GeneralizedPartitionMatroid random_gpm(Rng& rng, int n, int max_parts,
                                       int max_cap) {
  const int k = rng.uniform(1, std::min(max_parts, n));
  std::vector<Element> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  std::vector<std::vector<Element>> parts(k);
  for (int idx = 0; idx < n; ++idx) {
    const int part = idx < k ? idx : rng.uniform(0, k - 1);
    parts[part].push_back(order[idx]);
  }
  std::vector<int> caps(k);
  for (int& c : caps) c = rng.uniform(1, max_cap);
  return GeneralizedPartitionMatroid::build(n, std::move(parts),
                                            std::move(caps));
}

}  // namespace

MatroidPair random_instance(const GeneratorParams& gp) {
  if (gp.n_elements < 1 || gp.max_parts < 1 || gp.max_cap < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator parameters must be positive");
  }
  Rng rng(gp.seed);
  auto m1 = random_gpm(rng, gp.n_elements, gp.max_parts, gp.max_cap);
  auto m2 = random_gpm(rng, gp.n_elements, gp.max_parts, gp.max_cap);
  return MatroidPair::make(std::move(m1), std::move(m2));
}

BipartiteInstance random_bipartite(const BipartiteGeneratorParams& gp) {
  if (gp.n_edges < 1 || gp.max_left < 1 || gp.max_right < 1 ||
      gp.max_cap < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator parameters must be positive");
  }
  Rng rng(gp.seed);
  const int nl = rng.uniform(1, std::min(gp.max_left, gp.n_edges));
  const int nr = rng.uniform(1, std::min(gp.max_right, gp.n_edges));
  BipartiteInstance g;
  g.left_caps.resize(nl);
  g.right_caps.resize(nr);
  for (int& c : g.left_caps) c = rng.uniform(1, gp.max_cap);
  for (int& c : g.right_caps) c = rng.uniform(1, gp.max_cap);
  // The first max(nl, nr) edges touch every vertex at least once.
  const int cover = std::max(nl, nr);
  std::vector<int> lefts(cover);
  std::vector<int> rights(cover);
  for (int e = 0; e < cover; ++e) {
    lefts[e] = e < nl ? e : rng.uniform(0, nl - 1);
    rights[e] = e < nr ? e : rng.uniform(0, nr - 1);
  }
  rng.shuffle(rights);
  for (int e = 0; e < gp.n_edges; ++e) {
    if (e < cover) {
      g.edges.emplace_back(lefts[e], rights[e]);
    } else {
      g.edges.emplace_back(rng.uniform(0, nl - 1), rng.uniform(0, nr - 1));
    }
  }
  rng.shuffle(g.edges);
  return g;
}

}  // namespace gpmc
