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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or runs over its time budget.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gpmc/chromatic.hpp"
#include "gpmc/circulation.hpp"
#include "gpmc/core.hpp"
#include "gpmc/kernel.hpp"
#include "gpmc/listcolor.hpp"
#include "gpmc/oracle.hpp"

namespace {

using namespace gpmc;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
};

// ---------------------------------------------------------------------------
// Enumeration helpers.

// Restricted growth strings of length n with at most max_blocks blocks.
void for_each_rgs(int n, int max_blocks,
                  const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      fn(a);
      return;
    }
    for (int b = 0; b <= std::min(used, max_blocks - 1); ++b) {
      a[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) {
    rec(1, 1);
  }
}

std::vector<std::vector<Element>> blocks_of(const std::vector<int>& rgs) {
  const int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
  std::vector<std::vector<Element>> parts(k);
  for (size_t v = 0; v < rgs.size(); ++v) parts[rgs[v]].push_back(v);
  return parts;
}

// Calls fn with every cap vector where caps[i] is drawn from choices(i).
void for_each_caps(const std::vector<std::vector<int>>& choices,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> caps(choices.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == choices.size()) {
      fn(caps);
      return;
    }
    for (int c : choices[i]) {
      caps[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

struct SideConfig {
  std::vector<std::vector<Element>> parts;
  std::vector<int> caps;
};

// Every matroid on n elements with at most max_parts parts; caps drawn by
// cap_choices from the part size.
std::vector<SideConfig> all_sides(
    int n, int max_parts,
    const std::function<std::vector<int>(int)>& cap_choices) {
  std::vector<SideConfig> out;
  for_each_rgs(n, max_parts, [&](const std::vector<int>& rgs) {
    const auto parts = blocks_of(rgs);
    std::vector<std::vector<int>> choices;
    for (const auto& part : parts) {
      choices.push_back(cap_choices(static_cast<int>(part.size())));
    }
    for_each_caps(choices, [&](const std::vector<int>& caps) {
      out.push_back({parts, caps});
    });
  });
  return out;
}

MatroidPair pair_of(int n, const SideConfig& a, const SideConfig& b) {
  return MatroidPair::make(GeneralizedPartitionMatroid::build(n, a.parts, a.caps),
                           GeneralizedPartitionMatroid::build(n, b.parts, b.caps));
}

std::string key_of(const MatroidPair& p) {
  std::ostringstream s;
  s << p.n_elements();
  for (int side = 1; side <= 2; ++side) {
    const auto& m = p.side(side);
    s << '|';
    for (int i = 0; i < m.num_parts(); ++i) {
      s << '[';
      for (Element v : m.part(i)) s << v << ',';
      s << ']' << m.cap(i);
    }
  }
  return s.str();
}

ElementSet all_elements(int n) {
  ElementSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

ElementSet subset_of(uint32_t mask, int n) {
  ElementSet s;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1u) s.push_back(v);
  }
  return s;
}

// ---------------------------------------------------------------------------
// 1. chi_of_pair against brute force.

Outcome formula_exactness() {
  Outcome r;
  long long full = 0;
  const auto caps_upto3 = [](int) { return std::vector<int>{1, 2, 3}; };
  for (int n = 1; n <= 5 && r.ok; ++n) {
    const std::vector<SideConfig> sides = all_sides(n, 3, caps_upto3);
    for (const SideConfig& a : sides) {
      for (const SideConfig& b : sides) {
        const MatroidPair p = pair_of(n, a, b);
        ++full;
        if (brute_chi(p) != chi_of_pair(p)) r.fail(key_of(p));
      }
    }
  }

  std::set<std::string> seen;
  long long draws = 0;
  for (uint64_t seed = 0; seen.size() < 5000 && draws < 200000; ++seed) {
    Rng rng(seed);
    const int n = rng.uniform(1, 8);
    const MatroidPair p = random_instance({n, 3, 3, seed});
    ++draws;
    if (!seen.insert(key_of(p)).second) continue;
    if (brute_chi(p) != chi_of_pair(p)) r.fail(key_of(p));
  }
  if (seen.size() < 5000) r.fail("only " + std::to_string(seen.size()) +
                                 " distinct seeded instances");
  r.detail = std::to_string(full) + " enumerated (n<=5) + " +
             std::to_string(seen.size()) + " distinct seeded (n<=8)";
  return r;
}

// ---------------------------------------------------------------------------
// 2. optimal_coloring uses exactly chi classes.

Outcome constructive_optimality() {
  Outcome r;
  int max_n = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed * 7919 + 1);
    const int n = rng.uniform(1, 60);
    const MatroidPair p =
        random_instance({n, rng.uniform(1, 12), rng.uniform(1, 5), seed});
    max_n = std::max(max_n, n);
    const Coloring c = optimal_coloring(p);
    size_t covered = 0;
    for (const ElementSet& cls : c.classes) {
      covered += cls.size();
      if (!is_common_independent(p, cls)) r.fail("dependent class, seed " +
                                                 std::to_string(seed));
    }
    if (static_cast<int>(c.classes.size()) != chi_of_pair(p) ||
        covered != static_cast<size_t>(n) || !verify_coloring(p, c).ok()) {
      r.fail("seed " + std::to_string(seed));
    }
  }
  r.detail = "1000 instances, n<=" + std::to_string(max_n);
  return r;
}

// ---------------------------------------------------------------------------
// 3. Circulation feasibility and cuts.

Outcome hoffman_engine() {
  Outcome r;
  int feasible = 0;
  for (uint64_t seed = 0; seed < 10000; ++seed) {
    Rng rng(seed);
    CirculationInstance inst;
    inst.n_vertices = rng.uniform(1, 5);
    const int arcs = rng.uniform(0, 8);
    for (int a = 0; a < arcs; ++a) {
      const int lower = rng.uniform(0, 2);
      inst.arcs.push_back({rng.uniform(0, inst.n_vertices - 1),
                           rng.uniform(0, inst.n_vertices - 1), lower,
                           rng.uniform(lower, 2)});
    }
    const CirculationResult res = solve_circulation(inst);
    if (res.feasible() != brute_circulation_feasible(inst)) {
      r.fail("feasibility mismatch, seed " + std::to_string(seed));
      continue;
    }
    if (res.feasible()) {
      ++feasible;
      if (!is_feasible_circulation(inst, *res.flow)) {
        r.fail("bad flow, seed " + std::to_string(seed));
      }
    } else if (!violating_cut_check(inst, res.cut).violated()) {
      r.fail("cut not violated, seed " + std::to_string(seed));
    }
  }
  r.detail = "10000 instances, " + std::to_string(feasible) + " feasible";
  return r;
}

// ---------------------------------------------------------------------------
// 4. find_kernel lands in the brute-force kernel set.

Outcome kernel_correctness() {
  Outcome r;
  long long checks = 0;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    Rng rng(seed + 1000003);
    const MatroidPair p =
        random_instance({n, rng.uniform(1, 4), rng.uniform(1, 3), seed});
    std::vector<int> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), 1);
    rng.shuffle(shuffled);
    const std::vector<OrderedContext> contexts{
        canonical_orders(p, optimal_coloring(p)),
        OrderedContext::from_labels(p, shuffled)};
    std::vector<ElementSet> grounds{all_elements(n)};
    for (int g = 0; g < 3; ++g) {
      grounds.push_back(subset_of(static_cast<uint32_t>(rng.next()) &
                                      ((1u << n) - 1),
                                  n));
    }
    for (const OrderedContext& ctx : contexts) {
      for (const ElementSet& ground : grounds) {
        ++checks;
        const std::vector<ElementSet> all = brute_kernel(ctx, ground);
        if (all.empty()) {
          r.fail("no kernel, seed " + std::to_string(seed));
          continue;
        }
        const KernelResult k = find_kernel(ctx, ground);
        if (std::find(all.begin(), all.end(), k.kernel) == all.end()) {
          r.fail("kernel not in brute set, seed " + std::to_string(seed));
        }
      }
    }
  }
  r.detail = std::to_string(checks) + " (orders, ground) pairs over 500 seeds";
  return r;
}

// ---------------------------------------------------------------------------
// 5(a). Every instance with n <= 6 and chi <= 3, up to relabeling elements,
// against every list assignment of size chi from a palette of chi + 1.

struct Side1Shape {
  SideConfig config;
  // (size, cap) of the part holding each element.
  std::vector<std::pair<int, int>> tag;
  std::vector<int> part_of;
};

std::vector<int> useful_caps(int size) {
  // Caps above the part size are equivalent to the part size; chi <= 3
  // needs size <= 3 * cap.
  std::vector<int> caps;
  for (int c = 1; c <= size; ++c) {
    if (size <= 3 * c) caps.push_back(c);
  }
  return caps;
}

// Side 1 up to isomorphism: contiguous parts in non-increasing (size, cap).
std::vector<Side1Shape> side1_shapes(int n) {
  std::vector<Side1Shape> out;
  std::vector<std::pair<int, int>> blocks;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      Side1Shape s;
      int next = 0;
      for (auto [size, cap] : blocks) {
        std::vector<Element> part;
        for (int k = 0; k < size; ++k) {
          part.push_back(next++);
          s.tag.emplace_back(size, cap);
          s.part_of.push_back(static_cast<int>(s.config.parts.size()));
        }
        s.config.parts.push_back(part);
        s.config.caps.push_back(cap);
      }
      out.push_back(s);
      return;
    }
    for (int size = left; size >= 1; --size) {
      for (int cap : useful_caps(size)) {
        const std::pair<int, int> b{size, cap};
        if (!blocks.empty() && b > blocks.back()) continue;
        blocks.push_back(b);
        rec(left - size);
        blocks.pop_back();
      }
    }
  };
  rec(n);
  return out;
}

// Element permutations mapping side 1 onto itself.
std::vector<std::vector<int>> stabilizer(const Side1Shape& s, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (s.tag[u] != s.tag[pi[u]]) ok = false;
      for (int v = u + 1; v < n && ok; ++v) {
        if ((s.part_of[u] == s.part_of[v]) !=
            (s.part_of[pi[u]] == s.part_of[pi[v]])) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

// Canonical encoding of a side-2 configuration after relabeling by pi.
std::vector<int> encode(const std::vector<int>& rgs, const std::vector<int>& caps,
                        const std::vector<int>& pi) {
  const int n = static_cast<int>(rgs.size());
  std::vector<int> moved(n);
  for (int u = 0; u < n; ++u) moved[pi[u]] = rgs[u];
  std::vector<int> rename(caps.size(), -1);
  std::vector<int> code;
  std::vector<int> cap_code;
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (rename[moved[v]] < 0) {
      rename[moved[v]] = next++;
      cap_code.push_back(caps[moved[v]]);
    }
    code.push_back(rename[moved[v]]);
  }
  code.insert(code.end(), cap_code.begin(), cap_code.end());
  return code;
}

Outcome list_coloring_exhaustive() {
  Outcome r;
  long long instances = 0;
  long long assignments = 0;
  long long invariant_checks = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Side1Shape& s1 : side1_shapes(n)) {
      const std::vector<std::vector<int>> group = stabilizer(s1, n);
      std::set<std::vector<int>> seen;
      for_each_rgs(n, n, [&](const std::vector<int>& rgs) {
        const auto parts = blocks_of(rgs);
        std::vector<std::vector<int>> choices;
        for (const auto& part : parts) {
          choices.push_back(useful_caps(static_cast<int>(part.size())));
        }
        for_each_caps(choices, [&](const std::vector<int>& caps) {
          std::vector<int> best = encode(rgs, caps, group[0]);
          for (const auto& pi : group) {
            best = std::min(best, encode(rgs, caps, pi));
          }
          if (!seen.insert(best).second) return;
          const MatroidPair p = pair_of(n, s1.config, {parts, caps});
          const int c = chi_of_pair(p);
          if (c > 3) return;
          ++instances;
          const ListColorer colorer(p);
          std::vector<std::string> palette;
          for (int t = 0; t <= c; ++t) palette.push_back("t" + std::to_string(t));
          // Each list is the palette minus one token.
          std::vector<int> missing(n, 0);
          ListAssignment la{std::vector<std::vector<std::string>>(n)};
          while (true) {
            for (int v = 0; v < n; ++v) {
              la.lists[v].clear();
              for (int t = 0; t <= c; ++t) {
                if (t != missing[v]) la.lists[v].push_back(palette[t]);
              }
            }
            ++assignments;
            try {
              ListColorStats stats;
              const ListColoringOutput out = colorer.color(la, &stats);
              invariant_checks += stats.invariant_checks;
              if (!verify_list_coloring(p, la, out).ok()) r.fail(key_of(p));
            } catch (const Error& e) {
              r.fail(key_of(p) + ": " + e.what());
            }
            int v = 0;
            while (v < n && missing[v] == c) missing[v++] = 0;
            if (v == n) break;
            ++missing[v];
          }
        });
      });
    }
  }
  r.detail = std::to_string(instances) + " instances up to isomorphism, " +
             std::to_string(assignments) + " assignments, " +
             std::to_string(invariant_checks) + " invariant checks";
  return r;
}

// 5(b). Random instances with lists from palettes up to 4C.

Outcome list_coloring_random() {
  Outcome r;
  long long invariant_checks = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed * 104729 + 3);
    const int n = rng.uniform(1, 40);
    const MatroidPair p =
        random_instance({n, rng.uniform(1, 10), rng.uniform(1, 4), seed});
    const int c = chi_of_pair(p);
    const int palette_size = rng.uniform(c, 4 * c);
    std::vector<std::string> palette;
    for (int t = 0; t < palette_size; ++t) palette.push_back("p" + std::to_string(t));
    ListAssignment la;
    for (int v = 0; v < n; ++v) {
      std::vector<std::string> pick = palette;
      rng.shuffle(pick);
      pick.resize(c);
      la.lists.push_back(pick);
    }
    try {
      ListColorStats stats;
      const ListColoringOutput out = ListColorer(p).color(la, &stats);
      invariant_checks += stats.invariant_checks;
      if (!verify_list_coloring(p, la, out).ok()) {
        r.fail("seed " + std::to_string(seed));
      }
    } catch (const Error& e) {
      r.fail("seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  r.detail = "1000 instances, " + std::to_string(invariant_checks) +
             " invariant checks, none fired";
  return r;
}

// ---------------------------------------------------------------------------
// 6. Simple bipartite graphs: edge chromatic number and list edge colorings.

Outcome bipartite_specialization() {
  Outcome r;
  int brute_chi_checked = 0;
  int brute_list_checked = 0;
  int sharp_checked = 0;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed + 555);
    const int m = rng.uniform(1, 20);
    const BipartiteInstance g = random_bipartite(
        {m, rng.uniform(1, 6), rng.uniform(1, 6), 1, seed});
    const MatroidPair p = from_bipartite(g).pair;
    std::map<std::pair<int, int>, int> degree;
    int max_degree = 0;
    for (const auto& [l, rr] : g.edges) {
      max_degree = std::max(max_degree, ++degree[{0, l}]);
      max_degree = std::max(max_degree, ++degree[{1, rr}]);
    }
    const std::string tag = "seed " + std::to_string(seed);
    if (chi_of_pair(p) != max_degree) r.fail(tag + ": chi != max degree");
    const Coloring c = optimal_coloring(p);
    if (static_cast<int>(c.classes.size()) != max_degree ||
        !verify_coloring(p, c).ok()) {
      r.fail(tag + ": coloring");
    }
    if (m <= kBruteChiMaxElements) {
      ++brute_chi_checked;
      if (brute_chi(p) != max_degree) r.fail(tag + ": brute chi");
    }

    std::vector<std::string> palette;
    const int palette_size = rng.uniform(max_degree, 2 * max_degree);
    for (int t = 0; t < palette_size; ++t) palette.push_back("e" + std::to_string(t));
    ListAssignment la;
    for (int e = 0; e < m; ++e) {
      std::vector<std::string> pick = palette;
      rng.shuffle(pick);
      pick.resize(max_degree);
      la.lists.push_back(pick);
    }
    const ListColoringOutput out = list_color(p, la);
    if (!verify_list_coloring(p, la, out).ok()) r.fail(tag + ": list coloring");
    double product = 1;
    for (int e = 0; e < m; ++e) product *= max_degree;
    if (product <= kBruteListMaxProduct) {
      ++brute_list_checked;
      if (!brute_list_color(p, la)) r.fail(tag + ": brute list");
      // One color fewer on every edge must fail.
      if (max_degree > 1) {
        ++sharp_checked;
        std::vector<std::string> shared(palette.begin(),
                                        palette.begin() + max_degree - 1);
        const ListAssignment tight{
            std::vector<std::vector<std::string>>(m, shared)};
        if (brute_list_color(p, tight)) r.fail(tag + ": lists of size max-1");
      }
    }
  }
  r.detail = "500 graphs, brute chi on " + std::to_string(brute_chi_checked) +
             ", brute lists on " + std::to_string(brute_list_checked) +
             ", sharpness on " + std::to_string(sharp_checked);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Both conversions preserve independence on every subset.

bool same_on_all_subsets(const MatroidPair& p, const BipartiteInstance& g,
                         const std::vector<int>& element_to_edge) {
  const int n = p.n_elements();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    const ElementSet s = subset_of(mask, n);
    std::vector<int> f;
    for (Element v : s) f.push_back(element_to_edge[v]);
    if (is_common_independent(p, s) != is_simple_b_matching(g, f)) return false;
  }
  return true;
}

Outcome correspondence() {
  Outcome r;
  long long subsets = 0;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed + 77);
    const std::string tag = "seed " + std::to_string(seed);

    // Matroid pair -> graph -> matroid pair.
    const int n = rng.uniform(1, 10);
    const MatroidPair p =
        random_instance({n, rng.uniform(1, 4), rng.uniform(1, 3), seed});
    const BipartiteView view = to_bipartite(p);
    std::vector<int> to_edge(n);
    for (size_t e = 0; e < view.edge_to_element.size(); ++e) {
      to_edge[view.edge_to_element[e]] = static_cast<int>(e);
    }
    if (!same_on_all_subsets(p, view.graph, to_edge)) r.fail(tag + ": to_bipartite");
    const MatroidPairView back = from_bipartite(view.graph);
    std::vector<int> back_edge(n);
    for (int v = 0; v < n; ++v) back_edge[v] = back.element_to_edge[v];
    if (!same_on_all_subsets(back.pair, view.graph, back_edge)) {
      r.fail(tag + ": round trip from pair");
    }
    subsets += 2LL << n;

    // Graph -> matroid pair -> graph.
    const int m = rng.uniform(1, 10);
    const BipartiteInstance g = random_bipartite(
        {m, rng.uniform(1, 5), rng.uniform(1, 5), rng.uniform(1, 3), seed});
    const MatroidPairView mp = from_bipartite(g);
    if (!same_on_all_subsets(mp.pair, g, mp.element_to_edge)) {
      r.fail(tag + ": from_bipartite");
    }
    const BipartiteView again = to_bipartite(mp.pair);
    std::vector<int> again_edge(m);
    for (size_t e = 0; e < again.edge_to_element.size(); ++e) {
      again_edge[again.edge_to_element[e]] = static_cast<int>(e);
    }
    if (!same_on_all_subsets(mp.pair, again.graph, again_edge)) {
      r.fail(tag + ": round trip from graph");
    }
    subsets += 2LL << m;
  }
  r.detail = "1000 round trips, " + std::to_string(subsets) + " subsets";
  return r;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"1 formula exactness", 300, formula_exactness},
      {"2 constructive optimality", 60, constructive_optimality},
      {"3 hoffman engine", 60, hoffman_engine},
      {"4 kernel correctness", 120, kernel_correctness},
      {"5a list coloring exhaustive", 600, list_coloring_exhaustive},
      {"5b list coloring random", 600, list_coloring_random},
      {"6 bipartite specialization", 60, bipartite_specialization},
      {"7 correspondence round trip", 60, correspondence},
  };
  int failures = 0;
  double list_seconds = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.name[0] == '5') list_seconds += secs;
    bool over = secs > c.budget_seconds;
    // Both halves of 5 share one budget.
    if (c.name[0] == '5' && list_seconds > 600) over = true;
    if (over) out.fail("over budget");
    std::printf("%s criterion %s: %s (%.2fs)\n", out.ok ? "PASS" : "FAIL",
                c.name, out.detail.c_str(), secs);
    if (!out.ok) {
      std::printf("  first failure: %s\n", out.first_failure.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
