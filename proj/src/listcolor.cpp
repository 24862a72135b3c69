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

#include "gpmc/listcolor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gpmc/error.hpp"

namespace gpmc {
namespace {

[[noreturn]] void invariant_failure(const std::string& what) {
  throw Error(ErrorCode::kInternalInvariantViolated, what);
}

// Size of the side-`side` gamma set of v within the live elements.
int gamma_size(const OrderedContext& ctx, const std::vector<bool>& live,
               int side, Element v) {
  const GeneralizedPartitionMatroid& m = ctx.pair().side(side);
  int count = 0;
  for (Element z : m.part(m.part_of(v))) {
    if (z != v && live[z] && ctx.less(side, z, v)) ++count;
  }
  return count;
}

// Per-element counters backing the inductive bounds
//   |gamma1(v)| <= (t(v) - 1) p + p - 1,   |gamma2(v)| <= (T(v) - t(v)) q + q - 1
// with 1 <= t(v) <= T(v) = |remaining list of v|. The coloring choices
// never read these; they only guard the run.
class Ledger {
 public:
  Ledger(const OrderedContext& ctx, const std::vector<int>& class_of,
         int colors)
      : ctx_(ctx), t_(class_of), big_t_(class_of.size(), colors) {}

  void dominated_on_side1(Element u) {
    --t_[u];
    --big_t_[u];
  }
  void dominated_on_side2(Element u) { --big_t_[u]; }

  void check(const std::vector<bool>& live,
             const std::vector<std::vector<std::string>>& lists,
             ListColorStats* stats) const {
    const MatroidPair& p = ctx_.pair();
    for (Element v = 0; v < static_cast<Element>(live.size()); ++v) {
      if (!live[v]) continue;
      const std::string who = "element " + std::to_string(v);
      if (t_[v] < 1 || t_[v] > big_t_[v]) {
        invariant_failure(who + ": t=" + std::to_string(t_[v]) +
                          " T=" + std::to_string(big_t_[v]));
      }
      if (big_t_[v] != static_cast<int>(lists[v].size())) {
        invariant_failure(who + ": T differs from remaining list size");
      }
      const int pc = p.m1().cap(p.m1().part_of(v));
      const int qc = p.m2().cap(p.m2().part_of(v));
      if (gamma_size(ctx_, live, 1, v) > (t_[v] - 1) * pc + pc - 1) {
        invariant_failure(who + ": side-1 gamma bound fails");
      }
      if (gamma_size(ctx_, live, 2, v) > (big_t_[v] - t_[v]) * qc + qc - 1) {
        invariant_failure(who + ": side-2 gamma bound fails");
      }
    }
    if (stats) ++stats->invariant_checks;
  }

 private:
  const OrderedContext& ctx_;
  std::vector<int> t_;
  std::vector<int> big_t_;
};

}  // namespace

void validate(const ListAssignment& la, int n_elements) {
  if (static_cast<int>(la.lists.size()) != n_elements) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(la.lists.size()) + " lists for " +
                    std::to_string(n_elements) + " elements");
  }
  for (size_t v = 0; v < la.lists.size(); ++v) {
    std::set<std::string> seen(la.lists[v].begin(), la.lists[v].end());
    if (seen.size() != la.lists[v].size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "list of element " + std::to_string(v) +
                      " repeats a token");
    }
  }
}

std::vector<Element> short_lists(const MatroidPair& p,
                                 const ListAssignment& la) {
  validate(la, p.n_elements());
  const size_t needed = static_cast<size_t>(chi_of_pair(p));
  std::vector<Element> out;
  for (size_t v = 0; v < la.lists.size(); ++v) {
    if (la.lists[v].size() < needed) out.push_back(static_cast<Element>(v));
  }
  return out;
}

GammaSets gamma_sets(const OrderedContext& ctx,
                     std::span<const Element> ground, Element v) {
  const int n = ctx.n_elements();
  check_element_set(n, ground);
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(v));
  }
  if (std::find(ground.begin(), ground.end(), v) == ground.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "element " + std::to_string(v) + " is outside the ground set");
  }
  const MatroidPair& p = ctx.pair();
  GammaSets out;
  for (Element z : ground) {
    if (z == v) continue;
    if (p.m1().part_of(z) == p.m1().part_of(v) && ctx.less(1, z, v)) {
      out.below1.push_back(z);
    }
    if (p.m2().part_of(z) == p.m2().part_of(v) && ctx.less(2, z, v)) {
      out.below2.push_back(z);
    }
  }
  std::sort(out.below1.begin(), out.below1.end());
  std::sort(out.below2.begin(), out.below2.end());
  return out;
}

ListColorer::ListColorer(const MatroidPair& p)
    : colors_(chi_of_pair(p)),
      coloring_(optimal_coloring(p)),
      ctx_(canonical_orders(p, coloring_)),
      class_of_(p.n_elements(), 0) {
  for (size_t k = 0; k < coloring_.classes.size(); ++k) {
    for (Element u : coloring_.classes[k]) {
      class_of_[u] = static_cast<int>(k) + 1;
    }
  }
}

ListColoringOutput ListColorer::color(const ListAssignment& la,
                                      ListColorStats* stats) const {
  const MatroidPair& p = ctx_.pair();
  const int n = p.n_elements();
  validate(la, n);
  std::string too_short;
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(la.lists[v].size()) < colors_) {
      too_short += (too_short.empty() ? "" : ", ") + std::to_string(v) +
                   " (" + std::to_string(la.lists[v].size()) + " < " +
                   std::to_string(colors_) + ")";
    }
  }
  if (!too_short.empty()) {
    throw Error(ErrorCode::kListTooShort, "elements " + too_short);
  }

  std::vector<std::vector<std::string>> lists(n);
  for (int v = 0; v < n; ++v) {
    lists[v] = la.lists[v];
    std::sort(lists[v].begin(), lists[v].end());
    lists[v].resize(colors_);
  }
  std::vector<bool> live(n, true);
  int remaining = n;
  Ledger ledger(ctx_, class_of_, colors_);
  ledger.check(live, lists, stats);

  ListColoringOutput out;
  out.assignment.assign(n, "");
  const int max_iterations = n * colors_;
  int iterations = 0;
  while (remaining > 0) {
    if (++iterations > max_iterations) {
      invariant_failure("list coloring did not terminate");
    }
    Element v = -1;
    for (Element u = 0; u < n; ++u) {
      if (live[u] && (v == -1 || lists[u].size() > lists[v].size())) v = u;
    }
    const std::string c = lists[v].front();
    ElementSet candidates;
    for (Element u = 0; u < n; ++u) {
      if (live[u] &&
          std::binary_search(lists[u].begin(), lists[u].end(), c)) {
        candidates.push_back(u);
      }
    }
    const KernelResult kernel = find_kernel(ctx_, candidates);
    if (kernel.kernel.empty()) invariant_failure("empty kernel");
    std::vector<bool> in_kernel(n, false);
    for (Element u : kernel.kernel) {
      in_kernel[u] = true;
      out.assignment[u] = c;
      live[u] = false;
      --remaining;
    }
    for (Element u : candidates) {
      if (in_kernel[u]) continue;
      const auto pos = std::lower_bound(lists[u].begin(), lists[u].end(), c);
      lists[u].erase(pos);
      if (dominates(ctx_, 1, kernel.kernel, u, candidates)) {
        ledger.dominated_on_side1(u);
      } else if (dominates(ctx_, 2, kernel.kernel, u, candidates)) {
        ledger.dominated_on_side2(u);
      } else {
        invariant_failure("element " + std::to_string(u) +
                          " not dominated by the kernel");
      }
    }
    ledger.check(live, lists, stats);
    if (stats) {
      ++stats->iterations;
      stats->kernel_elements += static_cast<int>(kernel.kernel.size());
    }
  }
  return out;
}

ListColoringOutput list_color(const MatroidPair& p, const ListAssignment& la) {
  return ListColorer(p).color(la);
}

VerificationReport verify_list_coloring(const MatroidPair& p,
                                        const ListAssignment& la,
                                        const ListColoringOutput& out) {
  VerificationReport report;
  const int n = p.n_elements();
  if (static_cast<int>(la.lists.size()) != n ||
      static_cast<int>(out.assignment.size()) != n) {
    report.violations.push_back(
        "expected " + std::to_string(n) + " lists and assignments, got " +
        std::to_string(la.lists.size()) + " and " +
        std::to_string(out.assignment.size()));
    return report;
  }
  std::map<std::string, ElementSet> fibers;
  for (int v = 0; v < n; ++v) {
    const auto& list = la.lists[v];
    if (std::find(list.begin(), list.end(), out.assignment[v]) == list.end()) {
      report.violations.push_back("element " + std::to_string(v) +
                                  ": token \"" + out.assignment[v] +
                                  "\" is not in its list");
    }
    fibers[out.assignment[v]].push_back(v);
  }
  for (const auto& [token, fiber] : fibers) {
    for (int side = 1; side <= 2; ++side) {
      const GeneralizedPartitionMatroid& m = p.side(side);
      std::vector<int> load(m.num_parts(), 0);
      for (Element u : fiber) ++load[m.part_of(u)];
      for (int i = 0; i < m.num_parts(); ++i) {
        if (load[i] > m.cap(i)) {
          report.violations.push_back(
              "token \"" + token + "\": matroid" + std::to_string(side) +
              " part " + std::to_string(i) + " holds " +
              std::to_string(load[i]) + " > cap " + std::to_string(m.cap(i)));
        }
      }
    }
  }
  return report;
}

}  // namespace gpmc
