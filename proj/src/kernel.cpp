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

#include "gpmc/kernel.hpp"

#include <algorithm>
#include <string>

#include "gpmc/error.hpp"

namespace gpmc {
namespace {

void check_side(int side) {
  if (side != 1 && side != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "side must be 1 or 2, got " + std::to_string(side));
  }
}

std::vector<bool> membership(int n, std::span<const Element> s) {
  std::vector<bool> in(n, false);
  for (Element v : s) in[v] = true;
  return in;
}

void check_subset(int n, std::span<const Element> s,
                  const std::vector<bool>& ground, const char* what) {
  check_element_set(n, s);
  for (Element v : s) {
    if (!ground[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " element " + std::to_string(v) +
                      " is outside the ground set");
    }
  }
}

// Number of d-members in v's part on `side` that precede v.
int blockers(const OrderedContext& ctx, int side, std::span<const Element> d,
             Element v) {
  const GeneralizedPartitionMatroid& m = ctx.pair().side(side);
  const int part = m.part_of(v);
  int count = 0;
  for (Element u : d) {
    if (u != v && m.part_of(u) == part && ctx.less(side, u, v)) ++count;
  }
  return count;
}

bool dominated_unchecked(const OrderedContext& ctx, int side,
                         std::span<const Element> d,
                         const std::vector<bool>& in_d, Element v) {
  if (in_d[v]) return true;
  const GeneralizedPartitionMatroid& m = ctx.pair().side(side);
  return blockers(ctx, side, d, v) >= m.cap(m.part_of(v));
}

}  // namespace

OrderedContext OrderedContext::from_labels(MatroidPair pair,
                                           std::vector<int> labels) {
  const int n = pair.n_elements();
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(labels.size()) + " labels for " +
                    std::to_string(n) + " elements");
  }
  std::vector<bool> used(n + 1, false);
  for (int v = 0; v < n; ++v) {
    if (labels[v] < 1 || labels[v] > n || used[labels[v]]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "labels are not a permutation of 1.." + std::to_string(n));
    }
    used[labels[v]] = true;
  }
  return OrderedContext(std::move(pair), std::move(labels));
}

OrderedContext canonical_orders(const MatroidPair& p,
                                const Coloring& coloring) {
  const VerificationReport report = verify_coloring(p, coloring);
  if (!report.ok()) {
    throw Error(ErrorCode::kIncompleteColoring, report.violations.front());
  }
  std::vector<int> labels(p.n_elements(), 0);
  int next = 1;
  for (const ElementSet& cls : coloring.classes) {
    ElementSet sorted = to_element_set(cls);
    for (Element u : sorted) labels[u] = next++;
  }
  return OrderedContext::from_labels(p, std::move(labels));
}

bool dominates(const OrderedContext& ctx, int side, std::span<const Element> d,
               Element v, std::span<const Element> ground) {
  check_side(side);
  const int n = ctx.n_elements();
  check_element_set(n, ground);
  const std::vector<bool> in_ground = membership(n, ground);
  check_subset(n, d, in_ground, "dominating set");
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(v));
  }
  if (!in_ground[v]) {
    throw Error(ErrorCode::kInvalidArgument,
                "element " + std::to_string(v) + " is outside the ground set");
  }
  return dominated_unchecked(ctx, side, d, membership(n, d), v);
}

bool is_kernel(const OrderedContext& ctx, std::span<const Element> k,
               std::span<const Element> ground) {
  const int n = ctx.n_elements();
  check_element_set(n, ground);
  const std::vector<bool> in_ground = membership(n, ground);
  check_subset(n, k, in_ground, "kernel");
  if (!is_common_independent(ctx.pair(), k)) return false;
  const std::vector<bool> in_k = membership(n, k);
  for (Element v : ground) {
    if (!dominated_unchecked(ctx, 1, k, in_k, v) &&
        !dominated_unchecked(ctx, 2, k, in_k, v)) {
      return false;
    }
  }
  return true;
}

KernelResult find_kernel(const OrderedContext& ctx,
                         std::span<const Element> ground) {
  const int n = ctx.n_elements();
  check_element_set(n, ground);
  const MatroidPair& p = ctx.pair();

  // Side-1 parts hold their ground elements best-first.
  std::vector<std::vector<Element>> queue(p.m1().num_parts());
  for (Element v : ground) queue[p.m1().part_of(v)].push_back(v);
  for (auto& q : queue) {
    std::sort(q.begin(), q.end(),
              [&](Element a, Element b) { return ctx.less(1, a, b); });
  }

  KernelResult result;
  std::vector<bool> rejected(n, false);
  std::vector<std::vector<Element>> held(p.m2().num_parts());
  const int max_rounds = static_cast<int>(ground.size()) + 1;
  while (true) {
    if (++result.rounds > max_rounds) {
      throw Error(ErrorCode::kNoKernelFound, "deferred acceptance diverged");
    }
    for (auto& h : held) h.clear();
    std::vector<Element> proposed;
    for (int i = 0; i < p.m1().num_parts(); ++i) {
      int offered = 0;
      for (Element v : queue[i]) {
        if (offered == p.m1().cap(i)) break;
        if (rejected[v]) continue;
        held[p.m2().part_of(v)].push_back(v);
        proposed.push_back(v);
        ++offered;
      }
    }
    bool any_rejection = false;
    for (int j = 0; j < p.m2().num_parts(); ++j) {
      std::vector<Element>& h = held[j];
      const size_t cap = static_cast<size_t>(p.m2().cap(j));
      if (h.size() <= cap) continue;
      std::sort(h.begin(), h.end(),
                [&](Element a, Element b) { return ctx.less(2, a, b); });
      for (size_t r = cap; r < h.size(); ++r) {
        rejected[h[r]] = true;
        result.rejected.push_back(h[r]);
      }
      any_rejection = true;
    }
    if (!any_rejection) {
      result.kernel = to_element_set(proposed);
      break;
    }
  }
  if (!is_kernel(ctx, result.kernel, ground)) {
    throw Error(ErrorCode::kNoKernelFound,
                "deferred acceptance result is not a kernel");
  }
  return result;
}

}  // namespace gpmc
