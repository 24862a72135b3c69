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

#include "gpmc/core.hpp"

#include <algorithm>
#include <string>

namespace gpmc {
namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Per-part element counts of s.
std::vector<int> part_counts(const GeneralizedPartitionMatroid& m,
                             std::span<const Element> s) {
  std::vector<int> counts(m.num_parts(), 0);
  for (Element v : s) ++counts[m.part_of(v)];
  return counts;
}

}  // namespace

GeneralizedPartitionMatroid GeneralizedPartitionMatroid::build(
    int n_elements, std::vector<std::vector<Element>> parts,
    std::vector<int> caps) {
  if (n_elements < 1) {
    fail(ErrorCode::kInvalidArgument, "ground set must be nonempty");
  }
  if (parts.size() != caps.size()) {
    fail(ErrorCode::kLengthMismatch,
         std::to_string(parts.size()) + " parts but " +
             std::to_string(caps.size()) + " caps");
  }
  for (size_t i = 0; i < caps.size(); ++i) {
    if (caps[i] < 1) {
      fail(ErrorCode::kNonPositiveCap,
           "part " + std::to_string(i) + " has cap " + std::to_string(caps[i]));
    }
  }
  std::vector<int> part_of(n_elements, -1);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) {
      fail(ErrorCode::kEmptyPart, "part " + std::to_string(i) + " is empty");
    }
    for (Element v : parts[i]) {
      if (v < 0 || v >= n_elements) {
        fail(ErrorCode::kElementOutOfRange,
             "element " + std::to_string(v) + " in part " + std::to_string(i));
      }
      if (part_of[v] != -1) {
        fail(ErrorCode::kOverlappingParts,
             "element " + std::to_string(v) + " appears in parts " +
                 std::to_string(part_of[v]) + " and " + std::to_string(i));
      }
      part_of[v] = static_cast<int>(i);
    }
    std::sort(parts[i].begin(), parts[i].end());
  }
  for (int v = 0; v < n_elements; ++v) {
    if (part_of[v] == -1) {
      fail(ErrorCode::kUncoveredElement,
           "element " + std::to_string(v) + " is in no part");
    }
  }
  GeneralizedPartitionMatroid m;
  m.n_elements_ = n_elements;
  m.parts_ = std::move(parts);
  m.caps_ = std::move(caps);
  m.part_of_ = std::move(part_of);
  return m;
}

MatroidPair MatroidPair::make(GeneralizedPartitionMatroid m1,
                              GeneralizedPartitionMatroid m2) {
  if (m1.n_elements() != m2.n_elements()) {
    fail(ErrorCode::kLengthMismatch,
         "ground sets differ: " + std::to_string(m1.n_elements()) + " vs " +
             std::to_string(m2.n_elements()));
  }
  return MatroidPair(std::move(m1), std::move(m2));
}

void validate(const BipartiteInstance& g) {
  auto check_caps = [](const std::vector<int>& caps, const char* side) {
    for (size_t i = 0; i < caps.size(); ++i) {
      if (caps[i] < 1) {
        fail(ErrorCode::kNonPositiveCap, std::string(side) + " vertex " +
                                             std::to_string(i) + " has cap " +
                                             std::to_string(caps[i]));
      }
    }
  };
  check_caps(g.left_caps, "left");
  check_caps(g.right_caps, "right");
  const int nl = static_cast<int>(g.left_caps.size());
  const int nr = static_cast<int>(g.right_caps.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [l, r] = g.edges[e];
    if (l < 0 || l >= nl || r < 0 || r >= nr) {
      fail(ErrorCode::kVertexOutOfRange,
           "edge " + std::to_string(e) + " = (" + std::to_string(l) + ", " +
               std::to_string(r) + ")");
    }
  }
}

void check_element_set(int n, std::span<const Element> s) {
  std::vector<bool> seen(n, false);
  for (Element v : s) {
    if (v < 0 || v >= n) {
      fail(ErrorCode::kElementOutOfRange,
           "element " + std::to_string(v) + " not in [0, " +
               std::to_string(n) + ")");
    }
    if (seen[v]) {
      fail(ErrorCode::kInvalidArgument,
           "element " + std::to_string(v) + " repeated in set");
    }
    seen[v] = true;
  }
}

ElementSet to_element_set(std::span<const Element> s) {
  ElementSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_independent(const GeneralizedPartitionMatroid& m,
                    std::span<const Element> s) {
  check_element_set(m.n_elements(), s);
  const std::vector<int> counts = part_counts(m, s);
  for (int i = 0; i < m.num_parts(); ++i) {
    if (counts[i] > m.cap(i)) return false;
  }
  return true;
}

bool is_common_independent(const MatroidPair& p, std::span<const Element> s) {
  return is_independent(p.m1(), s) && is_independent(p.m2(), s);
}

ElementSet span(const GeneralizedPartitionMatroid& m,
                std::span<const Element> a) {
  check_element_set(m.n_elements(), a);
  const std::vector<int> counts = part_counts(m, a);
  ElementSet out;
  for (Element v : a) {
    if (counts[m.part_of(v)] < m.cap(m.part_of(v))) out.push_back(v);
  }
  for (int i = 0; i < m.num_parts(); ++i) {
    if (counts[i] >= m.cap(i)) {
      out.insert(out.end(), m.part(i).begin(), m.part(i).end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteView to_bipartite(const MatroidPair& p) {
  BipartiteView view;
  view.graph.left_caps = p.m1().caps();
  view.graph.right_caps = p.m2().caps();
  const int n = p.n_elements();
  view.graph.edges.reserve(n);
  view.edge_to_element.reserve(n);
  for (Element u = 0; u < n; ++u) {
    view.graph.edges.emplace_back(p.m1().part_of(u), p.m2().part_of(u));
    view.edge_to_element.push_back(u);
  }
  return view;
}

MatroidPairView from_bipartite(const BipartiteInstance& g) {
  validate(g);
  const int m = static_cast<int>(g.edges.size());
  std::vector<std::vector<Element>> left(g.left_caps.size());
  std::vector<std::vector<Element>> right(g.right_caps.size());
  for (int e = 0; e < m; ++e) {
    left[g.edges[e].first].push_back(e);
    right[g.edges[e].second].push_back(e);
  }
  for (size_t x = 0; x < left.size(); ++x) {
    if (left[x].empty()) {
      fail(ErrorCode::kIsolatedVertex, "left vertex " + std::to_string(x));
    }
  }
  for (size_t y = 0; y < right.size(); ++y) {
    if (right[y].empty()) {
      fail(ErrorCode::kIsolatedVertex, "right vertex " + std::to_string(y));
    }
  }
  auto m1 = GeneralizedPartitionMatroid::build(m, std::move(left), g.left_caps);
  auto m2 =
      GeneralizedPartitionMatroid::build(m, std::move(right), g.right_caps);
  std::vector<int> element_to_edge(m);
  for (int e = 0; e < m; ++e) element_to_edge[e] = e;
  return {MatroidPair::make(std::move(m1), std::move(m2)),
          std::move(element_to_edge)};
}

bool is_simple_b_matching(const BipartiteInstance& g, std::span<const int> f) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<bool> seen(m, false);
  std::vector<int> left_deg(g.left_caps.size(), 0);
  std::vector<int> right_deg(g.right_caps.size(), 0);
  for (int e : f) {
    if (e < 0 || e >= m) {
      fail(ErrorCode::kEdgeIndexOutOfRange,
           "edge " + std::to_string(e) + " not in [0, " + std::to_string(m) +
               ")");
    }
    if (seen[e]) {
      fail(ErrorCode::kInvalidArgument,
           "edge " + std::to_string(e) + " repeated in set");
    }
    seen[e] = true;
    ++left_deg[g.edges[e].first];
    ++right_deg[g.edges[e].second];
  }
  for (size_t x = 0; x < left_deg.size(); ++x) {
    if (left_deg[x] > g.left_caps[x]) return false;
  }
  for (size_t y = 0; y < right_deg.size(); ++y) {
    if (right_deg[y] > g.right_caps[y]) return false;
  }
  return true;
}

}  // namespace gpmc
