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

#include "gpmc/circulation.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "gpmc/error.hpp"

namespace gpmc {
namespace {

// Residual network for shortest-augmenting-path max-flow.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n) {}

  // Returns the index of the forward edge; its reverse is index ^ 1.
  int add_edge(int from, int to, int64_t capacity) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    residual_.push_back(capacity);
    adj_[from].push_back(id);
    to_.push_back(from);
    residual_.push_back(0);
    adj_[to].push_back(id + 1);
    return id;
  }

  int64_t max_flow(int source, int sink) {
    int64_t total = 0;
    const int n = static_cast<int>(adj_.size());
    std::vector<int> parent_edge(n);
    while (true) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      parent_edge[source] = -2;
      while (!queue.empty() && parent_edge[sink] == -1) {
        const int u = queue.front();
        queue.pop();
        for (int id : adj_[u]) {
          if (residual_[id] > 0 && parent_edge[to_[id]] == -1) {
            parent_edge[to_[id]] = id;
            queue.push(to_[id]);
          }
        }
      }
      if (parent_edge[sink] == -1) return total;
      int64_t push = std::numeric_limits<int64_t>::max();
      for (int v = sink; v != source; v = to_[parent_edge[v] ^ 1]) {
        push = std::min(push, residual_[parent_edge[v]]);
      }
      for (int v = sink; v != source; v = to_[parent_edge[v] ^ 1]) {
        residual_[parent_edge[v]] -= push;
        residual_[parent_edge[v] ^ 1] += push;
      }
      total += push;
    }
  }

  // Vertices reachable from source in the residual graph.
  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int id : adj_[u]) {
        if (residual_[id] > 0 && !seen[to_[id]]) {
          seen[to_[id]] = true;
          queue.push(to_[id]);
        }
      }
    }
    return seen;
  }

  // Flow pushed along a forward edge.
  int64_t flow_on(int id) const { return residual_[id ^ 1]; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<int64_t> residual_;
};

}  // namespace

void validate(const CirculationInstance& inst) {
  if (inst.n_vertices < 0) {
    throw Error(ErrorCode::kMalformedInstance, "negative vertex count");
  }
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    const Arc& arc = inst.arcs[a];
    const std::string where = "arc " + std::to_string(a);
    if (arc.tail < 0 || arc.tail >= inst.n_vertices || arc.head < 0 ||
        arc.head >= inst.n_vertices) {
      throw Error(ErrorCode::kMalformedInstance, where + ": bad endpoint");
    }
    if (arc.lower < 0) {
      throw Error(ErrorCode::kMalformedInstance, where + ": negative lower");
    }
    if (arc.upper && *arc.upper < arc.lower) {
      throw Error(ErrorCode::kMalformedInstance, where + ": lower > upper");
    }
  }
}

CirculationResult solve_circulation(const CirculationInstance& inst) {
  validate(inst);
  const int n = inst.n_vertices;
  // Stands in for unbounded arcs; exceeds any total a feasible flow can route.
  int64_t big = 1;
  for (const Arc& arc : inst.arcs) big += arc.lower + arc.upper.value_or(0);

  // Send the lower bounds up front; the remainder is a plain max-flow from
  // the vertices with surplus to those with deficit.
  const int source = n;
  const int sink = n + 1;
  FlowNetwork net(n + 2);
  std::vector<int64_t> excess(n, 0);
  std::vector<int> edge_of(inst.arcs.size());
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    const Arc& arc = inst.arcs[a];
    const int64_t upper = arc.upper.value_or(big);
    edge_of[a] = net.add_edge(arc.tail, arc.head, upper - arc.lower);
    excess[arc.head] += arc.lower;
    excess[arc.tail] -= arc.lower;
  }
  int64_t required = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      net.add_edge(source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      net.add_edge(v, sink, -excess[v]);
    }
  }
  const int64_t routed = net.max_flow(source, sink);

  CirculationResult result;
  if (routed == required) {
    std::vector<int64_t> flow(inst.arcs.size());
    for (size_t a = 0; a < inst.arcs.size(); ++a) {
      flow[a] = inst.arcs[a].lower + net.flow_on(edge_of[a]);
    }
    result.flow = std::move(flow);
  } else {
    const std::vector<bool> seen = net.reachable(source);
    for (int v = 0; v < n; ++v) {
      if (seen[v]) result.cut.push_back(v);
    }
  }
  return result;
}

CutSums violating_cut_check(const CirculationInstance& inst,
                            std::span<const int> u) {
  std::vector<bool> inside(inst.n_vertices, false);
  for (int v : u) {
    if (v < 0 || v >= inst.n_vertices) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in [0, " +
                      std::to_string(inst.n_vertices) + ")");
    }
    inside[v] = true;
  }
  CutSums sums;
  sums.upper_out = 0;
  for (const Arc& arc : inst.arcs) {
    if (!inside[arc.tail] && inside[arc.head]) sums.lower_in += arc.lower;
    if (inside[arc.tail] && !inside[arc.head]) {
      if (!arc.upper) {
        sums.upper_out.reset();
      } else if (sums.upper_out) {
        *sums.upper_out += *arc.upper;
      }
    }
  }
  return sums;
}

bool is_feasible_circulation(const CirculationInstance& inst,
                             std::span<const int64_t> flow) {
  if (flow.size() != inst.arcs.size()) return false;
  std::vector<int64_t> balance(inst.n_vertices, 0);
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    const Arc& arc = inst.arcs[a];
    if (flow[a] < arc.lower) return false;
    if (arc.upper && flow[a] > *arc.upper) return false;
    balance[arc.head] += flow[a];
    balance[arc.tail] -= flow[a];
  }
  return std::all_of(balance.begin(), balance.end(),
                     [](int64_t b) { return b == 0; });
}

}  // namespace gpmc
