// Copyright 2026 The sgcircles Authors
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

#include "sgcircles/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace sgc {

std::vector<std::vector<int>> components(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> comps;
  for (int r = 0; r < n; ++r) {
    if (seen[static_cast<size_t>(r)]) continue;
    std::vector<int> comp;
    std::deque<int> queue{r};
    seen[static_cast<size_t>(r)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int eid : g.incident_edges(v)) {
        int w = g.edge(eid).other(v);
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const SignedGraph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

namespace {

// Unit-capacity digraph on split vertices: v_in = 2v, v_out = 2v+1, an arc
// v_in -> v_out of capacity 1 per vertex and u_out -> v_in both ways per
// edge.  Max s_out -> t_in flow equals the number of internally disjoint
// s-t paths, hence the size of a minimum s-t vertex cut for non-adjacent
// s, t.
class UnitFlow {
 public:
  explicit UnitFlow(int node_count) : head_(static_cast<size_t>(node_count), -1) {}

  void add_arc(int from, int to) {
    arcs_.push_back({to, head_[static_cast<size_t>(from)], 1});
    head_[static_cast<size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<size_t>(to)], 0});
    head_[static_cast<size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t, int stop_at) {
    int total = 0;
    while (total < stop_at) {
      if (!find_level_graph(s, t)) break;
      cursor_ = head_;
      while (total < stop_at) {
        int pushed = push(s, t);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  void reset() {
    for (size_t i = 0; i < arcs_.size(); i += 2) {
      arcs_[i].cap = 1;
      arcs_[i + 1].cap = 0;
    }
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  bool find_level_graph(int s, int t) {
    level_.assign(head_.size(), -1);
    std::deque<int> queue{s};
    level_[static_cast<size_t>(s)] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int a = head_[static_cast<size_t>(v)]; a != -1; a = arcs_[static_cast<size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<size_t>(arc.to)] == -1) {
          level_[static_cast<size_t>(arc.to)] = level_[static_cast<size_t>(v)] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<size_t>(t)] != -1;
  }

  int push(int v, int t) {
    if (v == t) return 1;
    for (int& a = cursor_[static_cast<size_t>(v)]; a != -1; a = arcs_[static_cast<size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<size_t>(a)];
      if (arc.cap > 0 &&
          level_[static_cast<size_t>(arc.to)] == level_[static_cast<size_t>(v)] + 1 &&
          push(arc.to, t) == 1) {
        arc.cap -= 1;
        arcs_[static_cast<size_t>(a ^ 1)].cap += 1;
        return 1;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> cursor_;
  std::vector<int> level_;
  std::vector<Arc> arcs_;
};

}  // namespace

int vertex_connectivity(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;

  std::vector<std::vector<char>> adj(
      static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    adj[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] = 1;
    adj[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] = 1;
  }
  bool complete = true;
  for (int u = 0; u < n && complete; ++u)
    for (int v = u + 1; v < n && complete; ++v)
      if (!adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) complete = false;
  if (complete) return n - 1;

  UnitFlow flow(2 * n);
  for (int v = 0; v < n; ++v) flow.add_arc(2 * v, 2 * v + 1);
  for (const Edge& e : g.edges()) {
    flow.add_arc(2 * e.u + 1, 2 * e.v);
    flow.add_arc(2 * e.v + 1, 2 * e.u);
  }

  // kappa = min over non-adjacent pairs of the minimum vertex cut; scanning
  // s over a smallest-degree vertex and all its non-neighbors, plus all
  // non-adjacent pairs within its neighborhood, is the classic shortcut.
  // The graph sizes here stay small, so scan all non-adjacent pairs.
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s) {
    if (g.degree(s) < best) best = g.degree(s);
  }
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (adj[static_cast<size_t>(s)][static_cast<size_t>(t)]) continue;
      flow.reset();
      int cut = flow.max_flow(2 * s + 1, 2 * t, best);
      best = std::min(best, cut);
      if (best == 0) return 0;
    }
  }
  return best;
}

bool is_k_connected(const SignedGraph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() <= k) return false;
  return vertex_connectivity(g) >= k;
}

}  // namespace sgc
