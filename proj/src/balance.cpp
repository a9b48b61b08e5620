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

#include "sgcircles/balance.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sgc {

namespace {

struct Marking {
  bool consistent = true;
  std::vector<Sign> mark;
  std::vector<int> parent_vertex;
  std::vector<int> depth;
  int bad_edge = -1;  // first non-forest edge violating the marking
};

// BFS marking over an edge subset (all edges when `allowed` is empty).
Marking mark_edge_set(const SignedGraph& g, const std::vector<char>* allowed) {
  const int n = g.vertex_count();
  Marking m;
  m.mark.assign(static_cast<size_t>(n), Sign::Plus);
  m.parent_vertex.assign(static_cast<size_t>(n), -1);
  m.depth.assign(static_cast<size_t>(n), 0);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<char> tree_edge(static_cast<size_t>(g.edge_count()), 0);

  for (int r = 0; r < n; ++r) {
    if (seen[static_cast<size_t>(r)]) continue;
    seen[static_cast<size_t>(r)] = 1;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int eid : g.incident_edges(v)) {
        if (allowed && !(*allowed)[static_cast<size_t>(eid)]) continue;
        int w = g.edge(eid).other(v);
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          tree_edge[static_cast<size_t>(eid)] = 1;
          m.mark[static_cast<size_t>(w)] =
              m.mark[static_cast<size_t>(v)] * g.sign_of(eid);
          m.parent_vertex[static_cast<size_t>(w)] = v;
          m.depth[static_cast<size_t>(w)] = m.depth[static_cast<size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  for (int eid = 0; eid < g.edge_count(); ++eid) {
    if (allowed && !(*allowed)[static_cast<size_t>(eid)]) continue;
    if (tree_edge[static_cast<size_t>(eid)]) continue;
    const Edge& e = g.edge(eid);
    if (m.mark[static_cast<size_t>(e.u)] * m.mark[static_cast<size_t>(e.v)] !=
        e.sign) {
      m.consistent = false;
      m.bad_edge = eid;
      return m;
    }
  }
  return m;
}

Circle witness_from_bad_edge(const SignedGraph& g, const Marking& m) {
  const Edge& e = g.edge(m.bad_edge);
  // Walk both endpoints up to their lowest common forest ancestor.
  std::vector<int> left{e.u}, right{e.v};
  int a = e.u, b = e.v;
  while (m.depth[static_cast<size_t>(a)] > m.depth[static_cast<size_t>(b)]) {
    a = m.parent_vertex[static_cast<size_t>(a)];
    left.push_back(a);
  }
  while (m.depth[static_cast<size_t>(b)] > m.depth[static_cast<size_t>(a)]) {
    b = m.parent_vertex[static_cast<size_t>(b)];
    right.push_back(b);
  }
  while (a != b) {
    a = m.parent_vertex[static_cast<size_t>(a)];
    b = m.parent_vertex[static_cast<size_t>(b)];
    left.push_back(a);
    right.push_back(b);
  }
  // left ends at the ancestor; append right's path reversed, dropping it.
  std::vector<int> cyc = left;
  for (auto it = right.rbegin(); it != right.rend(); ++it)
    if (*it != a) cyc.push_back(*it);
  return Circle::from_vertex_cycle(g, std::move(cyc));
}

}  // namespace

BalanceReport is_balanced(const SignedGraph& g) {
  Marking m = mark_edge_set(g, nullptr);
  BalanceReport report;
  report.balanced = m.consistent;
  if (m.consistent) {
    report.marking = std::move(m.mark);
  } else {
    report.witness = witness_from_bad_edge(g, m);
  }
  return report;
}

bool edge_set_balanced(const SignedGraph& g, const std::vector<int>& edge_ids) {
  std::vector<char> allowed(static_cast<size_t>(g.edge_count()), 0);
  for (int id : edge_ids) allowed[static_cast<size_t>(id)] = 1;
  return mark_edge_set(g, &allowed).consistent;
}

BlockDecomposition blocks(const SignedGraph& g) {
  const int n = g.vertex_count();
  // Iterative Hopcroft-Tarjan with an edge stack.
  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<int> parent_edge(static_cast<size_t>(n), -1);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> block_edges;
  std::set<int> cut_set;
  int timer = 0;

  struct Frame {
    int v;
    size_t next_incident;
    int child_count;
  };

  for (int r = 0; r < n; ++r) {
    if (disc[static_cast<size_t>(r)] != -1) continue;
    std::vector<Frame> stack;
    disc[static_cast<size_t>(r)] = low[static_cast<size_t>(r)] = timer++;
    stack.push_back(Frame{r, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident_edges(f.v);
      if (f.next_incident < inc.size()) {
        int eid = inc[f.next_incident++];
        if (eid == parent_edge[static_cast<size_t>(f.v)]) continue;
        int w = g.edge(eid).other(f.v);
        if (disc[static_cast<size_t>(w)] == -1) {
          edge_stack.push_back(eid);
          parent_edge[static_cast<size_t>(w)] = eid;
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          ++f.child_count;
          stack.push_back(Frame{w, 0, 0});
        } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
          edge_stack.push_back(eid);
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        Frame& pf = stack.back();
        int v = f.v, p = pf.v;
        low[static_cast<size_t>(p)] =
            std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)]) {
          // p closes a block; pop its edges.
          std::vector<int> be;
          int pe = parent_edge[static_cast<size_t>(v)];
          while (!edge_stack.empty()) {
            int top = edge_stack.back();
            edge_stack.pop_back();
            be.push_back(top);
            if (top == pe) break;
          }
          block_edges.push_back(std::move(be));
          bool p_is_root = pf.v == r;
          if (!p_is_root || pf.child_count > 1) cut_set.insert(p);
        }
      }
    }
  }

  BlockDecomposition d;
  for (auto& be : block_edges) {
    Block b;
    std::sort(be.begin(), be.end());
    b.edge_ids = std::move(be);
    std::set<int> vs;
    for (int id : b.edge_ids) {
      vs.insert(g.edge(id).u);
      vs.insert(g.edge(id).v);
    }
    b.vertices.assign(vs.begin(), vs.end());
    b.is_isthmus = b.edge_ids.size() == 1;
    b.balanced = edge_set_balanced(g, b.edge_ids);
    d.blocks.push_back(std::move(b));
  }
  std::sort(d.blocks.begin(), d.blocks.end(), [](const Block& a, const Block& b) {
    return a.edge_ids.front() < b.edge_ids.front();
  });
  // Root cut-vertex detection above covers non-roots via low >= disc; roots
  // with a single child are not cut vertices and were excluded there.
  d.cut_vertices.assign(cut_set.begin(), cut_set.end());
  for (const Block& b : d.blocks)
    if (b.is_isthmus) d.isthmi.push_back(b.edge_ids.front());
  return d;
}

std::vector<int> balancing_edges(const SignedGraph& g) {
  std::vector<int> result;
  if (is_balanced(g).balanced) return result;
  for (int eid = 0; eid < g.edge_count(); ++eid)
    if (is_balanced(delete_edge(g, eid)).balanced) result.push_back(eid);
  return result;
}

std::vector<int> balancing_vertices(const SignedGraph& g) {
  std::vector<int> result;
  if (is_balanced(g).balanced) return result;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_balanced(delete_vertex_edges(g, v)).balanced) result.push_back(v);
  return result;
}

SignedGraph delete_edge(const SignedGraph& g, int edge_id) {
  std::vector<Edge> es;
  es.reserve(static_cast<size_t>(g.edge_count() - 1));
  for (int id = 0; id < g.edge_count(); ++id)
    if (id != edge_id) es.push_back(g.edge(id));
  return SignedGraph(g.vertex_count(), std::move(es));
}

SignedGraph delete_vertex_edges(const SignedGraph& g, int v) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) es.push_back(e);
  return SignedGraph(g.vertex_count(), std::move(es));
}

}  // namespace sgc
