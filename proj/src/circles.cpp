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

#include "sgcircles/circles.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>

namespace sgc {

namespace {

// Rotate/reflect so the smallest vertex comes first, followed by the smaller
// of its two cycle neighbors.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
  auto mn = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), mn, cyc.end());
  if (cyc.size() >= 3 && cyc[1] > cyc.back())
    std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

}  // namespace

Circle Circle::from_vertex_cycle(const SignedGraph& g, std::vector<int> cycle) {
  if (cycle.size() < 3)
    throw NotACircleError("a circle needs at least 3 vertices");
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw NotACircleError("repeated vertex in cycle");
  for (int v : cycle)
    if (v < 0 || v >= g.vertex_count())
      throw NotACircleError("vertex out of range: " + std::to_string(v));

  Circle c;
  c.vertices_ = canonical_cycle(std::move(cycle));
  c.sign_ = Sign::Plus;
  for (size_t i = 0; i < c.vertices_.size(); ++i) {
    int u = c.vertices_[i];
    int v = c.vertices_[(i + 1) % c.vertices_.size()];
    auto id = g.edge_id(u, v);
    if (!id)
      throw NotACircleError("missing edge " + std::to_string(u) + "-" +
                            std::to_string(v));
    c.edge_ids_.push_back(*id);
    c.sign_ *= g.sign_of(*id);
  }
  std::sort(c.edge_ids_.begin(), c.edge_ids_.end());
  return c;
}

Circle Circle::from_edge_ids(const SignedGraph& g, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  if (edge_ids.size() < 3) throw NotACircleError("a circle needs >= 3 edges");

  std::map<int, std::vector<int>> nbr;  // vertex -> neighbors within the set
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count())
      throw NotACircleError("edge id out of range: " + std::to_string(id));
    const Edge& e = g.edge(id);
    nbr[e.u].push_back(e.v);
    nbr[e.v].push_back(e.u);
  }
  for (const auto& [v, ns] : nbr)
    if (ns.size() != 2)
      throw NotACircleError("vertex " + std::to_string(v) +
                            " has degree " + std::to_string(ns.size()) +
                            " in the edge set");

  // Walk the 2-regular subgraph; it is a single circle iff the walk from any
  // start covers every vertex.
  std::vector<int> cyc;
  int start = nbr.begin()->first;
  int prev = -1, cur = start;
  do {
    cyc.push_back(cur);
    const auto& ns = nbr[cur];
    int next = (ns[0] == prev) ? ns[1] : ns[0];
    prev = cur;
    cur = next;
  } while (cur != start);
  if (cyc.size() != nbr.size())
    throw NotACircleError("edge set is not a single circle");

  return from_vertex_cycle(g, std::move(cyc));
}

Circle Circle::parse(const SignedGraph& g, const std::string& text) {
  std::vector<int> cyc;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw NotACircleError("empty vertex in '" + text + "'");
    cyc.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '-') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      continue;
    } else {
      throw NotACircleError(std::string("bad character '") + ch +
                            "' in circle '" + text + "'");
    }
  }
  flush();
  return from_vertex_cycle(g, std::move(cyc));
}

bool Circle::contains_vertex(int v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Circle::contains_edge(int edge_id) const {
  return std::binary_search(edge_ids_.begin(), edge_ids_.end(), edge_id);
}

std::string Circle::to_string() const {
  std::string s;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(vertices_[i]);
  }
  return s;
}

std::strong_ordering Circle::operator<=>(const Circle& o) const {
  if (auto c = vertices_.size() <=> o.vertices_.size(); c != 0) return c;
  return vertices_ <=> o.vertices_;
}

CircleSet::CircleSet(std::vector<Circle> circles) {
  for (Circle& c : circles) insert(c);
}

void CircleSet::insert(const Circle& c) {
  if (!edge_keys_.insert(c.edge_ids()).second) return;
  circles_.insert(std::upper_bound(circles_.begin(), circles_.end(), c), c);
}

bool CircleSet::contains(const Circle& c) const {
  return edge_keys_.count(c.edge_ids()) > 0;
}

bool CircleSet::operator==(const CircleSet& o) const {
  return edge_keys_ == o.edge_keys_;
}

std::vector<Circle> enumerate_circles(const SignedGraph& g,
                                      const EnumerateOptions& opts) {
  const int n = g.vertex_count();
  const int max_len = opts.length_max ? std::min(*opts.length_max, n) : n;
  std::vector<Circle> found;
  if (max_len < 3) return found;

  std::vector<char> on_path(static_cast<size_t>(n), 0);
  std::vector<int> path;
  std::vector<int> path_edges;
  std::uint64_t discovered = 0;

  // Chord test against the candidate cycle held in `path`.
  auto chordless = [&]() {
    int len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;  // cycle edge, not a chord
        if (g.edge_id(path[static_cast<size_t>(i)],
                      path[static_cast<size_t>(j)]))
          return false;
      }
    return true;
  };

  auto emit = [&](Sign s, int closing_edge) {
    if (++discovered > opts.budget.max_circles)
      throw BudgetExceeded("more than " +
                           std::to_string(opts.budget.max_circles) +
                           " circles");
    if ((discovered & 0xFFF) == 0) opts.budget.check_deadline("circle enumeration");
    if (opts.sign_filter && *opts.sign_filter != s) return;
    if (opts.chordless_only && !chordless()) return;
    Circle c;
    c.vertices_ = path;
    c.edge_ids_ = path_edges;
    c.edge_ids_.push_back(closing_edge);
    std::sort(c.edge_ids_.begin(), c.edge_ids_.end());
    c.sign_ = s;
    found.push_back(std::move(c));
  };

  int root = 0;
  Sign path_sign = Sign::Plus;
  auto dfs = [&](auto&& self, int v) -> void {
    for (int eid : g.incident_edges(v)) {
      int w = g.edge(eid).other(v);
      Sign s = g.sign_of(eid);
      if (w == root) {
        if (path.size() >= 3 && path[1] < v) emit(path_sign * s, eid);
      } else if (w > root && !on_path[static_cast<size_t>(w)] &&
                 static_cast<int>(path.size()) < max_len) {
        on_path[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        path_edges.push_back(eid);
        path_sign *= s;
        self(self, w);
        path_sign *= s;
        path_edges.pop_back();
        path.pop_back();
        on_path[static_cast<size_t>(w)] = 0;
      }
    }
  };

  for (root = 0; root < n; ++root) {
    on_path[static_cast<size_t>(root)] = 1;
    path = {root};
    path_edges.clear();
    path_sign = Sign::Plus;
    dfs(dfs, root);
    on_path[static_cast<size_t>(root)] = 0;
  }

  std::sort(found.begin(), found.end());
  return found;
}

Sign circle_sign(const SignedGraph& g, const std::vector<int>& edge_ids) {
  return Circle::from_edge_ids(g, edge_ids).sign();
}

long long NegativeCircleVector::count_for_length(int l) const {
  if (l < 3 || l - 3 >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<size_t>(l - 3)];
}

std::string NegativeCircleVector::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

NegativeCircleVector negative_circle_vector(const SignedGraph& g,
                                            const Budget& budget) {
  NegativeCircleVector v;
  v.n = g.vertex_count();
  v.counts.assign(static_cast<size_t>(std::max(0, v.n - 2)), 0);
  EnumerateOptions opts;
  opts.budget = budget;
  for (const Circle& c : enumerate_circles(g, opts))
    if (c.sign() == Sign::Minus) ++v.counts[static_cast<size_t>(c.length() - 3)];
  return v;
}

SpanningForest spanning_forest(const SignedGraph& g) {
  SpanningForest f;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<char> in_forest(static_cast<size_t>(g.edge_count()), 0);
  std::deque<int> queue;
  for (int r = 0; r < g.vertex_count(); ++r) {
    if (seen[static_cast<size_t>(r)]) continue;
    seen[static_cast<size_t>(r)] = 1;
    queue.push_back(r);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int eid : g.incident_edges(v)) {
        int w = g.edge(eid).other(v);
        if (seen[static_cast<size_t>(w)]) continue;
        seen[static_cast<size_t>(w)] = 1;
        in_forest[static_cast<size_t>(eid)] = 1;
        f.forest_edges.push_back(eid);
        queue.push_back(w);
      }
    }
  }
  for (int id = 0; id < g.edge_count(); ++id)
    if (!in_forest[static_cast<size_t>(id)]) f.non_forest_edges.push_back(id);
  std::sort(f.forest_edges.begin(), f.forest_edges.end());
  return f;
}

Circle fundamental_circle(const SignedGraph& g, const SpanningForest& f,
                          int non_forest_edge) {
  // BFS inside the forest from one endpoint to the other.
  const Edge& e = g.edge(non_forest_edge);
  std::vector<char> in_forest(static_cast<size_t>(g.edge_count()), 0);
  for (int id : f.forest_edges) in_forest[static_cast<size_t>(id)] = 1;

  std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::deque<int> queue{e.u};
  seen[static_cast<size_t>(e.u)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == e.v) break;
    for (int eid : g.incident_edges(v)) {
      if (!in_forest[static_cast<size_t>(eid)]) continue;
      int w = g.edge(eid).other(v);
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      parent[static_cast<size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<size_t>(e.v)])
    throw std::logic_error("endpoints of a non-forest edge must be connected");
  std::vector<int> cyc;
  for (int v = e.v; v != -1; v = parent[static_cast<size_t>(v)]) cyc.push_back(v);
  return Circle::from_vertex_cycle(g, std::move(cyc));
}

std::optional<SignedGraph> realize_circle_set(const SignedGraph& g,
                                              const CircleSet& b,
                                              const Budget& budget) {
  // Revalidate membership so circle sets loaded from files fail early.
  for (const Circle& c : b.circles()) Circle::from_edge_ids(g, c.edge_ids());

  SpanningForest forest = spanning_forest(g);
  std::vector<Sign> signs(static_cast<size_t>(g.edge_count()), Sign::Plus);
  for (int eid : forest.non_forest_edges) {
    Circle fc = fundamental_circle(g, forest, eid);
    if (b.contains(fc)) signs[static_cast<size_t>(eid)] = Sign::Minus;
  }
  SignedGraph candidate = g.with_signs(signs);

  EnumerateOptions opts;
  opts.sign_filter = Sign::Minus;
  opts.budget = budget;
  CircleSet realized(enumerate_circles(candidate, opts));
  if (realized == b) return candidate;
  return std::nullopt;
}

namespace {

// True iff the edge ids form a nonempty simple path.
bool is_simple_path(const SignedGraph& g, const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::map<int, int> deg;
  for (int id : edge_ids) {
    ++deg[g.edge(id).u];
    ++deg[g.edge(id).v];
  }
  int degree_one = 0;
  for (const auto& [v, d] : deg) {
    if (d > 2) return false;
    if (d == 1) ++degree_one;
  }
  if (degree_one != 2) return false;
  // Acyclic and consistent degrees: connected iff vertices = edges + 1.
  if (deg.size() != edge_ids.size() + 1) return false;
  // Connectivity walk from one endpoint.
  std::map<int, std::vector<int>> nbr;
  for (int id : edge_ids) {
    nbr[g.edge(id).u].push_back(g.edge(id).v);
    nbr[g.edge(id).v].push_back(g.edge(id).u);
  }
  int start = -1;
  for (const auto& [v, d] : deg)
    if (d == 1) {
      start = v;
      break;
    }
  size_t visited = 1;
  int prev = -1, cur = start;
  while (true) {
    const auto& ns = nbr[cur];
    int next = -1;
    for (int w : ns)
      if (w != prev) {
        next = w;
        break;
      }
    if (next == -1) break;
    prev = cur;
    cur = next;
    ++visited;
  }
  return visited == deg.size();
}

}  // namespace

ThetaCheckResult verify_theta_criterion(const SignedGraph& g,
                                        const CircleSet& b,
                                        const Budget& budget) {
  for (const Circle& c : b.circles()) Circle::from_edge_ids(g, c.edge_ids());

  EnumerateOptions opts;
  opts.budget = budget;
  std::vector<Circle> all = enumerate_circles(g, opts);

  ThetaCheckResult result;
  std::uint64_t pairs = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if ((++pairs & 0xFFF) == 0) budget.check_deadline("theta enumeration");
      std::vector<int> shared;
      std::set_intersection(all[i].edge_ids().begin(), all[i].edge_ids().end(),
                            all[j].edge_ids().begin(), all[j].edge_ids().end(),
                            std::back_inserter(shared));
      if (shared.empty() || !is_simple_path(g, shared)) continue;
      // The union is a theta graph only if the circles meet in nothing
      // beyond the shared path; an extra common vertex would give the
      // symmetric difference a degree-4 vertex.
      std::vector<int> vi = all[i].vertices();
      std::vector<int> vj = all[j].vertices();
      std::sort(vi.begin(), vi.end());
      std::sort(vj.begin(), vj.end());
      std::vector<int> common_vertices;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::back_inserter(common_vertices));
      if (common_vertices.size() != shared.size() + 1) continue;
      std::vector<int> diff;
      std::set_symmetric_difference(
          all[i].edge_ids().begin(), all[i].edge_ids().end(),
          all[j].edge_ids().begin(), all[j].edge_ids().end(),
          std::back_inserter(diff));
      Circle third = Circle::from_edge_ids(g, diff);
      int members = (b.contains(all[i]) ? 1 : 0) + (b.contains(all[j]) ? 1 : 0) +
                    (b.contains(third) ? 1 : 0);
      if (members % 2 != 0) {
        result.holds = false;
        result.violating_theta = {all[i], all[j], third};
        return result;
      }
    }
  }
  return result;
}

}  // namespace sgc
