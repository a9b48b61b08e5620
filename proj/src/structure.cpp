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

#include "sgcircles/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sgcircles/balance.hpp"
#include "sgcircles/connectivity.hpp"

namespace sgc {

HamiltonianSignSurvey hamiltonian_sign_survey(const SignedGraph& g,
                                              const Budget& budget) {
  const int n = g.vertex_count();
  HamiltonianSignSurvey survey;
  long long nodes = 0;

  if (n >= 3) {
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> path{0};
    visited[0] = 1;

    // Unvisited vertices plus the path's two ends must stay in one piece,
    // or no Hamiltonian completion exists.
    auto residue_connected = [&](int cur) {
      std::vector<char> seen(static_cast<size_t>(n), 0);
      std::deque<int> queue{cur};
      seen[static_cast<size_t>(cur)] = 1;
      int want = cur == 0 ? 1 : 2;  // cur and vertex 0
      for (int v = 1; v < n; ++v)
        if (!visited[static_cast<size_t>(v)]) ++want;
      int got = 0;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++got;
        for (int eid : g.incident_edges(v)) {
          int w = g.edge(eid).other(v);
          bool open = !visited[static_cast<size_t>(w)] || w == 0;
          if (open && !seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            queue.push_back(w);
          }
        }
      }
      return got == want;
    };

    auto dfs = [&](auto&& self, int cur, Sign acc) -> void {
      if (++nodes > budget.max_search_nodes)
        throw BudgetExceeded("hamiltonian survey: search node budget exceeded");
      if ((nodes & 0xFFF) == 0) budget.check_deadline("hamiltonian survey");
      if (static_cast<int>(path.size()) == n) {
        auto back = g.edge_id(cur, 0);
        if (back && path[1] < path.back()) {  // one orientation per circle
          Sign s = acc * g.sign_of(*back);
          if (s == Sign::Minus)
            ++survey.negative_count;
          else
            ++survey.positive_count;
        }
        return;
      }
      if (!residue_connected(cur)) return;
      for (int eid : g.incident_edges(cur)) {
        int w = g.edge(eid).other(cur);
        if (visited[static_cast<size_t>(w)]) continue;
        visited[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        self(self, w, acc * g.sign_of(eid));
        path.pop_back();
        visited[static_cast<size_t>(w)] = 0;
      }
    };
    dfs(dfs, 0, Sign::Plus);
  }

  survey.hamiltonian = survey.negative_count + survey.positive_count > 0;
  if (!survey.hamiltonian)
    survey.classification = HamiltonianSignSurvey::Classification::None;
  else if (survey.negative_count == 0)
    survey.classification = HamiltonianSignSurvey::Classification::PositiveOnly;
  else if (survey.positive_count == 0)
    survey.classification = HamiltonianSignSurvey::Classification::NegativeOnly;
  else
    survey.classification = HamiltonianSignSurvey::Classification::Both;

  survey.s1_exception =
      survey.hamiltonian && !is_balanced(g).balanced &&
      survey.classification != HamiltonianSignSurvey::Classification::Both;
  return survey;
}

std::string to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::Disconnected:
      return "disconnected";
    case ConnectivityClass::Separable:
      return "separable";
    case ConnectivityClass::TwoSeparable:
      return "2-separable";
    case ConnectivityClass::ThreeConnectedOrMore:
      return "3-connected-or-more";
  }
  return "?";
}

SignedGraph induced_subgraph(const SignedGraph& g, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> relabel(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    relabel[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int u = relabel[static_cast<size_t>(e.u)];
    int v = relabel[static_cast<size_t>(e.v)];
    if (u >= 0 && v >= 0) edges.push_back(Edge{u, v, e.sign});
  }
  return SignedGraph(static_cast<int>(sorted.size()), std::move(edges));
}

namespace {

ConnectivityClass classify_residue(
    const SignedGraph& residue,
    std::vector<std::pair<std::string, std::string>>* metadata,
    const std::string& which) {
  if (residue.vertex_count() == 0) {
    if (metadata)
      metadata->emplace_back(which + "_note",
                             "empty residue counted as disconnected");
    return ConnectivityClass::Disconnected;
  }
  if (residue.vertex_count() == 1) {
    if (metadata)
      metadata->emplace_back(which + "_note",
                             "single-vertex residue counted as separable");
    return ConnectivityClass::Separable;
  }
  if (!is_connected(residue)) return ConnectivityClass::Disconnected;
  const int kappa = vertex_connectivity(residue);
  if (kappa <= 1) return ConnectivityClass::Separable;
  if (kappa == 2) return ConnectivityClass::TwoSeparable;
  return ConnectivityClass::ThreeConnectedOrMore;
}

Circle validated_circle(const SignedGraph& g, const Circle& c) {
  for (int id : c.edge_ids())
    if (id < 0 || id >= g.edge_count())
      throw NotACircleError("edge id out of range for this graph");
  return Circle::from_edge_ids(g, c.edge_ids());
}

}  // namespace

RemovalClassification removal_connectivity(const SignedGraph& g,
                                           const Circle& c) {
  RemovalClassification result{validated_circle(g, c), {}, {}, {}};
  result.metadata.emplace_back(
      "scale",
      "vertex connectivity 0 = disconnected, 1 = separable, 2 = 2-separable, "
      ">= 3 = 3-connected-or-more");

  std::vector<Edge> kept;
  for (int id = 0; id < g.edge_count(); ++id)
    if (!result.circle.contains_edge(id)) kept.push_back(g.edge(id));
  SignedGraph edge_residue(g.vertex_count(), std::move(kept));
  result.edge_removal =
      classify_residue(edge_residue, &result.metadata, "edge_removal");

  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!result.circle.contains_vertex(v)) keep.push_back(v);
  result.vertex_removal = classify_residue(induced_subgraph(g, keep),
                                           &result.metadata, "vertex_removal");
  return result;
}

RemovalScan removal_scan(const SignedGraph& g, Sign sign, const Budget& budget) {
  RemovalScan scan;
  scan.sign = sign;
  EnumerateOptions opts;
  opts.sign_filter = sign;
  opts.budget = budget;
  for (const Circle& c : enumerate_circles(g, opts)) {
    budget.check_deadline("removal scan");
    RemovalClassification r = removal_connectivity(g, c);
    ++scan.circle_count;
    auto ec = static_cast<size_t>(r.edge_removal);
    auto vc = static_cast<size_t>(r.vertex_removal);
    ++scan.edge_class_counts[ec];
    ++scan.vertex_class_counts[vc];
    if (!scan.edge_examples[ec]) scan.edge_examples[ec] = c;
    if (!scan.vertex_examples[vc]) scan.vertex_examples[vc] = c;
  }
  return scan;
}

BridgeReport circle_bridges(const SignedGraph& g, const Circle& c) {
  BridgeReport report{validated_circle(g, c), {}, {}};
  const int n = g.vertex_count();

  std::vector<char> on_circle(static_cast<size_t>(n), 0);
  for (int v : report.circle.vertices()) on_circle[static_cast<size_t>(v)] = 1;

  for (int id = 0; id < g.edge_count(); ++id) {
    if (report.circle.contains_edge(id)) continue;
    const Edge& e = g.edge(id);
    if (on_circle[static_cast<size_t>(e.u)] && on_circle[static_cast<size_t>(e.v)]) {
      BridgePart chord;
      chord.attachments = {e.u, e.v};
      chord.edge_ids = {id};
      chord.is_chord = true;
      report.bridges.push_back(std::move(chord));
      report.chords.push_back(id);
    }
  }

  // Remaining bridges: components of g minus V(C), with attachment edges.
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    if (on_circle[static_cast<size_t>(r)] || seen[static_cast<size_t>(r)]) continue;
    BridgePart part;
    std::deque<int> queue{r};
    seen[static_cast<size_t>(r)] = 1;
    std::vector<int> comp;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int eid : g.incident_edges(v)) {
        int w = g.edge(eid).other(v);
        if (on_circle[static_cast<size_t>(w)]) continue;
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<char> in_comp(static_cast<size_t>(n), 0);
    for (int v : comp) in_comp[static_cast<size_t>(v)] = 1;
    std::vector<int> attach;
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      bool u_in = in_comp[static_cast<size_t>(e.u)];
      bool v_in = in_comp[static_cast<size_t>(e.v)];
      if (!u_in && !v_in) continue;
      part.edge_ids.push_back(id);
      if (u_in && on_circle[static_cast<size_t>(e.v)]) attach.push_back(e.v);
      if (v_in && on_circle[static_cast<size_t>(e.u)]) attach.push_back(e.u);
    }
    std::sort(attach.begin(), attach.end());
    attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
    part.attachments = std::move(attach);
    part.interior = std::move(comp);
    report.bridges.push_back(std::move(part));
  }

  // Edge-carrying bridges by first edge id, then edgeless components
  // (isolated off-circle vertices) by vertex.
  auto key = [](const BridgePart& p) {
    return p.edge_ids.empty()
               ? std::make_pair(1, p.interior.front())
               : std::make_pair(0, p.edge_ids.front());
  };
  std::sort(report.bridges.begin(), report.bridges.end(),
            [&](const BridgePart& a, const BridgePart& b) {
              return key(a) < key(b);
            });
  std::sort(report.chords.begin(), report.chords.end());
  return report;
}

}  // namespace sgc
