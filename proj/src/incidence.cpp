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

#include "sgcircles/incidence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sgcircles/connectivity.hpp"

namespace sgc {

std::string Subject::label(const SignedGraph& g) const {
  if (kind == Kind::Edge) return g.edge_label(id);
  return std::to_string(id);
}

namespace {

void note_circle(IncidenceProfile& p, const Circle& c) {
  if (c.sign() == Sign::Minus) {
    ++p.negative_count;
    if (p.negative_witnesses.size() < 2) p.negative_witnesses.push_back(c);
  } else {
    ++p.positive_count;
    if (p.positive_witnesses.size() < 2) p.positive_witnesses.push_back(c);
  }
}

void finish_flags(IncidenceProfile& p) {
  p.in_negative = p.negative_count > 0;
  p.in_positive = p.positive_count > 0;
  p.unique_negative = p.negative_count == 1;
  p.unique_positive = p.positive_count == 1;
  p.only_negative = p.in_negative && !p.in_positive;
  p.only_positive = p.in_positive && !p.in_negative;
}

std::string auto_instance_label(const SignedGraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << ",m=" << g.edge_count() << ",signs=";
  for (int id = 0; id < g.edge_count(); ++id) out << to_char(g.sign_of(id));
  return out.str();
}

}  // namespace

std::vector<IncidenceProfile> all_edge_profiles(const SignedGraph& g,
                                                const Budget& budget) {
  EnumerateOptions opts;
  opts.budget = budget;
  const std::vector<Circle> all = enumerate_circles(g, opts);

  std::vector<IncidenceProfile> profiles(static_cast<size_t>(g.edge_count()));
  for (int id = 0; id < g.edge_count(); ++id)
    profiles[static_cast<size_t>(id)].subject = Subject::edge(id);
  for (const Circle& c : all)
    for (int id : c.edge_ids()) note_circle(profiles[static_cast<size_t>(id)], c);
  for (auto& p : profiles) finish_flags(p);

  // Cross-check: an edge lies on a negative circle exactly when its block
  // is unbalanced.
  const BlockDecomposition d = blocks(g);
  for (const Block& b : d.blocks) {
    for (int id : b.edge_ids) {
      if (profiles[static_cast<size_t>(id)].in_negative == b.balanced) {
        throw std::logic_error(
            "edge " + g.edge_label(id) +
            ": negative-circle membership contradicts block balance");
      }
    }
  }
  return profiles;
}

std::vector<IncidenceProfile> all_vertex_profiles(const SignedGraph& g,
                                                  const Budget& budget) {
  EnumerateOptions opts;
  opts.budget = budget;
  const std::vector<Circle> all = enumerate_circles(g, opts);

  std::vector<IncidenceProfile> profiles(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    profiles[static_cast<size_t>(v)].subject = Subject::vertex(v);
  for (const Circle& c : all)
    for (int v : c.vertices()) note_circle(profiles[static_cast<size_t>(v)], c);
  for (auto& p : profiles) finish_flags(p);

  const BlockDecomposition d = blocks(g);
  std::vector<char> in_unbalanced(static_cast<size_t>(g.vertex_count()), 0);
  for (const Block& b : d.blocks)
    if (!b.balanced)
      for (int v : b.vertices) in_unbalanced[static_cast<size_t>(v)] = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (profiles[static_cast<size_t>(v)].in_negative !=
        static_cast<bool>(in_unbalanced[static_cast<size_t>(v)])) {
      throw std::logic_error(
          "vertex " + std::to_string(v) +
          ": negative-circle membership contradicts block balance");
    }
  }
  return profiles;
}

IncidenceProfile edge_profile(const SignedGraph& g, int edge_id,
                              const Budget& budget) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw std::invalid_argument("unknown edge id " + std::to_string(edge_id));
  return all_edge_profiles(g, budget)[static_cast<size_t>(edge_id)];
}

IncidenceProfile vertex_profile(const SignedGraph& g, int v,
                                const Budget& budget) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return all_vertex_profiles(g, budget)[static_cast<size_t>(v)];
}

std::optional<Circle> pair_common_circle(const SignedGraph& g, Subject a,
                                         Subject b, Sign want,
                                         const Budget& budget) {
  auto check = [&](Subject s) {
    if (s.kind == Subject::Kind::Edge) {
      if (s.id < 0 || s.id >= g.edge_count())
        throw std::invalid_argument("unknown edge id " + std::to_string(s.id));
    } else if (s.id < 0 || s.id >= g.vertex_count()) {
      throw std::invalid_argument("unknown vertex " + std::to_string(s.id));
    }
  };
  check(a);
  check(b);
  if (a == b) throw std::invalid_argument("pair subjects must differ");

  EnumerateOptions opts;
  opts.sign_filter = want;
  opts.budget = budget;
  auto contains = [](const Circle& c, Subject s) {
    return s.kind == Subject::Kind::Edge ? c.contains_edge(s.id)
                                         : c.contains_vertex(s.id);
  };
  for (const Circle& c : enumerate_circles(g, opts))
    if (contains(c, a) && contains(c, b)) return c;
  return std::nullopt;
}

const std::vector<std::string> kConjectureIds = {
    "E5", "V4", "VP4-theorem", "E2-3conn", "EP2-3conn"};

namespace {

// Edge pairs missing a common circle of the given sign, as "u-v|x-y" labels
// in edge-id order.
std::vector<std::string> uncovered_pairs(const SignedGraph& g, Sign want,
                                         const Budget& budget) {
  const int m = g.edge_count();
  std::vector<char> covered(static_cast<size_t>(m * m), 0);
  EnumerateOptions opts;
  opts.sign_filter = want;
  opts.budget = budget;
  for (const Circle& c : enumerate_circles(g, opts)) {
    const auto& ids = c.edge_ids();
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j)
        covered[static_cast<size_t>(ids[i] * m + ids[j])] = 1;
  }
  std::vector<std::string> missing;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!covered[static_cast<size_t>(i * m + j)])
        missing.push_back(g.edge_label(i) + "|" + g.edge_label(j));
  return missing;
}

void fill_pair_conjecture(ConjectureReport& r, const SignedGraph& g, Sign want,
                          const Budget& budget) {
  const int kappa = vertex_connectivity(g);
  r.metadata.emplace_back("vertex_connectivity", std::to_string(kappa));
  bool nontrivial;
  if (want == Sign::Minus) {
    nontrivial = !is_balanced(g).balanced;
    r.metadata.emplace_back("unbalanced", nontrivial ? "true" : "false");
  } else {
    EnumerateOptions probe;
    probe.sign_filter = Sign::Plus;
    probe.budget = budget;
    nontrivial = !enumerate_circles(g, probe).empty();
    r.metadata.emplace_back("has_positive_circle", nontrivial ? "true" : "false");
  }
  r.applicable = kappa >= 3 && nontrivial;
  if (!r.applicable) return;
  r.oracle_set = uncovered_pairs(g, want, budget);
  // predicted_set stays empty: the conjecture says no pair is missing.
}

}  // namespace

ConjectureReport conjecture_report(const SignedGraph& g, const std::string& id,
                                   const Budget& budget,
                                   const std::string& instance_label) {
  ConjectureReport r;
  r.id = id;
  r.instance = instance_label.empty() ? auto_instance_label(g) : instance_label;
  r.metadata.emplace_back("no_circle_convention",
                          "subjects on no circle count as only-<sign> in the "
                          "oracle sets; profile flags use the opposite "
                          "convention");

  if (id == "E5") {
    r.applicable = is_connected(g);
    r.metadata.emplace_back("applicable_when", "connected");
    if (r.applicable) {
      const auto profiles = all_edge_profiles(g, budget);
      for (const auto& p : profiles)
        if (!p.in_positive) r.oracle_set.push_back(p.subject.label(g));
      const BlockDecomposition d = blocks(g);
      std::set<int> predicted(d.isthmi.begin(), d.isthmi.end());
      for (int e : balancing_edges(g)) predicted.insert(e);
      for (int e : predicted) r.predicted_set.push_back(g.edge_label(e));
    }
  } else if (id == "V4") {
    r.applicable = true;
    const auto profiles = all_vertex_profiles(g, budget);
    for (const auto& p : profiles)
      if (!p.in_positive) r.oracle_set.push_back(p.subject.label(g));
    const BlockDecomposition d = blocks(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (const Block& b : d.blocks) {
        if (b.is_isthmus) continue;
        if (!std::binary_search(b.vertices.begin(), b.vertices.end(), v))
          continue;
        int deg_in_block = 0;
        std::vector<int> rest;
        for (int eid : b.edge_ids) {
          const Edge& e = g.edge(eid);
          if (e.u == v || e.v == v)
            ++deg_in_block;
          else
            rest.push_back(eid);
        }
        if (b.balanced || deg_in_block != 2 || !edge_set_balanced(g, rest)) {
          ok = false;
          break;
        }
      }
      if (ok) r.predicted_set.push_back(std::to_string(v));
    }
  } else if (id == "VP4-theorem") {
    r.applicable = true;
    const auto profiles = all_vertex_profiles(g, budget);
    for (const auto& p : profiles)
      if (!p.in_negative) r.oracle_set.push_back(p.subject.label(g));
    const BlockDecomposition d = blocks(g);
    std::vector<char> in_unbalanced(static_cast<size_t>(g.vertex_count()), 0);
    for (const Block& b : d.blocks)
      if (!b.balanced)
        for (int v : b.vertices) in_unbalanced[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!in_unbalanced[static_cast<size_t>(v)])
        r.predicted_set.push_back(std::to_string(v));
  } else if (id == "E2-3conn") {
    fill_pair_conjecture(r, g, Sign::Minus, budget);
  } else if (id == "EP2-3conn") {
    fill_pair_conjecture(r, g, Sign::Plus, budget);
  } else {
    throw std::invalid_argument("unknown conjecture id: " + id);
  }

  std::sort(r.oracle_set.begin(), r.oracle_set.end());
  std::sort(r.predicted_set.begin(), r.predicted_set.end());
  r.agrees = r.oracle_set == r.predicted_set;
  if (!r.agrees) {
    std::vector<std::string> diff;
    std::set_symmetric_difference(r.oracle_set.begin(), r.oracle_set.end(),
                                  r.predicted_set.begin(), r.predicted_set.end(),
                                  std::back_inserter(diff));
    r.counterexample = diff.front();
  }
  return r;
}

}  // namespace sgc
