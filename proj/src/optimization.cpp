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

#include "sgcircles/optimization.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "sgcircles/balance.hpp"

namespace sgc {

namespace {

using Bits = boost::dynamic_bitset<>;

class SearchCounter {
 public:
  explicit SearchCounter(const Budget& budget) : budget_(budget) {}

  void tick(const char* what) {
    if (++nodes_ > budget_.max_search_nodes)
      throw BudgetExceeded(std::string(what) + ": search node budget exceeded");
    if ((nodes_ & 0xFFF) == 0) budget_.check_deadline(what);
  }

  bool tick_soft() {
    ++nodes_;
    if ((nodes_ & 0xFFF) == 0) budget_.check_deadline("decompose");
    return nodes_ <= budget_.max_search_nodes;
  }

 private:
  const Budget& budget_;
  long long nodes_ = 0;
};

std::vector<int> sorted_negative_ids(const std::vector<char>& neg) {
  std::vector<int> ids;
  for (size_t e = 0; e < neg.size(); ++e)
    if (neg[e]) ids.push_back(static_cast<int>(e));
  return ids;
}

// Subsets of {0..n-1} of size k in lexicographic order; returns false when
// the visitor never accepts.
template <typename Accept>
bool first_lex_subset(int n, int k, Accept&& accept, std::vector<int>& out) {
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  if (k == 0) {
    if (accept(pick)) {
      out = pick;
      return true;
    }
    return false;
  }
  if (k > n) return false;
  while (true) {
    if (accept(pick)) {
      out = pick;
      return true;
    }
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

FrustrationResult frustration(const SignedGraph& g, const Budget& budget) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  FrustrationResult result;
  if (n >= 2 && n - 1 > 26)
    throw BudgetExceeded("frustration: switching enumeration over 2^" +
                         std::to_string(n - 1) + " sets");

  // Scan every switching, tracking the fewest negative edges and, among
  // the minima, the lexicographically least negative edge set.  Gray-code
  // order flips one vertex per step.
  std::vector<char> neg(static_cast<size_t>(m), 0);
  int cur = 0;
  for (int e = 0; e < m; ++e)
    if (g.sign_of(e) == Sign::Minus) {
      neg[static_cast<size_t>(e)] = 1;
      ++cur;
    }
  int best = cur;
  std::vector<int> best_witness = sorted_negative_ids(neg);

  const unsigned long long total = n >= 2 ? 1ULL << (n - 1) : 1ULL;
  for (unsigned long long k = 1; k < total; ++k) {
    if ((k & 0xFFF) == 0) budget.check_deadline("frustration");
    const int v = __builtin_ctzll(k) + 1;
    for (int eid : g.incident_edges(v)) {
      if (neg[static_cast<size_t>(eid)]) {
        neg[static_cast<size_t>(eid)] = 0;
        --cur;
      } else {
        neg[static_cast<size_t>(eid)] = 1;
        ++cur;
      }
    }
    if (cur < best) {
      best = cur;
      best_witness = sorted_negative_ids(neg);
    } else if (cur == best) {
      std::vector<int> ids = sorted_negative_ids(neg);
      if (ids < best_witness) best_witness = std::move(ids);
    }
  }
  result.index = best;
  result.edge_witness = std::move(best_witness);

  {
    SignedGraph residue = g;
    std::vector<int> sorted_desc = result.edge_witness;
    std::sort(sorted_desc.rbegin(), sorted_desc.rend());
    for (int id : sorted_desc) residue = delete_edge(residue, id);
    if (!is_balanced(residue).balanced)
      throw std::logic_error("frustration: edge witness fails the retest");
  }

  // Vertex subsets in increasing size; the first balancing subset in
  // lexicographic order is the witness.  number <= index since one
  // endpoint per witness edge suffices.
  long long tried = 0;
  for (int k = 0; k <= std::min(n, result.index); ++k) {
    auto accept = [&](const std::vector<int>& pick) {
      if (++tried > budget.max_search_nodes)
        throw BudgetExceeded("frustration: vertex subset budget exceeded");
      if ((tried & 0x3FF) == 0) budget.check_deadline("frustration");
      SignedGraph residue = g;
      for (int v : pick) residue = delete_vertex_edges(residue, v);
      return is_balanced(residue).balanced;
    };
    std::vector<int> witness;
    if (first_lex_subset(n, k, accept, witness)) {
      result.number = k;
      result.vertex_witness = std::move(witness);
      return result;
    }
  }
  throw std::logic_error("frustration: no vertex witness within the index bound");
}

namespace {

struct DisjointInstance {
  std::vector<Circle> circles;   // canonical order
  std::vector<Bits> members;     // element set per circle
  int element_count = 0;
};

DisjointInstance build_instance(const SignedGraph& g, Sign sign, bool by_vertex,
                                const Budget& budget) {
  DisjointInstance inst;
  EnumerateOptions opts;
  opts.sign_filter = sign;
  opts.budget = budget;
  inst.circles = enumerate_circles(g, opts);
  inst.element_count = by_vertex ? g.vertex_count() : g.edge_count();
  inst.members.reserve(inst.circles.size());
  for (const Circle& c : inst.circles) {
    Bits b(static_cast<size_t>(inst.element_count));
    if (by_vertex)
      for (int v : c.vertices()) b.set(static_cast<size_t>(v));
    else
      for (int e : c.edge_ids()) b.set(static_cast<size_t>(e));
    inst.members.push_back(std::move(b));
  }
  return inst;
}

// True when `need` further disjoint candidates fit, scanning from `from`.
bool packing_feasible(const DisjointInstance& inst, size_t from, const Bits& used,
                      int need, SearchCounter& counter) {
  if (need <= 0) return true;
  counter.tick("pack");
  const int free_elems = static_cast<int>(used.size() - used.count());
  if (free_elems / 3 < need) return false;
  for (size_t i = from; i < inst.members.size(); ++i) {
    if (static_cast<int>(inst.members.size() - i) < need) return false;
    if (inst.members[i].intersects(used)) continue;
    Bits next = used | inst.members[i];
    if (packing_feasible(inst, i + 1, next, need - 1, counter)) return true;
  }
  return false;
}

std::vector<size_t> lex_least_packing(const DisjointInstance& inst, int optimum,
                                      SearchCounter& counter) {
  std::vector<size_t> chosen;
  Bits used(static_cast<size_t>(inst.element_count));
  int need = optimum;
  for (size_t i = 0; i < inst.members.size() && need > 0; ++i) {
    if (inst.members[i].intersects(used)) continue;
    Bits next = used | inst.members[i];
    if (packing_feasible(inst, i + 1, next, need - 1, counter)) {
      chosen.push_back(i);
      used = std::move(next);
      --need;
    }
  }
  return chosen;
}

int max_packing_size(const DisjointInstance& inst, SearchCounter& counter) {
  Bits used(static_cast<size_t>(inst.element_count));
  int best = 0;
  // Iterative deepening on the target keeps the feasibility cut sharp.
  while (packing_feasible(inst, 0, used, best + 1, counter)) ++best;
  return best;
}

}  // namespace

PackingResult pack_circles(const SignedGraph& g, Disjointness disjointness,
                           Sign sign, const Budget& budget) {
  DisjointInstance inst =
      build_instance(g, sign, disjointness == Disjointness::Vertex, budget);
  SearchCounter counter(budget);
  PackingResult result;
  result.disjointness = disjointness;
  result.sign = sign;
  result.size = max_packing_size(inst, counter);
  for (size_t i : lex_least_packing(inst, result.size, counter))
    result.circles.push_back(inst.circles[i]);
  return result;
}

namespace {

// Minimum cover size of `uncovered` using candidates outside `banned`,
// pruned at `limit`; returns limit+1 when no cover within limit exists.
int cover_search(const DisjointInstance& inst, const Bits& uncovered,
                 const std::vector<char>& banned, int limit,
                 SearchCounter& counter) {
  if (uncovered.none()) return 0;
  if (limit <= 0) return 1;  // anything positive would do; signal failure
  counter.tick("cover");

  // Branch on the uncovered element with the fewest remaining candidates.
  size_t pivot = Bits::npos;
  int pivot_count = -1;
  for (size_t e = uncovered.find_first(); e != Bits::npos;
       e = uncovered.find_next(e)) {
    int cnt = 0;
    for (size_t i = 0; i < inst.members.size(); ++i)
      if (!banned[i] && inst.members[i].test(e)) ++cnt;
    if (pivot_count == -1 || cnt < pivot_count) {
      pivot = e;
      pivot_count = cnt;
      if (cnt == 0) break;
    }
  }
  if (pivot_count == 0) return limit + 1;

  int best = limit + 1;
  for (size_t i = 0; i < inst.members.size(); ++i) {
    if (banned[i] || !inst.members[i].test(pivot)) continue;
    Bits rest = uncovered - inst.members[i];
    int sub = cover_search(inst, rest, banned, best - 2, counter);
    if (1 + sub < best) best = 1 + sub;
    if (best == 1) break;
  }
  return best;
}

}  // namespace

CoverResult cover_circles(const SignedGraph& g, CoverTarget target, Sign sign,
                          const Budget& budget) {
  DisjointInstance inst =
      build_instance(g, sign, target == CoverTarget::Vertices, budget);
  CoverResult result;
  result.target = target;
  result.sign = sign;

  Bits uncovered(static_cast<size_t>(inst.element_count));
  uncovered.set();
  Bits reachable(static_cast<size_t>(inst.element_count));
  for (const Bits& b : inst.members) reachable |= b;
  if (reachable.count() != uncovered.count()) {
    result.feasible = false;
    for (size_t e = 0; e < reachable.size(); ++e)
      if (!reachable.test(e)) result.infeasible_subjects.push_back(static_cast<int>(e));
    return result;
  }

  result.feasible = true;
  SearchCounter counter(budget);
  std::vector<char> banned(inst.members.size(), 0);
  int optimum = 0;
  if (inst.element_count > 0) {
    int limit = static_cast<int>(inst.members.size());
    optimum = cover_search(inst, uncovered, banned, limit, counter);
  }
  result.size = optimum;

  // Second pass pins the lexicographically least optimal cover: take each
  // candidate in order whenever a completion at the optimum still exists.
  Bits covered(static_cast<size_t>(inst.element_count));
  int remaining = optimum;
  for (size_t i = 0; i < inst.members.size() && remaining > 0; ++i) {
    banned[i] = 1;  // decided either way; completions use later indices only
    Bits with_i = covered | inst.members[i];
    Bits rest = uncovered - with_i;
    if (cover_search(inst, rest, banned, remaining - 1, counter) <=
        remaining - 1) {
      result.circles.push_back(inst.circles[i]);
      covered = std::move(with_i);
      --remaining;
    }
  }
  return result;
}

DecompositionResult decompose_into_circles(const SignedGraph& g, Sign sign,
                                           const Budget& budget) {
  DecompositionResult result;
  result.sign = sign;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      result.feasible = false;
      result.obstruction = DecompositionResult::Obstruction::OddDegreeVertex;
      return result;
    }
  }
  if (g.edge_count() == 0) {
    result.feasible = true;
    return result;
  }

  DisjointInstance inst = build_instance(g, sign, /*by_vertex=*/false, budget);
  SearchCounter counter(budget);
  Bits used(static_cast<size_t>(g.edge_count()));
  std::vector<size_t> parts;
  bool exhausted = false;

  // Cover the lowest unused edge first; candidates in canonical order make
  // the first full partition the canonical one.
  auto dfs = [&](auto&& self, size_t lowest) -> bool {
    if (!counter.tick_soft()) {
      exhausted = true;
      return false;
    }
    while (lowest < used.size() && used.test(lowest)) ++lowest;
    if (lowest == used.size()) return true;
    for (size_t i = 0; i < inst.members.size(); ++i) {
      if (!inst.members[i].test(lowest) || inst.members[i].intersects(used))
        continue;
      used |= inst.members[i];
      parts.push_back(i);
      if (self(self, lowest + 1)) return true;
      if (exhausted) return false;
      parts.pop_back();
      used -= inst.members[i];
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    result.feasible = true;
    for (size_t i : parts) result.parts.push_back(inst.circles[i]);
  } else if (exhausted) {
    result.feasible = false;
    result.obstruction = DecompositionResult::Obstruction::SearchExhausted;
  } else {
    result.feasible = false;
  }
  return result;
}

BoundsReport bounds_report(const SignedGraph& g, const Budget& budget) {
  BoundsReport report;
  const FrustrationResult f = frustration(g, budget);
  report.frustration_index = f.index;
  report.frustration_number = f.number;
  report.vertex_disjoint_negative_packing =
      pack_circles(g, Disjointness::Vertex, Sign::Minus, budget).size;
  report.edge_disjoint_negative_packing =
      pack_circles(g, Disjointness::Edge, Sign::Minus, budget).size;
  if (report.vertex_disjoint_negative_packing > f.number ||
      report.edge_disjoint_negative_packing > f.index)
    throw std::logic_error("bounds_report: packing exceeds its deletion bound");
  report.vertex_packing_tight =
      report.vertex_disjoint_negative_packing == f.number;
  report.edge_packing_tight = report.edge_disjoint_negative_packing == f.index;

  auto cover_min = [&](CoverTarget t, Sign s) -> std::optional<int> {
    CoverResult c = cover_circles(g, t, s, budget);
    if (!c.feasible) return std::nullopt;
    return c.size;
  };
  report.cover_vertices_negative = cover_min(CoverTarget::Vertices, Sign::Minus);
  report.cover_vertices_positive = cover_min(CoverTarget::Vertices, Sign::Plus);
  report.cover_edges_negative = cover_min(CoverTarget::Edges, Sign::Minus);
  report.cover_edges_positive = cover_min(CoverTarget::Edges, Sign::Plus);
  return report;
}

}  // namespace sgc
