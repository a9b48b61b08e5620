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

#include "common/oracles.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sgcircles/balance.hpp"

namespace sgtest {

using sgc::Sign;
using sgc::SignedGraph;

std::vector<OracleCircle> oracle_circles(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<OracleCircle> found;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) subset.push_back(v);
    if (subset.size() < 3) continue;

    // Arrangements starting at the least vertex; the reflection with
    // second < last is the canonical one.
    std::vector<int> rest(subset.begin() + 1, subset.end());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<int> cyc{subset.front()};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      Sign sign = Sign::Plus;
      bool ok = true;
      for (size_t i = 0; i < cyc.size() && ok; ++i) {
        const auto id = g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]);
        if (!id)
          ok = false;
        else
          sign = sign * g.sign_of(*id);
      }
      if (ok) found.push_back(OracleCircle{cyc, sign});
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool oracle_balanced(const SignedGraph& g) {
  for (const OracleCircle& c : oracle_circles(g))
    if (c.sign == Sign::Minus) return false;
  return true;
}

namespace {

// Visits k-subsets of {0..n-1} in lexicographic order until found() says
// stop; returns whether any subset was accepted.
template <typename Accept>
bool any_subset(int n, int k, Accept&& accept) {
  if (k > n) return false;
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    if (accept(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

int oracle_frustration_index(const SignedGraph& g) {
  const int m = g.edge_count();
  for (int k = 0; k <= m; ++k) {
    auto try_deletion = [&](const std::vector<int>& pick) {
      std::vector<sgc::Edge> kept;
      size_t next = 0;
      for (int id = 0; id < m; ++id) {
        if (next < pick.size() && pick[next] == id) {
          ++next;
          continue;
        }
        kept.push_back(g.edge(id));
      }
      return sgc::is_balanced(SignedGraph(g.vertex_count(), std::move(kept)))
          .balanced;
    };
    if (k == 0 ? try_deletion({}) : any_subset(m, k, try_deletion)) return k;
  }
  return m;
}

int oracle_frustration_number(const SignedGraph& g) {
  const int n = g.vertex_count();
  for (int k = 0; k <= n; ++k) {
    auto try_deletion = [&](const std::vector<int>& pick) {
      SignedGraph residue = g;
      for (int v : pick) residue = sgc::delete_vertex_edges(residue, v);
      return sgc::is_balanced(residue).balanced;
    };
    if (k == 0 ? try_deletion({}) : any_subset(n, k, try_deletion)) return k;
  }
  return n;
}

std::pair<long long, long long> oracle_hamiltonian_counts(const SignedGraph& g) {
  const int n = g.vertex_count();
  long long neg = 0, pos = 0;
  if (n < 3) return {0, 0};
  std::vector<int> rest;
  for (int v = 1; v < n; ++v) rest.push_back(v);
  do {
    if (rest.front() > rest.back()) continue;
    Sign sign = Sign::Plus;
    bool ok = true;
    int prev = 0;
    for (int v : rest) {
      const auto id = g.edge_id(prev, v);
      if (!id) {
        ok = false;
        break;
      }
      sign = sign * g.sign_of(*id);
      prev = v;
    }
    if (ok) {
      const auto closing = g.edge_id(prev, 0);
      if (closing) {
        sign = sign * g.sign_of(*closing);
        (sign == Sign::Minus ? neg : pos) += 1;
      }
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {neg, pos};
}

SignedGraph random_graph(unsigned long long seed, int n, double edge_p,
                         double neg_p) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<sgc::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit() < edge_p)
        edges.push_back(
            sgc::Edge{u, v, unit() < neg_p ? Sign::Minus : Sign::Plus});
  return SignedGraph(n, std::move(edges));
}

std::vector<std::pair<std::string, SignedGraph>> standard_corpus() {
  std::vector<std::pair<std::string, SignedGraph>> corpus;
  auto gen = [&corpus](const std::string& family, const std::string& sign) {
    corpus.emplace_back(family + "/" + sign, sgc::generate_graph(family, sign, 1));
  };

  for (int n = 3; n <= 6; ++n) {
    const std::string family = "kn:" + std::to_string(n);
    gen(family, "all-plus");
    gen(family, "all-minus");
  }
  gen("kn:4", "list:-+++++");
  gen("kn:5", "list:-++++++++-");

  gen("krs:2,3", "all-plus");
  gen("krs:2,3", "all-minus");
  gen("krs:3,3", "all-minus");
  gen("krs:2,4", "list:+-++++++");

  for (int n = 4; n <= 8; ++n) {
    const std::string family = "cycle:" + std::to_string(n);
    gen(family, "all-minus");
    gen(family, "all-plus");
  }
  gen("path:6", "all-minus");
  gen("path:3", "all-plus");

  gen("theta:1,2,2", "all-plus");
  gen("theta:1,2,2", "all-minus");
  gen("theta:2,2,2", "list:+-+++-");
  gen("theta:2,3,3", "all-minus");

  const char* bowtie_negneg =
      "5 6\n0 1 -\n0 2 -\n1 2 -\n2 3 -\n2 4 -\n3 4 -\n";
  const char* bowtie_negpos =
      "5 6\n0 1 -\n0 2 +\n1 2 +\n2 3 +\n2 4 +\n3 4 +\n";
  corpus.emplace_back("bowtie/neg-neg", sgc::parse_sgt(bowtie_negneg));
  corpus.emplace_back("bowtie/neg-pos", sgc::parse_sgt(bowtie_negpos));

  const char* two_blocks_bridge =
      "7 8\n0 1 -\n0 2 -\n1 2 -\n2 3 +\n3 4 +\n3 5 +\n4 5 -\n5 6 +\n";
  corpus.emplace_back("triangles-joined-by-bridge",
                      sgc::parse_sgt(two_blocks_bridge));

  for (unsigned long long seed = 1; seed <= 24; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);  // 5..10
    std::ostringstream name;
    name << "random/seed:" << seed << "/n:" << n;
    corpus.emplace_back(name.str(), random_graph(seed, n, 0.45, 0.3));
  }
  return corpus;
}

}  // namespace sgtest
