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

#include "sgcircles/census.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgc {

namespace {

unsigned long long class_total(const SignedGraph& g, const SpanningForest& f,
                               const Budget& budget) {
  const size_t k = f.non_forest_edges.size();
  if (k >= 62) throw BudgetExceeded("census: more than 2^61 switching classes");
  const unsigned long long total = 1ULL << k;
  if (static_cast<long long>(total) > budget.max_classes)
    throw BudgetExceeded("census: 2^" + std::to_string(k) +
                         " classes exceed the class budget");
  return total;
}

SignedGraph representative(const SignedGraph& g, const SpanningForest& f,
                           unsigned long long mask) {
  std::vector<Sign> signs(static_cast<size_t>(g.edge_count()), Sign::Plus);
  for (size_t j = 0; j < f.non_forest_edges.size(); ++j)
    if (mask >> j & 1ULL)
      signs[static_cast<size_t>(f.non_forest_edges[j])] = Sign::Minus;
  return g.with_signs(signs);
}

// Exact integer rank by fraction-free elimination.
int integer_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> a) {
  using boost::multiprecision::cpp_int;
  if (a.empty()) return 0;
  const size_t rows = a.size();
  const size_t cols = a[0].size();
  size_t rank = 0;
  cpp_int prev = 1;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

struct ChunkResult {
  std::vector<std::set<long long>> attained;  // per length index
  std::map<std::vector<long long>, unsigned long long> first_mask;
};

}  // namespace

SignedGraph signature_for_mask(const SignedGraph& g, unsigned long long mask) {
  const SpanningForest f = spanning_forest(g);
  if (f.non_forest_edges.size() < 64 &&
      mask >= (1ULL << f.non_forest_edges.size()))
    throw std::invalid_argument("class mask out of range");
  return representative(g, f, mask);
}

void for_each_signature_class(
    const SignedGraph& g, const Budget& budget,
    const std::function<void(unsigned long long, const SignedGraph&)>& visit) {
  const SpanningForest f = spanning_forest(g);
  const unsigned long long total = class_total(g, f, budget);
  for (unsigned long long mask = 0; mask < total; ++mask) {
    if ((mask & 0xFFF) == 0) budget.check_deadline("census");
    visit(mask, representative(g, f, mask));
  }
}

std::vector<SignedGraph> enumerate_signatures(const SignedGraph& g,
                                              const Budget& budget) {
  std::vector<SignedGraph> reps;
  for_each_signature_class(g, budget,
                           [&](unsigned long long, const SignedGraph& rep) {
                             reps.push_back(rep);
                           });
  return reps;
}

CensusReport vector_set_and_dimension(const SignedGraph& g,
                                      const Budget& budget, int threads,
                                      const CensusRowSink& row_sink) {
  const int n = g.vertex_count();
  const SpanningForest f = spanning_forest(g);
  const unsigned long long total = class_total(g, f, budget);
  const int vec_len = std::max(0, n - 2);  // lengths 3..n

  // One enumeration of the underlying graph's circles; per circle keep its
  // length and which non-forest edges it uses.
  std::vector<int> nf_index(static_cast<size_t>(g.edge_count()), -1);
  for (size_t j = 0; j < f.non_forest_edges.size(); ++j)
    nf_index[static_cast<size_t>(f.non_forest_edges[j])] = static_cast<int>(j);
  EnumerateOptions opts;
  opts.budget = budget;
  std::vector<unsigned long long> circle_nf;
  std::vector<int> circle_len;
  for (const Circle& c : enumerate_circles(g, opts)) {
    unsigned long long bits = 0;
    for (int eid : c.edge_ids())
      if (nf_index[static_cast<size_t>(eid)] >= 0)
        bits |= 1ULL << nf_index[static_cast<size_t>(eid)];
    circle_nf.push_back(bits);
    circle_len.push_back(c.length());
  }

  auto scan_range = [&](unsigned long long lo, unsigned long long hi,
                        ChunkResult& out) {
    out.attained.assign(static_cast<size_t>(vec_len), {});
    std::vector<long long> counts(static_cast<size_t>(vec_len), 0);
    for (unsigned long long mask = lo; mask < hi; ++mask) {
      if ((mask & 0xFFF) == 0) budget.check_deadline("census");
      std::fill(counts.begin(), counts.end(), 0);
      for (size_t i = 0; i < circle_nf.size(); ++i)
        if (__builtin_parityll(circle_nf[i] & mask))
          ++counts[static_cast<size_t>(circle_len[i] - 3)];
      for (int l = 0; l < vec_len; ++l)
        out.attained[static_cast<size_t>(l)].insert(
            counts[static_cast<size_t>(l)]);
      if (out.first_mask.find(counts) == out.first_mask.end())
        out.first_mask.emplace(counts, mask);
      if (row_sink) {
        NegativeCircleVector v;
        v.n = n;
        v.counts = counts;
        row_sink(mask, v);
      }
    }
  };

  int worker_count = std::max(1, threads);
  if (row_sink) worker_count = 1;  // keep the row stream in mask order
  const unsigned long long min_chunk = 1024;
  worker_count = static_cast<int>(std::min<unsigned long long>(
      static_cast<unsigned long long>(worker_count),
      std::max(1ULL, total / min_chunk)));

  std::vector<ChunkResult> parts(static_cast<size_t>(worker_count));
  if (worker_count == 1) {
    scan_range(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const unsigned long long step = total / worker_count;
    for (int w = 0; w < worker_count; ++w) {
      unsigned long long lo = step * static_cast<unsigned long long>(w);
      unsigned long long hi =
          w + 1 == worker_count ? total : lo + step;
      pool.emplace_back(scan_range, lo, hi, std::ref(parts[static_cast<size_t>(w)]));
    }
    for (auto& t : pool) t.join();
  }

  CensusReport report;
  {
    std::ostringstream tag;
    tag << "n=" << n << ",m=" << g.edge_count();
    report.graph = tag.str();
  }
  report.cyclomatic = static_cast<int>(f.non_forest_edges.size());
  report.class_count = static_cast<long long>(total);

  std::vector<std::set<long long>> attained(static_cast<size_t>(vec_len));
  std::map<std::vector<long long>, unsigned long long> first_mask;
  for (const ChunkResult& part : parts) {
    for (int l = 0; l < vec_len; ++l)
      attained[static_cast<size_t>(l)].insert(
          part.attained[static_cast<size_t>(l)].begin(),
          part.attained[static_cast<size_t>(l)].end());
    for (const auto& [vec, mask] : part.first_mask) {
      auto it = first_mask.find(vec);
      if (it == first_mask.end())
        first_mask.emplace(vec, mask);
      else
        it->second = std::min(it->second, mask);
    }
  }

  for (int l = 0; l < vec_len; ++l)
    report.spectra.emplace_back(
        l + 3, std::vector<long long>(attained[static_cast<size_t>(l)].begin(),
                                      attained[static_cast<size_t>(l)].end()));
  for (const auto& [vec, mask] : first_mask) {
    NegativeCircleVector v;
    v.n = n;
    v.counts = vec;
    report.vector_set.push_back(std::move(v));
    report.witness_masks.push_back(mask);
  }

  using boost::multiprecision::cpp_int;
  if (report.vector_set.size() > 1) {
    std::vector<std::vector<cpp_int>> diffs;
    const auto& base = report.vector_set.front().counts;
    for (size_t i = 1; i < report.vector_set.size(); ++i) {
      std::vector<cpp_int> row;
      for (int l = 0; l < vec_len; ++l)
        row.emplace_back(report.vector_set[i].counts[static_cast<size_t>(l)] -
                         base[static_cast<size_t>(l)]);
      diffs.push_back(std::move(row));
    }
    report.affine_dimension = integer_rank(std::move(diffs));
  }
  return report;
}

std::vector<long long> circle_count_spectrum(const SignedGraph& g, int length,
                                             const Budget& budget) {
  if (length < 3 || length > g.vertex_count())
    throw std::invalid_argument("spectrum length out of range");
  const CensusReport report = vector_set_and_dimension(g, budget);
  for (const auto& [l, values] : report.spectra)
    if (l == length) return values;
  return {};
}

}  // namespace sgc
