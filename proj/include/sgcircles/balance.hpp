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

#pragma once

#include <optional>
#include <vector>

#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"

namespace sgc {

// Exactly one of marking/witness is present: a consistent vertex marking
// with sign(uv) = mark(u)*mark(v) when balanced, a negative circle when not.
struct BalanceReport {
  bool balanced = false;
  std::optional<std::vector<Sign>> marking;
  std::optional<Circle> witness;
};

// Spanning-forest vertex marking: mark each component root plus, propagate
// mark(w) = mark(v)*sign(vw) along forest edges, and let the first
// inconsistent non-forest edge close the negative-circle witness.
BalanceReport is_balanced(const SignedGraph& g);

struct Block {
  std::vector<int> edge_ids;  // sorted
  std::vector<int> vertices;  // sorted
  bool balanced = false;
  bool is_isthmus = false;    // single-edge block
};

// Blocks partition the edge set; two blocks share at most one vertex.
struct BlockDecomposition {
  std::vector<Block> blocks;       // sorted by smallest edge id
  std::vector<int> cut_vertices;   // sorted
  std::vector<int> isthmi;         // edge ids of single-edge blocks
};

BlockDecomposition blocks(const SignedGraph& g);

// Balance of the subgraph spanned by the given edge ids (vertex labels kept).
bool edge_set_balanced(const SignedGraph& g, const std::vector<int>& edge_ids);

// Edges e of an unbalanced g whose deletion balances it; empty when g is
// balanced.  Deletion + retest.
std::vector<int> balancing_edges(const SignedGraph& g);

// Vertices v of an unbalanced g with g minus v balanced.
std::vector<int> balancing_vertices(const SignedGraph& g);

// g with one edge removed / with a vertex's incident edges removed (vertex
// labels are preserved; an isolated vertex cannot affect balance).
SignedGraph delete_edge(const SignedGraph& g, int edge_id);
SignedGraph delete_vertex_edges(const SignedGraph& g, int v);

}  // namespace sgc
