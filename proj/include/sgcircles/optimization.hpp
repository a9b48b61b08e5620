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

#include "sgcircles/budget.hpp"
#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"

namespace sgc {

// index = minimum edge deletions to balance, number = minimum vertex
// deletions.  Witnesses are the lexicographically least optimal sets
// (compared as sorted id sequences).
struct FrustrationResult {
  int index = 0;
  int number = 0;
  std::vector<int> edge_witness;
  std::vector<int> vertex_witness;
};

// index by scanning all 2^(n-1) switchings for the fewest negative edges
// (vertex 0 never switched), number by increasing-size vertex subsets.
FrustrationResult frustration(const SignedGraph& g, const Budget& budget = {});

enum class Disjointness { Vertex, Edge };

struct PackingResult {
  Disjointness disjointness = Disjointness::Vertex;
  Sign sign = Sign::Minus;
  int size = 0;
  std::vector<Circle> circles;
};

// Maximum set of pairwise disjoint circles of the given sign, exact via
// branch and bound over the enumerated circle list; the returned set is the
// lexicographically least optimum in canonical circle order.
PackingResult pack_circles(const SignedGraph& g, Disjointness disjointness,
                           Sign sign, const Budget& budget = {});

enum class CoverTarget { Vertices, Edges };

struct CoverResult {
  CoverTarget target = CoverTarget::Vertices;
  Sign sign = Sign::Minus;
  bool feasible = false;
  int size = 0;
  std::vector<Circle> circles;
  // Vertices or edge ids lying on no circle of the wanted sign; nonempty
  // exactly when no cover exists.
  std::vector<int> infeasible_subjects;
};

// Minimum number of circles of the given sign covering every vertex (or
// every edge), exact, lexicographically least optimum.
CoverResult cover_circles(const SignedGraph& g, CoverTarget target, Sign sign,
                          const Budget& budget = {});

struct DecompositionResult {
  enum class Obstruction { None, OddDegreeVertex, SearchExhausted };

  Sign sign = Sign::Minus;
  bool feasible = false;
  std::vector<Circle> parts;
  Obstruction obstruction = Obstruction::None;

  // Search ran out of budget: neither feasible nor proved infeasible.
  bool undecided() const { return obstruction == Obstruction::SearchExhausted; }
};

// Partition of the whole edge set into circles of one sign.  A vertex of
// odd degree rules the partition out immediately; otherwise exact
// backtracking over the enumerated circles, first solution in canonical
// order.
DecompositionResult decompose_into_circles(const SignedGraph& g, Sign sign,
                                           const Budget& budget = {});

// Packing sizes against the deletion minima they never exceed, plus the
// four cover minima (absent when infeasible).
struct BoundsReport {
  int frustration_index = 0;
  int frustration_number = 0;
  int vertex_disjoint_negative_packing = 0;
  int edge_disjoint_negative_packing = 0;
  bool vertex_packing_tight = false;  // packing == frustration number
  bool edge_packing_tight = false;    // packing == frustration index
  std::optional<int> cover_vertices_negative;
  std::optional<int> cover_vertices_positive;
  std::optional<int> cover_edges_negative;
  std::optional<int> cover_edges_positive;
};

BoundsReport bounds_report(const SignedGraph& g, const Budget& budget = {});

}  // namespace sgc
