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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgcircles/budget.hpp"
#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"

namespace sgc {

struct HamiltonianSignSurvey {
  enum class Classification { None, NegativeOnly, PositiveOnly, Both };

  bool hamiltonian = false;
  long long negative_count = 0;
  long long positive_count = 0;
  Classification classification = Classification::None;
  // An unbalanced Hamiltonian graph whose Hamiltonian circles all have one
  // sign; such instances get logged for corpus study.
  bool s1_exception = false;
};

// Exhaustive count of Hamiltonian circles by sign, via DFS anchored at
// vertex 0 with connectivity pruning.
HamiltonianSignSurvey hamiltonian_sign_survey(const SignedGraph& g,
                                              const Budget& budget = {});

// Connectivity scale used for circle-removal residues: vertex connectivity
// 0, 1, 2, and at least 3.  Degenerate residues: no vertices counts as
// disconnected, a single vertex as separable; both get a metadata note.
enum class ConnectivityClass {
  Disconnected,
  Separable,
  TwoSeparable,
  ThreeConnectedOrMore
};

std::string to_string(ConnectivityClass c);

struct RemovalClassification {
  Circle circle;
  ConnectivityClass edge_removal = ConnectivityClass::Disconnected;
  ConnectivityClass vertex_removal = ConnectivityClass::Disconnected;
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Classifies g minus the circle's edges (all vertices kept) and g minus the
// circle's vertices (induced residue).
RemovalClassification removal_connectivity(const SignedGraph& g,
                                           const Circle& c);

// Scan over every circle of one sign: how many circles land in each
// residue class, with the first example circle per class.
struct RemovalScan {
  Sign sign = Sign::Minus;
  long long circle_count = 0;
  std::array<long long, 4> edge_class_counts{};
  std::array<long long, 4> vertex_class_counts{};
  std::array<std::optional<Circle>, 4> edge_examples;
  std::array<std::optional<Circle>, 4> vertex_examples;
};

RemovalScan removal_scan(const SignedGraph& g, Sign sign,
                         const Budget& budget = {});

// One bridge of a circle C: either a chord (both attachments on C, no
// interior) or a component of g minus V(C) with its attachment edges.
struct BridgePart {
  std::vector<int> attachments;  // vertices on C, sorted
  std::vector<int> interior;     // vertices off C, sorted
  std::vector<int> edge_ids;     // sorted
  bool is_chord = false;
};

struct BridgeReport {
  Circle circle;
  std::vector<int> chords;  // edge ids of the single-edge bridges
  std::vector<BridgePart> bridges;
};

// Bridges partition the edges outside C; the report keeps them sorted by
// smallest edge id.
BridgeReport circle_bridges(const SignedGraph& g, const Circle& c);

// Induced signed subgraph on the kept vertices, relabeled 0..k-1 in the
// order given by the sorted keep list.
SignedGraph induced_subgraph(const SignedGraph& g,
                             const std::vector<int>& keep);

}  // namespace sgc
