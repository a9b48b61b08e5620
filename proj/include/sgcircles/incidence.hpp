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
#include <string>
#include <utility>
#include <vector>

#include "sgcircles/balance.hpp"
#include "sgcircles/budget.hpp"
#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"

namespace sgc {

struct Subject {
  enum class Kind { Edge, Vertex };
  Kind kind = Kind::Edge;
  int id = 0;

  static Subject edge(int edge_id) { return {Kind::Edge, edge_id}; }
  static Subject vertex(int v) { return {Kind::Vertex, v}; }
  // "u-v" for edges, "v" for vertices.
  std::string label(const SignedGraph& g) const;
  bool operator==(const Subject&) const = default;
};

// Circle-membership summary for one edge or vertex.  The only_* flags use
// the non-vacuous reading: a subject lying on no circle at all has every
// flag false.  Witnesses are the first circles in canonical order, at most
// two per sign (two witnesses refute uniqueness).
struct IncidenceProfile {
  Subject subject;
  bool in_negative = false;
  bool in_positive = false;
  bool unique_negative = false;
  bool unique_positive = false;
  bool only_negative = false;
  bool only_positive = false;
  long long negative_count = 0;
  long long positive_count = 0;
  std::vector<Circle> negative_witnesses;
  std::vector<Circle> positive_witnesses;
};

// Profiles for every edge / every vertex from a single circle enumeration.
// in_negative is also computed structurally (membership in an unbalanced
// block) and any disagreement with the enumeration throws std::logic_error.
std::vector<IncidenceProfile> all_edge_profiles(const SignedGraph& g,
                                                const Budget& budget = {});
std::vector<IncidenceProfile> all_vertex_profiles(const SignedGraph& g,
                                                  const Budget& budget = {});

IncidenceProfile edge_profile(const SignedGraph& g, int edge_id,
                              const Budget& budget = {});
IncidenceProfile vertex_profile(const SignedGraph& g, int v,
                                const Budget& budget = {});

// Least circle of the wanted sign containing both subjects, if any.
std::optional<Circle> pair_common_circle(const SignedGraph& g, Subject a,
                                         Subject b, Sign want,
                                         const Budget& budget = {});

// Conjectures and theorems the harness can try to falsify on an instance.
//   E5           edges on no positive circle = isthmi plus balancing edges
//   V4           vertices on no positive circle = vertices all of whose
//                circle-carrying blocks are unbalanced with the vertex
//                divalent and block-minus-vertex balanced
//   VP4-theorem  vertices on no negative circle = vertices in balanced
//                blocks only
//   E2-3conn     in a 3-connected unbalanced graph every edge pair shares
//                a negative circle
//   EP2-3conn    in a 3-connected graph with a positive circle every edge
//                pair shares a positive circle
extern const std::vector<std::string> kConjectureIds;

struct ConjectureReport {
  std::string id;
  std::string instance;
  bool applicable = false;
  std::vector<std::string> oracle_set;     // subject labels, sorted
  std::vector<std::string> predicted_set;  // subject labels, sorted
  bool agrees = true;
  std::optional<std::string> counterexample;
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Oracle set by circle enumeration, predicted set by the conjecture's
// structural predicate; agrees means the two sets are equal.  An empty
// instance label is replaced by a generated "n=..,m=..,signs=.." tag.
// Unknown ids throw std::invalid_argument.
ConjectureReport conjecture_report(const SignedGraph& g, const std::string& id,
                                   const Budget& budget = {},
                                   const std::string& instance_label = "");

}  // namespace sgc
