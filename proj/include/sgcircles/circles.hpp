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
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgcircles/budget.hpp"
#include "sgcircles/signed_graph.hpp"

namespace sgc {

class NotACircleError : public std::invalid_argument {
 public:
  explicit NotACircleError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A circle (simple closed path) of a fixed graph.  The vertex cycle is kept
// in canonical form: smallest vertex first, then its smaller neighbor, so
// equal circles compare equal and sort stably by (length, vertex cycle).
class Circle {
 public:
  // Validates that the vertex sequence is a cycle of g (length >= 3, all
  // consecutive edges present, no repeats) and canonicalizes it.
  static Circle from_vertex_cycle(const SignedGraph& g, std::vector<int> cycle);
  // Validates that the edge ids form a single circle covering all of them.
  static Circle from_edge_ids(const SignedGraph& g, std::vector<int> edge_ids);
  // Parses "0-1-2" against g.
  static Circle parse(const SignedGraph& g, const std::string& text);

  int length() const { return static_cast<int>(vertices_.size()); }
  Sign sign() const { return sign_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& edge_ids() const { return edge_ids_; }  // sorted
  bool contains_vertex(int v) const;
  bool contains_edge(int edge_id) const;
  std::string to_string() const;  // "0-1-2"

  bool operator==(const Circle& o) const { return edge_ids_ == o.edge_ids_; }
  // (length, vertex cycle) order; ties cannot happen for distinct circles.
  std::strong_ordering operator<=>(const Circle& o) const;

 private:
  friend std::vector<Circle> enumerate_circles(const SignedGraph&,
                                               const struct EnumerateOptions&);
  Circle() = default;

  std::vector<int> vertices_;
  std::vector<int> edge_ids_;
  Sign sign_ = Sign::Plus;
};

// A set of circles of one graph, keyed by edge-id set.
class CircleSet {
 public:
  CircleSet() = default;
  explicit CircleSet(std::vector<Circle> circles);

  void insert(const Circle& c);
  bool contains(const Circle& c) const;
  const std::vector<Circle>& circles() const { return circles_; }  // sorted
  size_t size() const { return circles_.size(); }
  bool empty() const { return circles_.empty(); }

  bool operator==(const CircleSet& o) const;

 private:
  std::vector<Circle> circles_;          // canonical order, deduplicated
  std::set<std::vector<int>> edge_keys_;
};

struct EnumerateOptions {
  std::optional<Sign> sign_filter;
  bool chordless_only = false;
  std::optional<int> length_max;
  Budget budget;
};

// Every circle of g passing the filters, exactly once, in canonical order.
// Rooted DFS over paths anchored at each circle's smallest vertex; the
// budget counts circles discovered before sign/chord filtering.
std::vector<Circle> enumerate_circles(const SignedGraph& g,
                                      const EnumerateOptions& opts = {});

// Sign of the circle formed by edge_ids; throws NotACircleError otherwise.
Sign circle_sign(const SignedGraph& g, const std::vector<int>& edge_ids);

// Counts of negative circles by length, lengths 3..n.
struct NegativeCircleVector {
  int n = 0;
  std::vector<long long> counts;  // counts[i] is the number of length i+3

  long long count_for_length(int l) const;
  std::string to_string() const;  // "(4, 0)"
  bool operator==(const NegativeCircleVector&) const = default;
  auto operator<=>(const NegativeCircleVector&) const = default;
};

NegativeCircleVector negative_circle_vector(const SignedGraph& g,
                                            const Budget& budget = {});

// Spanning-forest machinery shared by realization and the census: ids of a
// BFS forest's edges plus, for each non-forest edge, its fundamental circle.
struct SpanningForest {
  std::vector<int> forest_edges;
  std::vector<int> non_forest_edges;
};
SpanningForest spanning_forest(const SignedGraph& g);
Circle fundamental_circle(const SignedGraph& g, const SpanningForest& f,
                          int non_forest_edge);

// Searches for a signature of g's underlying graph whose set of negative
// circles is exactly b (signs of g itself are ignored).  Forest edges are
// set positive, each non-forest edge negative iff its fundamental circle is
// in b, and the candidate is verified by full enumeration.
std::optional<SignedGraph> realize_circle_set(const SignedGraph& g,
                                              const CircleSet& b,
                                              const Budget& budget = {});

struct ThetaCheckResult {
  bool holds = true;
  // Three circles of a violating theta, if any.
  std::optional<std::array<Circle, 3>> violating_theta;
};

// Checks whether b can be a negative-circle set by the theta parity rule:
// within any theta subgraph each edge lies on two of the three circles, so
// the product of the three circle signs is positive and a negative-circle
// set meets the triple in an even count (0 or 2).  Thetas are enumerated as
// pairs of circles whose edge intersection is a nonempty simple path.
ThetaCheckResult verify_theta_criterion(const SignedGraph& g,
                                        const CircleSet& b,
                                        const Budget& budget = {});

}  // namespace sgc
