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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgcircles/sign.hpp"

namespace sgc {

struct Edge {
  int u = 0;  // u < v always
  int v = 0;
  Sign sign = Sign::Plus;

  int other(int w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

// Raised by the SGT parser; line is 1-based within the input stream.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A simple graph with signed edges.  Vertices are 0..n-1.  Edges are kept
// sorted by (u, v) and an edge id is the index into that order, so ids are
// canonical and witnesses built from them compare deterministically.
// Instances are immutable after construction; every operation on them is a
// pure function, so values can be shared freely across threads.
class SignedGraph {
 public:
  // Validates simplicity (no loops, no parallel edges) and endpoint range;
  // normalizes endpoint order and sorts the edge list.
  SignedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
  Sign sign_of(int id) const { return edges_[static_cast<size_t>(id)].sign; }

  // Edge ids incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const {
    return incident_[static_cast<size_t>(v)];
  }
  int degree(int v) const {
    return static_cast<int>(incident_[static_cast<size_t>(v)].size());
  }

  std::optional<int> edge_id(int u, int v) const;
  std::string edge_label(int id) const;  // "u-v"

  // Same underlying graph, different signs (one per edge id).
  SignedGraph with_signs(const std::vector<Sign>& signs) const;

  bool same_underlying_graph(const SignedGraph& other) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// SGT text format: '#' comment lines and blank lines are ignored; first
// payload line is "n m"; then m lines "u v s" with s in {+,-}.
SignedGraph parse_sgt(std::istream& in);
SignedGraph parse_sgt(const std::string& text);
std::string render_sgt(const SignedGraph& g);

// Flips the sign of exactly the edges with one endpoint in x.
SignedGraph apply_switching(const SignedGraph& g, const std::vector<int>& x);
// Bitmask variant for exhaustive scans (bit v set <=> v in the set); only
// valid for n <= 63.
SignedGraph apply_switching_mask(const SignedGraph& g, std::uint64_t mask);

// Multiplies every edge sign by minus.
SignedGraph negate_all(const SignedGraph& g);

// Graph family spec: "kn:N", "krs:R,S", "cycle:N", "path:N", "theta:A,B,C".
// Signing spec: "all-plus", "all-minus", "list:SIGNS" (one +/- per edge in
// sorted edge order), "random:P".
//
// random:P draws each edge minus with probability P from a pinned stream:
// std::mt19937_64 seeded with `seed`, one draw per edge in sorted edge
// order, u = (rng() >> 11) * 2^-53, minus iff u < P.
SignedGraph generate_graph(const std::string& family, const std::string& signing,
                           std::uint64_t seed = 0);

// Underlying structures of the supported families, all-plus signs.
SignedGraph make_complete(int n);
SignedGraph make_complete_bipartite(int r, int s);
SignedGraph make_cycle(int n);
SignedGraph make_path(int n);
// Two terminal vertices joined by three internally disjoint paths with a, b
// and c edges; at most one length may be 1.
SignedGraph make_theta(int a, int b, int c);

}  // namespace sgc
