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

#include <algorithm>
#include <string>
#include <vector>

#include "common/fixtures.hpp"
#include "common/oracles.hpp"
#include "doctest.h"
#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"

using sgc::Circle;
using sgc::CircleSet;
using sgc::EnumerateOptions;
using sgc::Sign;
using sgc::SignedGraph;

namespace {

std::vector<sgtest::OracleCircle> as_oracle(const std::vector<Circle>& circles) {
  std::vector<sgtest::OracleCircle> out;
  for (const Circle& c : circles)
    out.push_back(sgtest::OracleCircle{c.vertices(), c.sign()});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("circles");

TEST_CASE("enumeration matches the brute-force oracle on the corpus") {
  for (const auto& [name, g] : sgtest::standard_corpus()) {
    CAPTURE(name);
    CHECK(as_oracle(sgc::enumerate_circles(g)) == sgtest::oracle_circles(g));
  }
}

TEST_CASE("circles come out in canonical order, exactly once") {
  SignedGraph g = sgc::make_complete(4);
  const auto circles = sgc::enumerate_circles(g);
  std::vector<std::string> got;
  for (const Circle& c : circles) got.push_back(c.to_string());
  const std::vector<std::string> want = {"0-1-2",   "0-1-3",   "0-2-3",
                                         "1-2-3",   "0-1-2-3", "0-1-3-2",
                                         "0-2-1-3"};
  CHECK(got == want);
}

TEST_CASE("canonicalization is rotation and reflection proof") {
  SignedGraph g = sgc::make_complete(4);
  Circle a = Circle::from_vertex_cycle(g, {2, 1, 0});
  Circle b = Circle::from_vertex_cycle(g, {1, 2, 0});
  Circle c = Circle::parse(g, "0-1-2");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.to_string() == "0-1-2");
  Circle quad = Circle::from_vertex_cycle(g, {3, 1, 0, 2});
  CHECK(quad.to_string() == "0-1-3-2");
}

TEST_CASE("circle validation rejects non-circles") {
  SignedGraph g = sgc::generate_graph("cycle:5", "all-plus");
  CHECK_THROWS_AS(Circle::from_vertex_cycle(g, {0, 1, 2}), sgc::NotACircleError);
  CHECK_THROWS_AS(Circle::from_vertex_cycle(g, {0, 1}), sgc::NotACircleError);
  CHECK_THROWS_AS(Circle::from_vertex_cycle(g, {0, 1, 2, 1}),
                  sgc::NotACircleError);
  CHECK_THROWS_AS(Circle::from_edge_ids(g, {0, 1}), sgc::NotACircleError);

  SignedGraph bowtie = sgtest::load_fixture("bowtie_negneg.sgt");
  std::vector<int> two_triangles;
  for (int id = 0; id < bowtie.edge_count(); ++id) two_triangles.push_back(id);
  CHECK_THROWS_AS(Circle::from_edge_ids(bowtie, two_triangles),
                  sgc::NotACircleError);
}

TEST_CASE("circle sign multiplies edge signs") {
  SignedGraph g = sgtest::load_fixture("k4_oneneg.sgt");
  CHECK(Circle::parse(g, "0-1-2").sign() == Sign::Minus);
  CHECK(Circle::parse(g, "1-2-3").sign() == Sign::Plus);
  CHECK(sgc::circle_sign(g, Circle::parse(g, "0-1-2").edge_ids()) ==
        Sign::Minus);
  CHECK_THROWS_AS(sgc::circle_sign(g, {0, 1}), sgc::NotACircleError);
}

TEST_CASE("sign, chord, and length filters") {
  SignedGraph g = sgtest::load_fixture("k4_oneneg.sgt");
  EnumerateOptions neg;
  neg.sign_filter = Sign::Minus;
  CHECK(sgc::enumerate_circles(g, neg).size() == 4);
  EnumerateOptions pos;
  pos.sign_filter = Sign::Plus;
  CHECK(sgc::enumerate_circles(g, pos).size() == 3);

  EnumerateOptions chordless;
  chordless.chordless_only = true;
  const auto triangles = sgc::enumerate_circles(g, chordless);
  CHECK(triangles.size() == 4);
  for (const Circle& c : triangles) CHECK(c.length() == 3);

  EnumerateOptions short_only;
  short_only.length_max = 3;
  CHECK(sgc::enumerate_circles(g, short_only).size() == 4);
}

TEST_CASE("enumeration budget fails loudly") {
  SignedGraph g = sgc::make_complete(5);
  EnumerateOptions opts;
  opts.budget.max_circles = 3;
  CHECK_THROWS_AS(sgc::enumerate_circles(g, opts), sgc::BudgetExceeded);
}

TEST_CASE("circle counts for the complete graphs") {
  CHECK(sgc::enumerate_circles(sgc::make_complete(4)).size() == 7);
  CHECK(sgc::enumerate_circles(sgc::make_complete(5)).size() == 37);
}

TEST_CASE("negative circle vector") {
  SignedGraph k4neg = sgtest::load_fixture("k4_allneg.sgt");
  sgc::NegativeCircleVector v = sgc::negative_circle_vector(k4neg);
  CHECK(v.counts == std::vector<long long>{4, 0});
  CHECK(v.count_for_length(3) == 4);
  CHECK(v.count_for_length(4) == 0);
  CHECK(v.to_string() == "(4, 0)");

  SignedGraph oneneg = sgtest::load_fixture("k4_oneneg.sgt");
  CHECK(sgc::negative_circle_vector(oneneg).counts ==
        std::vector<long long>{2, 2});
}

TEST_CASE("circle set deduplicates by edge set") {
  SignedGraph g = sgc::make_complete(4);
  CircleSet s;
  s.insert(Circle::parse(g, "0-1-2"));
  s.insert(Circle::from_vertex_cycle(g, {2, 0, 1}));
  s.insert(Circle::parse(g, "0-1-3"));
  CHECK(s.size() == 2);
  CHECK(s.contains(Circle::parse(g, "0-1-2")));
  CHECK(!s.contains(Circle::parse(g, "0-2-3")));
  CHECK(s.circles().front().to_string() == "0-1-2");
}

TEST_CASE("spanning forest and fundamental circles") {
  SignedGraph g = sgc::make_complete(4);
  sgc::SpanningForest f = sgc::spanning_forest(g);
  CHECK(f.forest_edges.size() == 3);
  CHECK(f.non_forest_edges.size() == 3);
  for (int e : f.non_forest_edges) {
    Circle c = sgc::fundamental_circle(g, f, e);
    CHECK(c.contains_edge(e));
    int non_forest_on_circle = 0;
    for (int id : c.edge_ids())
      if (std::find(f.forest_edges.begin(), f.forest_edges.end(), id) ==
          f.forest_edges.end())
        ++non_forest_on_circle;
    CHECK(non_forest_on_circle == 1);
  }

  SignedGraph forest = sgtest::load_fixture("tree.sgt");
  CHECK(sgc::spanning_forest(forest).non_forest_edges.empty());
}

TEST_CASE("theta parity: a negative-circle set meets each theta evenly") {
  SignedGraph g = sgc::make_complete(4);
  CircleSet one;
  one.insert(Circle::parse(g, "0-1-2"));
  sgc::ThetaCheckResult bad = sgc::verify_theta_criterion(g, one);
  CHECK(!bad.holds);
  REQUIRE(bad.violating_theta.has_value());
  int hits = 0;
  for (const Circle& c : *bad.violating_theta)
    if (one.contains(c)) ++hits;
  CHECK(hits % 2 == 1);

  CircleSet empty;
  CHECK(sgc::verify_theta_criterion(g, empty).holds);

  CircleSet all_triangles;
  for (const Circle& c : sgc::enumerate_circles(g))
    if (c.length() == 3) all_triangles.insert(c);
  CHECK(sgc::verify_theta_criterion(g, all_triangles).holds);
}

TEST_CASE("realization finds signatures exactly for theta-consistent sets") {
  SignedGraph g = sgc::make_complete(4);

  CircleSet triangles;
  for (const Circle& c : sgc::enumerate_circles(g))
    if (c.length() == 3) triangles.insert(c);
  auto realized = sgc::realize_circle_set(g, triangles);
  REQUIRE(realized.has_value());
  EnumerateOptions neg;
  neg.sign_filter = Sign::Minus;
  CHECK(CircleSet(sgc::enumerate_circles(*realized, neg)) == triangles);

  CircleSet impossible;
  impossible.insert(Circle::parse(g, "0-1-2"));
  CHECK(!sgc::realize_circle_set(g, impossible).has_value());
}

TEST_CASE("every achievable circle set on a theta graph round-trips") {
  SignedGraph g = sgtest::load_fixture("theta122_allplus.sgt");
  const auto circles = sgc::enumerate_circles(g);
  REQUIRE(circles.size() == 3);
  for (unsigned mask = 0; mask < 8; ++mask) {
    CircleSet b;
    for (size_t i = 0; i < circles.size(); ++i)
      if (mask >> i & 1u) b.insert(circles[i]);
    auto realized = sgc::realize_circle_set(g, b);
    const bool theta_ok = sgc::verify_theta_criterion(g, b).holds;
    CHECK(realized.has_value() == theta_ok);
    if (realized) {
      EnumerateOptions neg;
      neg.sign_filter = Sign::Minus;
      CHECK(CircleSet(sgc::enumerate_circles(*realized, neg)) == b);
    }
  }
}

TEST_SUITE_END();
