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

#include <string>
#include <vector>

#include "common/fixtures.hpp"
#include "common/oracles.hpp"
#include "doctest.h"
#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"
#include "sgcircles/structure.hpp"

using sgc::BridgeReport;
using sgc::Circle;
using sgc::ConnectivityClass;
using sgc::HamiltonianSignSurvey;
using sgc::Sign;
using sgc::SignedGraph;

TEST_SUITE_BEGIN("structure");

TEST_CASE("hamiltonian sign counts match the permutation oracle") {
  for (const auto& [name, g] : sgtest::standard_corpus()) {
    if (g.vertex_count() > 9) continue;
    CAPTURE(name);
    HamiltonianSignSurvey s = sgc::hamiltonian_sign_survey(g);
    const auto [neg, pos] = sgtest::oracle_hamiltonian_counts(g);
    CHECK(s.negative_count == neg);
    CHECK(s.positive_count == pos);
    CHECK(s.hamiltonian == (neg + pos > 0));
  }
}

TEST_CASE("the all-negative K4 is a positive-only exception") {
  HamiltonianSignSurvey s =
      sgc::hamiltonian_sign_survey(sgtest::load_fixture("k4_allneg.sgt"));
  CHECK(s.hamiltonian);
  CHECK(s.negative_count == 0);
  CHECK(s.positive_count == 3);
  CHECK(s.classification == HamiltonianSignSurvey::Classification::PositiveOnly);
  CHECK(s.s1_exception);
}

TEST_CASE("one negative edge in K4 gives both signs, no exception") {
  HamiltonianSignSurvey s =
      sgc::hamiltonian_sign_survey(sgtest::load_fixture("k4_oneneg.sgt"));
  CHECK(s.negative_count == 2);
  CHECK(s.positive_count == 1);
  CHECK(s.classification == HamiltonianSignSurvey::Classification::Both);
  CHECK(!s.s1_exception);
}

TEST_CASE("the exception flag needs imbalance") {
  HamiltonianSignSurvey negative_only =
      sgc::hamiltonian_sign_survey(sgtest::load_fixture("c5_allneg.sgt"));
  CHECK(negative_only.classification ==
        HamiltonianSignSurvey::Classification::NegativeOnly);
  CHECK(negative_only.s1_exception);

  HamiltonianSignSurvey balanced =
      sgc::hamiltonian_sign_survey(sgtest::load_fixture("c4_allneg.sgt"));
  CHECK(balanced.classification ==
        HamiltonianSignSurvey::Classification::PositiveOnly);
  CHECK(!balanced.s1_exception);

  HamiltonianSignSurvey none =
      sgc::hamiltonian_sign_survey(sgtest::load_fixture("bowtie_negneg.sgt"));
  CHECK(!none.hamiltonian);
  CHECK(none.classification == HamiltonianSignSurvey::Classification::None);
  CHECK(!none.s1_exception);
}

TEST_CASE("the Petersen graph has no Hamiltonian circle") {
  HamiltonianSignSurvey s =
      sgc::hamiltonian_sign_survey(sgtest::load_fixture("petersen_allplus.sgt"));
  CHECK(!s.hamiltonian);
  CHECK(s.negative_count == 0);
  CHECK(s.positive_count == 0);
  CHECK(!s.s1_exception);
}

TEST_CASE("removal classification of a K4 quad empties the graph") {
  SignedGraph g = sgc::make_complete(4);
  Circle quad = Circle::parse(g, "0-1-2-3");
  sgc::RemovalClassification r = sgc::removal_connectivity(g, quad);
  CHECK(r.edge_removal == ConnectivityClass::Disconnected);
  CHECK(r.vertex_removal == ConnectivityClass::Disconnected);
  bool noted = false;
  for (const auto& [k, v] : r.metadata)
    if (k == "vertex_removal_note") noted = true;
  CHECK(noted);
}

TEST_CASE("removal classification of a K5 triangle") {
  SignedGraph g = sgc::make_complete(5);
  Circle tri = Circle::parse(g, "0-1-2");
  sgc::RemovalClassification r = sgc::removal_connectivity(g, tri);
  CHECK(r.edge_removal == ConnectivityClass::TwoSeparable);
  CHECK(r.vertex_removal == ConnectivityClass::Separable);
}

TEST_CASE("removal classification of a K6 triangle keeps 3-connectivity") {
  SignedGraph g = sgc::make_complete(6);
  sgc::RemovalClassification r =
      sgc::removal_connectivity(g, Circle::parse(g, "0-1-2"));
  CHECK(r.edge_removal == ConnectivityClass::ThreeConnectedOrMore);
  CHECK(r.vertex_removal == ConnectivityClass::TwoSeparable);
}

TEST_CASE("removal scan tallies every circle of the sign") {
  SignedGraph g = sgtest::load_fixture("k4_allneg.sgt");
  sgc::RemovalScan neg = sgc::removal_scan(g, Sign::Minus);
  CHECK(neg.circle_count == 4);
  CHECK(neg.edge_class_counts[static_cast<size_t>(
            ConnectivityClass::Separable)] == 4);
  CHECK(neg.vertex_class_counts[static_cast<size_t>(
            ConnectivityClass::Separable)] == 4);
  REQUIRE(neg.edge_examples[static_cast<size_t>(ConnectivityClass::Separable)]
              .has_value());

  sgc::RemovalScan pos = sgc::removal_scan(g, Sign::Plus);
  CHECK(pos.circle_count == 3);
  CHECK(pos.edge_class_counts[static_cast<size_t>(
            ConnectivityClass::Disconnected)] == 3);
  CHECK(pos.vertex_class_counts[static_cast<size_t>(
            ConnectivityClass::Disconnected)] == 3);
}

TEST_CASE("bridges of a K4 triangle form one part through the fourth vertex") {
  SignedGraph g = sgc::make_complete(4);
  BridgeReport r = sgc::circle_bridges(g, Circle::parse(g, "0-1-2"));
  CHECK(r.chords.empty());
  REQUIRE(r.bridges.size() == 1);
  const sgc::BridgePart& b = r.bridges[0];
  CHECK(b.attachments == std::vector<int>{0, 1, 2});
  CHECK(b.interior == std::vector<int>{3});
  CHECK(b.edge_ids == std::vector<int>{2, 4, 5});
  CHECK(!b.is_chord);
}

TEST_CASE("bridges of a K4 quad are its two chords") {
  SignedGraph g = sgc::make_complete(4);
  BridgeReport r = sgc::circle_bridges(g, Circle::parse(g, "0-1-2-3"));
  CHECK(r.chords == std::vector<int>{1, 4});
  REQUIRE(r.bridges.size() == 2);
  for (const sgc::BridgePart& b : r.bridges) {
    CHECK(b.is_chord);
    CHECK(b.interior.empty());
    CHECK(b.attachments.size() == 2);
    CHECK(b.edge_ids.size() == 1);
  }
}

TEST_CASE("the inner star of the Petersen graph is one bridge") {
  SignedGraph g = sgtest::load_fixture("petersen_allplus.sgt");
  Circle outer = Circle::parse(g, "0-1-2-3-4");
  BridgeReport r = sgc::circle_bridges(g, outer);
  CHECK(r.chords.empty());
  REQUIRE(r.bridges.size() == 1);
  CHECK(r.bridges[0].attachments == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(r.bridges[0].interior == std::vector<int>{5, 6, 7, 8, 9});
  CHECK(r.bridges[0].edge_ids.size() == 10);
}

TEST_CASE("an isolated vertex is an edgeless bridge") {
  SignedGraph g = sgc::parse_sgt("5 4\n0 1 +\n1 2 +\n2 3 +\n0 3 +\n");
  BridgeReport r = sgc::circle_bridges(g, Circle::parse(g, "0-1-2-3"));
  CHECK(r.chords.empty());
  REQUIRE(r.bridges.size() == 1);
  CHECK(r.bridges[0].attachments.empty());
  CHECK(r.bridges[0].interior == std::vector<int>{4});
  CHECK(r.bridges[0].edge_ids.empty());
}

TEST_CASE("bridge edges partition the off-circle edges") {
  SignedGraph g = sgtest::load_fixture("k5_allneg.sgt");
  for (const Circle& c : sgc::enumerate_circles(g)) {
    BridgeReport r = sgc::circle_bridges(g, c);
    std::vector<int> seen;
    for (const sgc::BridgePart& b : r.bridges)
      seen.insert(seen.end(), b.edge_ids.begin(), b.edge_ids.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> expected;
    for (int id = 0; id < g.edge_count(); ++id)
      if (!c.contains_edge(id)) expected.push_back(id);
    CHECK(seen == expected);
  }
}

TEST_CASE("bridges reject foreign circles") {
  SignedGraph g = sgc::make_cycle(4);
  SignedGraph k4 = sgc::make_complete(4);
  Circle tri = Circle::parse(k4, "0-1-2");
  CHECK_THROWS_AS(sgc::circle_bridges(g, tri), sgc::NotACircleError);
}

TEST_CASE("induced subgraphs relabel in keep order") {
  SignedGraph g = sgtest::load_fixture("k4_allneg.sgt");
  SignedGraph h = sgc::induced_subgraph(g, {1, 2, 3});
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 3);
  for (int id = 0; id < h.edge_count(); ++id)
    CHECK(h.sign_of(id) == Sign::Minus);

  SignedGraph path = sgc::induced_subgraph(sgc::make_cycle(4), {0, 1, 2});
  CHECK(path.edge_count() == 2);
}

TEST_SUITE_END();
