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
#include <set>
#include <vector>

#include "common/fixtures.hpp"
#include "common/oracles.hpp"
#include "doctest.h"
#include "sgcircles/balance.hpp"
#include "sgcircles/signed_graph.hpp"

using sgc::BalanceReport;
using sgc::Block;
using sgc::Sign;
using sgc::SignedGraph;

TEST_SUITE_BEGIN("balance");

TEST_CASE("balance agrees with the circle oracle on the corpus") {
  for (const auto& [name, g] : sgtest::standard_corpus()) {
    CAPTURE(name);
    CHECK(sgc::is_balanced(g).balanced == sgtest::oracle_balanced(g));
  }
}

TEST_CASE("balanced graphs yield a consistent marking") {
  for (const auto& [name, g] : sgtest::standard_corpus()) {
    BalanceReport r = sgc::is_balanced(g);
    if (!r.balanced) continue;
    CAPTURE(name);
    REQUIRE(r.marking.has_value());
    CHECK(!r.witness.has_value());
    for (const sgc::Edge& e : g.edges())
      CHECK(e.sign == (*r.marking)[static_cast<size_t>(e.u)] *
                          (*r.marking)[static_cast<size_t>(e.v)]);
  }
}

TEST_CASE("unbalanced graphs yield a negative circle witness") {
  for (const auto& [name, g] : sgtest::standard_corpus()) {
    BalanceReport r = sgc::is_balanced(g);
    if (r.balanced) continue;
    CAPTURE(name);
    REQUIRE(r.witness.has_value());
    CHECK(!r.marking.has_value());
    CHECK(r.witness->sign() == Sign::Minus);
  }
}

TEST_CASE("switching never changes balance") {
  SignedGraph g = sgtest::load_fixture("k4_oneneg.sgt");
  for (unsigned mask = 0; mask < 16; ++mask)
    CHECK(!sgc::is_balanced(sgc::apply_switching_mask(g, mask)).balanced);
  SignedGraph h = sgtest::load_fixture("c4_allneg.sgt");
  for (unsigned mask = 0; mask < 16; ++mask)
    CHECK(sgc::is_balanced(sgc::apply_switching_mask(h, mask)).balanced);
}

TEST_CASE("all-negative even circle is balanced, odd is not") {
  CHECK(sgc::is_balanced(sgtest::load_fixture("c4_allneg.sgt")).balanced);
  CHECK(!sgc::is_balanced(sgtest::load_fixture("c5_allneg.sgt")).balanced);
}

TEST_CASE("block decomposition of the bowtie") {
  SignedGraph g = sgtest::load_fixture("bowtie_negneg.sgt");
  sgc::BlockDecomposition d = sgc::blocks(g);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.cut_vertices == std::vector<int>{2});
  CHECK(d.isthmi.empty());
  CHECK(d.blocks[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(d.blocks[1].vertices == std::vector<int>{2, 3, 4});
  CHECK(!d.blocks[0].balanced);
  CHECK(!d.blocks[1].balanced);
}

TEST_CASE("block decomposition of two triangles joined by a bridge") {
  SignedGraph g = sgc::parse_sgt(
      "7 8\n0 1 -\n0 2 -\n1 2 -\n2 3 +\n3 4 +\n3 5 +\n4 5 -\n5 6 +\n");
  sgc::BlockDecomposition d = sgc::blocks(g);
  REQUIRE(d.blocks.size() == 4);
  CHECK(d.cut_vertices == std::vector<int>{2, 3, 5});
  REQUIRE(d.isthmi.size() == 2);
  int isthmus_blocks = 0;
  for (const Block& b : d.blocks) {
    if (b.is_isthmus) {
      ++isthmus_blocks;
      CHECK(b.edge_ids.size() == 1);
      CHECK(b.balanced);
    }
  }
  CHECK(isthmus_blocks == 2);
}

TEST_CASE("a tree is all isthmi and no cut-free blocks") {
  SignedGraph g = sgtest::load_fixture("tree.sgt");
  sgc::BlockDecomposition d = sgc::blocks(g);
  CHECK(d.blocks.size() == 5);
  CHECK(d.isthmi.size() == 5);
  for (const Block& b : d.blocks) CHECK(b.balanced);
}

TEST_CASE("blocks partition the edges and pairwise share at most one vertex") {
  for (const auto& [name, g] : sgtest::standard_corpus()) {
    CAPTURE(name);
    sgc::BlockDecomposition d = sgc::blocks(g);
    std::vector<int> seen;
    for (const Block& b : d.blocks)
      seen.insert(seen.end(), b.edge_ids.begin(), b.edge_ids.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> all;
    for (int id = 0; id < g.edge_count(); ++id) all.push_back(id);
    CHECK(seen == all);

    for (size_t i = 0; i < d.blocks.size(); ++i)
      for (size_t j = i + 1; j < d.blocks.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(
            d.blocks[i].vertices.begin(), d.blocks[i].vertices.end(),
            d.blocks[j].vertices.begin(), d.blocks[j].vertices.end(),
            std::back_inserter(common));
        CHECK(common.size() <= 1);
      }
  }
}

TEST_CASE("block balance matches whole-graph balance per block") {
  for (const auto& [name, g] : sgtest::standard_corpus()) {
    CAPTURE(name);
    for (const Block& b : sgc::blocks(g).blocks)
      CHECK(b.balanced == sgc::edge_set_balanced(g, b.edge_ids));
  }
}

TEST_CASE("balancing edges") {
  SignedGraph k3 = sgtest::load_fixture("k3_allneg.sgt");
  CHECK(sgc::balancing_edges(k3) == std::vector<int>{0, 1, 2});
  SignedGraph k4 = sgtest::load_fixture("k4_allneg.sgt");
  CHECK(sgc::balancing_edges(k4).empty());
  SignedGraph c4 = sgtest::load_fixture("c4_oneneg.sgt");
  CHECK(sgc::balancing_edges(c4) == std::vector<int>{0, 1, 2, 3});
  SignedGraph balanced = sgtest::load_fixture("c4_allneg.sgt");
  CHECK(sgc::balancing_edges(balanced).empty());
}

TEST_CASE("balancing vertices") {
  SignedGraph k3 = sgtest::load_fixture("k3_allneg.sgt");
  CHECK(sgc::balancing_vertices(k3) == std::vector<int>{0, 1, 2});
  SignedGraph k4 = sgtest::load_fixture("k4_allneg.sgt");
  CHECK(sgc::balancing_vertices(k4).empty());
  SignedGraph bowtie = sgtest::load_fixture("bowtie_negneg.sgt");
  CHECK(sgc::balancing_vertices(bowtie) == std::vector<int>{2});
}

TEST_CASE("deletion helpers preserve vertex labels") {
  SignedGraph g = sgtest::load_fixture("k4_allneg.sgt");
  SignedGraph no_edge = sgc::delete_edge(g, 0);
  CHECK(no_edge.vertex_count() == 4);
  CHECK(no_edge.edge_count() == 5);
  CHECK(!no_edge.edge_id(0, 1).has_value());
  SignedGraph no_vertex = sgc::delete_vertex_edges(g, 1);
  CHECK(no_vertex.vertex_count() == 4);
  CHECK(no_vertex.edge_count() == 3);
  CHECK(no_vertex.degree(1) == 0);
  CHECK(no_vertex.edge_id(2, 3).has_value());
}

TEST_SUITE_END();
