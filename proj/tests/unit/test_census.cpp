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

#include <set>
#include <vector>

#include "common/fixtures.hpp"
#include "doctest.h"
#include "sgcircles/census.hpp"
#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"

using sgc::CensusReport;
using sgc::NegativeCircleVector;
using sgc::Sign;
using sgc::SignedGraph;

namespace {

// Every vector attainable by any signature at all, brute force over 2^m.
std::set<NegativeCircleVector> all_signature_vectors(const SignedGraph& g) {
  std::set<NegativeCircleVector> out;
  const int m = g.edge_count();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<Sign> signs(static_cast<size_t>(m), Sign::Plus);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) signs[static_cast<size_t>(i)] = Sign::Minus;
    out.insert(sgc::negative_circle_vector(g.with_signs(signs)));
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("census");

TEST_CASE("class counts follow the cyclomatic number") {
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete(4)).class_count == 8);
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete(5)).class_count == 64);
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete_bipartite(2, 3))
            .class_count == 4);
  CHECK(sgc::vector_set_and_dimension(sgc::make_cycle(4)).class_count == 2);
  CHECK(
      sgc::vector_set_and_dimension(sgtest::load_fixture("tree.sgt")).class_count ==
      1);
}

TEST_CASE("representatives carry an all-positive spanning forest") {
  SignedGraph g = sgc::make_complete(4);
  sgc::SpanningForest f = sgc::spanning_forest(g);
  for (unsigned long long mask = 0; mask < 8; ++mask) {
    SignedGraph rep = sgc::signature_for_mask(g, mask);
    for (int e : f.forest_edges) CHECK(rep.sign_of(e) == Sign::Plus);
  }
}

TEST_CASE("representatives enumerate pairwise switching-inequivalent signatures") {
  SignedGraph g = sgc::make_cycle(4);
  const auto reps = sgc::enumerate_signatures(g);
  REQUIRE(reps.size() == 2);
  CHECK(sgc::negative_circle_vector(reps[0]) !=
        sgc::negative_circle_vector(reps[1]));
}

TEST_CASE("K4 census: spectrum, vectors, dimension") {
  CensusReport r = sgc::vector_set_and_dimension(sgc::make_complete(4));
  REQUIRE(r.spectra.size() == 2);
  CHECK(r.spectra[0].first == 3);
  CHECK(r.spectra[0].second == std::vector<long long>{0, 2, 4});
  CHECK(r.spectra[1].first == 4);
  CHECK(r.spectra[1].second == std::vector<long long>{0, 2});

  REQUIRE(r.vector_set.size() == 3);
  CHECK(r.vector_set[0].counts == std::vector<long long>{0, 0});
  CHECK(r.vector_set[1].counts == std::vector<long long>{2, 2});
  CHECK(r.vector_set[2].counts == std::vector<long long>{4, 0});
  CHECK(r.affine_dimension == 2);
  CHECK(r.witness_masks.front() == 0);
}

TEST_CASE("affine dimension of the complete and bipartite families") {
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete(3)).affine_dimension ==
        1);
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete(4)).affine_dimension ==
        2);
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete(5)).affine_dimension ==
        3);
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete_bipartite(2, 3))
            .affine_dimension == 1);
  CHECK(sgc::vector_set_and_dimension(sgc::make_complete_bipartite(2, 4))
            .affine_dimension == 1);
}

TEST_CASE("census vectors equal the brute force over all signatures") {
  for (const SignedGraph& g :
       {sgc::make_complete(3), sgc::make_cycle(4),
        sgc::generate_graph("theta:1,2,2", "all-plus"),
        sgc::make_complete_bipartite(2, 3)}) {
    CensusReport r = sgc::vector_set_and_dimension(g);
    std::set<NegativeCircleVector> brute = all_signature_vectors(g);
    CHECK(std::set<NegativeCircleVector>(r.vector_set.begin(),
                                         r.vector_set.end()) == brute);
  }
}

TEST_CASE("witness masks reproduce their vectors") {
  SignedGraph g = sgc::make_complete(4);
  CensusReport r = sgc::vector_set_and_dimension(g);
  REQUIRE(r.witness_masks.size() == r.vector_set.size());
  for (size_t i = 0; i < r.vector_set.size(); ++i)
    CHECK(sgc::negative_circle_vector(
              sgc::signature_for_mask(g, r.witness_masks[i])) ==
          r.vector_set[i]);
}

TEST_CASE("threaded census agrees with the serial one") {
  SignedGraph g = sgc::make_complete(5);
  CensusReport serial = sgc::vector_set_and_dimension(g, {}, 1);
  CensusReport threaded = sgc::vector_set_and_dimension(g, {}, 4);
  CHECK(serial.vector_set == threaded.vector_set);
  CHECK(serial.witness_masks == threaded.witness_masks);
  CHECK(serial.spectra == threaded.spectra);
  CHECK(serial.affine_dimension == threaded.affine_dimension);
}

TEST_CASE("a row sink streams every class in mask order") {
  SignedGraph g = sgc::make_complete(4);
  std::vector<unsigned long long> masks;
  std::vector<NegativeCircleVector> rows;
  sgc::vector_set_and_dimension(g, {}, 4,
                                [&](unsigned long long mask,
                                    const NegativeCircleVector& v) {
                                  masks.push_back(mask);
                                  rows.push_back(v);
                                });
  REQUIRE(masks.size() == 8);
  for (size_t i = 0; i < masks.size(); ++i) {
    CHECK(masks[i] == i);
    CHECK(rows[i] == sgc::negative_circle_vector(
                         sgc::signature_for_mask(g, masks[i])));
  }
}

TEST_CASE("single-length spectrum shortcut") {
  SignedGraph g = sgc::make_complete(4);
  CHECK(sgc::circle_count_spectrum(g, 3) == std::vector<long long>{0, 2, 4});
  CHECK(sgc::circle_count_spectrum(g, 4) == std::vector<long long>{0, 2});
}

TEST_CASE("class budget fails loudly") {
  sgc::Budget tiny;
  tiny.max_classes = 4;
  CHECK_THROWS_AS(sgc::vector_set_and_dimension(sgc::make_complete(5), tiny),
                  sgc::BudgetExceeded);
}

TEST_SUITE_END();
