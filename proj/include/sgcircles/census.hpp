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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sgcircles/budget.hpp"
#include "sgcircles/circles.hpp"
#include "sgcircles/signed_graph.hpp"

namespace sgc {

// Switching classes of signatures of the underlying graph.  Every class has
// exactly one representative with a fixed spanning forest all positive; the
// class label is the sign mask over non-forest edges in edge-id order (bit
// set = negative).  Class count is 2^(m-n+c).

// Representative signed graph for one class label.  Signs of g are ignored.
SignedGraph signature_for_mask(const SignedGraph& g, unsigned long long mask);

// Calls visit(mask, representative) for every class in mask order.
void for_each_signature_class(
    const SignedGraph& g, const Budget& budget,
    const std::function<void(unsigned long long, const SignedGraph&)>& visit);

// All class representatives, materialized in mask order.
std::vector<SignedGraph> enumerate_signatures(const SignedGraph& g,
                                              const Budget& budget = {});

struct CensusReport {
  std::string graph;
  int cyclomatic = 0;         // m - n + c, the non-forest edge count
  long long class_count = 0;  // 2^cyclomatic
  // Attained negative-circle counts per length, lengths 3..n, sorted.
  std::vector<std::pair<int, std::vector<long long>>> spectra;
  std::vector<NegativeCircleVector> vector_set;   // sorted, deduplicated
  std::vector<unsigned long long> witness_masks;  // least class attaining each
  int affine_dimension = 0;
};

// Row stream for census dumps: one call per class, in mask order when
// running on one thread.
using CensusRowSink =
    std::function<void(unsigned long long mask, const NegativeCircleVector&)>;

// Full census over all switching classes.  Circles are enumerated once on
// the underlying graph; per class, a circle is negative exactly when it
// carries an odd number of mask-negative non-forest edges (the forest is
// all positive in every representative).  The affine dimension is the exact
// integer rank of the differences v - v0 over the vector set.  With more
// than one thread the class range is split into chunks whose partial
// results merge deterministically; a row sink forces single-threaded
// streaming in mask order.
CensusReport vector_set_and_dimension(const SignedGraph& g,
                                      const Budget& budget = {},
                                      int threads = 1,
                                      const CensusRowSink& row_sink = {});

// Attained values of the negative-circle count at one length, sorted.
std::vector<long long> circle_count_spectrum(const SignedGraph& g, int length,
                                             const Budget& budget = {});

}  // namespace sgc
