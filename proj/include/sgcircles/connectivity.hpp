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

#include <vector>

#include "sgcircles/signed_graph.hpp"

namespace sgc {

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const SignedGraph& g);

bool is_connected(const SignedGraph& g);

// Vertex connectivity of the underlying graph.  Conventions: an empty or
// one-vertex graph has connectivity 0; K_n has connectivity n-1; otherwise
// the minimum number of vertices whose removal disconnects the graph,
// computed by unit-capacity max-flow between non-adjacent vertex pairs.
int vertex_connectivity(const SignedGraph& g);

bool is_k_connected(const SignedGraph& g, int k);

}  // namespace sgc
