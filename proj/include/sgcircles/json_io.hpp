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
#include <vector>

#include <json.hpp>

#include "sgcircles/balance.hpp"
#include "sgcircles/census.hpp"
#include "sgcircles/circles.hpp"
#include "sgcircles/incidence.hpp"
#include "sgcircles/optimization.hpp"
#include "sgcircles/signed_graph.hpp"
#include "sgcircles/structure.hpp"

// Report renderers.  nlohmann::json keeps object keys sorted, so a report
// rendered twice is byte-identical.

namespace sgc {

nlohmann::json graph_json(const SignedGraph& g);
nlohmann::json circle_json(const Circle& c);

nlohmann::json balance_json(const SignedGraph& g, const BalanceReport& r);
nlohmann::json blocks_json(const SignedGraph& g, const BlockDecomposition& d);
nlohmann::json circles_json(const std::vector<Circle>& cs);
nlohmann::json vector_json(const NegativeCircleVector& v);
nlohmann::json realize_json(const SignedGraph& g,
                            const std::optional<SignedGraph>& realized,
                            const ThetaCheckResult& theta);
nlohmann::json profile_json(const SignedGraph& g, const IncidenceProfile& p);
nlohmann::json profiles_json(const SignedGraph& g,
                             const std::vector<IncidenceProfile>& ps);
nlohmann::json conjecture_json(const ConjectureReport& r);
nlohmann::json frustration_json(const SignedGraph& g,
                                const FrustrationResult& r);
nlohmann::json packing_json(const PackingResult& r);
nlohmann::json cover_json(const SignedGraph& g, const CoverResult& r);
nlohmann::json decomposition_json(const DecompositionResult& r);
nlohmann::json bounds_json(const BoundsReport& r);
nlohmann::json census_json(const CensusReport& r);
nlohmann::json survey_json(const HamiltonianSignSurvey& s);
nlohmann::json removal_json(const RemovalClassification& r);
nlohmann::json removal_scan_json(const RemovalScan& s);
nlohmann::json bridges_json(const SignedGraph& g, const BridgeReport& r);

// Two-space indentation with a trailing newline.
std::string render_json(const nlohmann::json& j);

// One compact JSON object per line, appended.
void append_json_line(const std::string& path, const nlohmann::json& j);

}  // namespace sgc
