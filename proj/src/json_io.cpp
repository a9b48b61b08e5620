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

#include "sgcircles/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace sgc {

using nlohmann::json;

namespace {

std::string sign_str(Sign s) { return std::string(1, to_char(s)); }

json edge_labels(const SignedGraph& g, const std::vector<int>& ids) {
  json arr = json::array();
  for (int id : ids) arr.push_back(g.edge_label(id));
  return arr;
}

json circle_array(const std::vector<Circle>& cs) {
  json arr = json::array();
  for (const Circle& c : cs) arr.push_back(circle_json(c));
  return arr;
}

}  // namespace

json graph_json(const SignedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back(json{{"u", e.u}, {"v", e.v}, {"sign", sign_str(e.sign)}});
  return json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

json circle_json(const Circle& c) {
  return json{{"circle", c.to_string()},
              {"length", c.length()},
              {"sign", sign_str(c.sign())}};
}

json balance_json(const SignedGraph& g, const BalanceReport& r) {
  json j{{"balanced", r.balanced}};
  if (r.marking) {
    std::string marks;
    for (Sign s : *r.marking) marks.push_back(to_char(s));
    j["marking"] = marks;
  }
  if (r.witness) j["witness"] = circle_json(*r.witness);
  (void)g;
  return j;
}

json blocks_json(const SignedGraph& g, const BlockDecomposition& d) {
  json blocks = json::array();
  for (const Block& b : d.blocks) {
    blocks.push_back(json{{"edges", edge_labels(g, b.edge_ids)},
                          {"vertices", b.vertices},
                          {"balanced", b.balanced},
                          {"isthmus", b.is_isthmus}});
  }
  return json{{"blocks", blocks},
              {"cut_vertices", d.cut_vertices},
              {"isthmi", edge_labels(g, d.isthmi)}};
}

json circles_json(const std::vector<Circle>& cs) {
  return json{{"count", cs.size()}, {"circles", circle_array(cs)}};
}

json vector_json(const NegativeCircleVector& v) {
  return json{{"n", v.n},
              {"counts", v.counts},
              {"vector", v.to_string()}};
}

json realize_json(const SignedGraph& g,
                  const std::optional<SignedGraph>& realized,
                  const ThetaCheckResult& theta) {
  json j{{"feasible", realized.has_value()},
         {"theta_criterion_holds", theta.holds}};
  if (realized) {
    json signs = json::array();
    for (int id = 0; id < realized->edge_count(); ++id)
      signs.push_back(json{{"edge", realized->edge_label(id)},
                           {"sign", sign_str(realized->sign_of(id))}});
    j["signature"] = signs;
  }
  if (theta.violating_theta) {
    json t = json::array();
    for (const Circle& c : *theta.violating_theta) t.push_back(c.to_string());
    j["violating_theta"] = t;
  }
  (void)g;
  return j;
}

json profile_json(const SignedGraph& g, const IncidenceProfile& p) {
  return json{{"subject", p.subject.label(g)},
              {"kind", p.subject.kind == Subject::Kind::Edge ? "edge" : "vertex"},
              {"in_negative", p.in_negative},
              {"in_positive", p.in_positive},
              {"unique_negative", p.unique_negative},
              {"unique_positive", p.unique_positive},
              {"only_negative", p.only_negative},
              {"only_positive", p.only_positive},
              {"negative_count", p.negative_count},
              {"positive_count", p.positive_count},
              {"negative_witnesses", circle_array(p.negative_witnesses)},
              {"positive_witnesses", circle_array(p.positive_witnesses)}};
}

json profiles_json(const SignedGraph& g,
                   const std::vector<IncidenceProfile>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(profile_json(g, p));
  return json{{"profiles", arr}};
}

json conjecture_json(const ConjectureReport& r) {
  json meta = json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  json j{{"id", r.id},
         {"instance", r.instance},
         {"applicable", r.applicable},
         {"oracle_set", r.oracle_set},
         {"predicted_set", r.predicted_set},
         {"agrees", r.agrees},
         {"metadata", meta}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

json frustration_json(const SignedGraph& g, const FrustrationResult& r) {
  return json{{"index", r.index},
              {"number", r.number},
              {"edge_witness", edge_labels(g, r.edge_witness)},
              {"vertex_witness", r.vertex_witness}};
}

json packing_json(const PackingResult& r) {
  return json{{"disjointness",
               r.disjointness == Disjointness::Vertex ? "vertex" : "edge"},
              {"sign", sign_str(r.sign)},
              {"size", r.size},
              {"circles", circle_array(r.circles)}};
}

json cover_json(const SignedGraph& g, const CoverResult& r) {
  json j{{"target", r.target == CoverTarget::Vertices ? "vertices" : "edges"},
         {"sign", sign_str(r.sign)},
         {"feasible", r.feasible}};
  if (r.feasible) {
    j["size"] = r.size;
    j["circles"] = circle_array(r.circles);
  } else {
    j["uncovered"] = r.target == CoverTarget::Edges
                         ? edge_labels(g, r.infeasible_subjects)
                         : json(r.infeasible_subjects);
  }
  return j;
}

json decomposition_json(const DecompositionResult& r) {
  json j{{"sign", sign_str(r.sign)}, {"feasible", r.feasible}};
  switch (r.obstruction) {
    case DecompositionResult::Obstruction::None:
      break;
    case DecompositionResult::Obstruction::OddDegreeVertex:
      j["obstruction"] = "odd-degree vertex";
      break;
    case DecompositionResult::Obstruction::SearchExhausted:
      j["obstruction"] = "search-exhausted";
      break;
  }
  j["undecided"] = r.undecided();
  if (r.feasible) j["parts"] = circle_array(r.parts);
  return j;
}

json bounds_json(const BoundsReport& r) {
  auto opt = [](const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
  };
  return json{{"frustration_index", r.frustration_index},
              {"frustration_number", r.frustration_number},
              {"vertex_disjoint_negative_packing",
               r.vertex_disjoint_negative_packing},
              {"edge_disjoint_negative_packing",
               r.edge_disjoint_negative_packing},
              {"vertex_packing_tight", r.vertex_packing_tight},
              {"edge_packing_tight", r.edge_packing_tight},
              {"cover_vertices_negative", opt(r.cover_vertices_negative)},
              {"cover_vertices_positive", opt(r.cover_vertices_positive)},
              {"cover_edges_negative", opt(r.cover_edges_negative)},
              {"cover_edges_positive", opt(r.cover_edges_positive)}};
}

json census_json(const CensusReport& r) {
  json spectra = json::object();
  for (const auto& [length, values] : r.spectra)
    spectra[std::to_string(length)] = values;
  json vectors = json::array();
  for (size_t i = 0; i < r.vector_set.size(); ++i)
    vectors.push_back(json{{"vector", r.vector_set[i].to_string()},
                           {"counts", r.vector_set[i].counts},
                           {"witness_mask", r.witness_masks[i]}});
  return json{{"graph", r.graph},
              {"cyclomatic", r.cyclomatic},
              {"class_count", r.class_count},
              {"spectra", spectra},
              {"vector_set", vectors},
              {"affine_dimension", r.affine_dimension}};
}

json survey_json(const HamiltonianSignSurvey& s) {
  const char* cls = nullptr;
  switch (s.classification) {
    case HamiltonianSignSurvey::Classification::None:
      cls = "none";
      break;
    case HamiltonianSignSurvey::Classification::NegativeOnly:
      cls = "negative-only";
      break;
    case HamiltonianSignSurvey::Classification::PositiveOnly:
      cls = "positive-only";
      break;
    case HamiltonianSignSurvey::Classification::Both:
      cls = "both";
      break;
  }
  return json{{"hamiltonian", s.hamiltonian},
              {"negative_count", s.negative_count},
              {"positive_count", s.positive_count},
              {"classification", cls},
              {"s1_exception", s.s1_exception}};
}

json removal_json(const RemovalClassification& r) {
  json meta = json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  return json{{"circle", r.circle.to_string()},
              {"edge_removal", to_string(r.edge_removal)},
              {"vertex_removal", to_string(r.vertex_removal)},
              {"metadata", meta}};
}

json removal_scan_json(const RemovalScan& s) {
  auto table = [](const std::array<long long, 4>& counts,
                  const std::array<std::optional<Circle>, 4>& examples) {
    json t = json::object();
    for (int c = 0; c < 4; ++c) {
      json cell{{"count", counts[static_cast<size_t>(c)]}};
      if (examples[static_cast<size_t>(c)])
        cell["example"] = examples[static_cast<size_t>(c)]->to_string();
      t[to_string(static_cast<ConnectivityClass>(c))] = cell;
    }
    return t;
  };
  return json{{"sign", sign_str(s.sign)},
              {"circles", s.circle_count},
              {"edge_removal", table(s.edge_class_counts, s.edge_examples)},
              {"vertex_removal",
               table(s.vertex_class_counts, s.vertex_examples)}};
}

json bridges_json(const SignedGraph& g, const BridgeReport& r) {
  json bridges = json::array();
  for (const BridgePart& b : r.bridges)
    bridges.push_back(json{{"attachments", b.attachments},
                           {"interior", b.interior},
                           {"edges", edge_labels(g, b.edge_ids)},
                           {"chord", b.is_chord}});
  return json{{"circle", r.circle.to_string()},
              {"chords", edge_labels(g, r.chords)},
              {"bridges", bridges}};
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

void append_json_line(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open log file: " + path);
  out << j.dump() << "\n";
}

}  // namespace sgc
