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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgcircles/balance.hpp"
#include "sgcircles/budget.hpp"
#include "sgcircles/census.hpp"
#include "sgcircles/circles.hpp"
#include "sgcircles/connectivity.hpp"
#include "sgcircles/incidence.hpp"
#include "sgcircles/json_io.hpp"
#include "sgcircles/optimization.hpp"
#include "sgcircles/signed_graph.hpp"
#include "sgcircles/structure.hpp"

namespace {

using sgc::Sign;
using sgc::SignedGraph;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

struct CommonOpts {
  std::string input;
  std::string gen;
  std::string sign = "all-plus";
  unsigned long long seed = 1;
  bool json = false;
  long long circle_budget = 1'000'000;
  long long class_budget = 1LL << 22;
  long long search_budget = 50'000'000;
  double wall_seconds = 60.0;
  int threads = 1;
  std::string log_path;
  int length_max = 0;  // 0 = unlimited
};

void add_common(CLI::App* sub, CommonOpts& o) {
  auto* input = sub->add_option("--input", o.input, "SGT input file");
  auto* gen = sub->add_option(
      "--gen", o.gen, "generator spec: kn:N, krs:R,S, cycle:N, path:N, theta:A,B,C");
  input->excludes(gen);
  gen->excludes(input);
  sub->add_option("--sign", o.sign,
                  "signing for --gen: all-plus, all-minus, list:SIGNS, random:P");
  sub->add_option("--seed", o.seed, "seed for random signings");
  sub->add_flag("--json", o.json, "JSON report instead of text");
  sub->add_option("--budget", o.circle_budget, "circle enumeration budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--class-budget", o.class_budget, "switching class budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--search-budget", o.search_budget, "search node budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--wall-seconds", o.wall_seconds, "soft wall clock limit")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", o.threads, "worker cap for the census")
      ->check(CLI::PositiveNumber);
  sub->add_option("--log", o.log_path, "line-delimited JSON log to append to");
  sub->add_option("--length-max", o.length_max,
                  "only circles up to this length (0 = no limit)");
}

SignedGraph load_graph(const CommonOpts& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot open input file: " + o.input);
    return sgc::parse_sgt(in);
  }
  if (!o.gen.empty()) return sgc::generate_graph(o.gen, o.sign, o.seed);
  throw std::runtime_error("no input: pass --input FILE or --gen SPEC");
}

sgc::Budget make_budget(const CommonOpts& o) {
  sgc::Budget b = sgc::Budget::with_wall_seconds(o.wall_seconds);
  b.max_circles = o.circle_budget;
  b.max_classes = o.class_budget;
  b.max_search_nodes = o.search_budget;
  return b;
}

std::string instance_label(const CommonOpts& o) {
  if (!o.input.empty()) return o.input;
  std::ostringstream out;
  out << o.gen << "/" << o.sign;
  if (o.sign.rfind("random:", 0) == 0) out << "/seed:" << o.seed;
  return out.str();
}

Sign parse_sign_word(const std::string& word) {
  if (word == "-" || word == "minus" || word == "neg") return Sign::Minus;
  if (word == "+" || word == "plus" || word == "pos") return Sign::Plus;
  throw std::runtime_error("bad sign '" + word + "' (use minus or plus)");
}

void emit(const CommonOpts& o, const nlohmann::json& j,
          const std::string& text) {
  if (o.json)
    std::cout << sgc::render_json(j);
  else
    std::cout << text << "\n";
}

int run_balance(const CommonOpts& o) {
  const SignedGraph g = load_graph(o);
  const sgc::BalanceReport r = sgc::is_balanced(g);
  std::string text =
      r.balanced ? "balanced"
                 : "unbalanced; witness " + r.witness->to_string();
  emit(o, sgc::balance_json(g, r), text);
  return kExitOk;
}

int run_blocks(const CommonOpts& o) {
  const SignedGraph g = load_graph(o);
  const sgc::BlockDecomposition d = sgc::blocks(g);
  std::ostringstream out;
  out << d.blocks.size() << " block(s), " << d.cut_vertices.size()
      << " cut vertex(es), " << d.isthmi.size() << " isthmus(es)";
  for (const sgc::Block& b : d.blocks) {
    out << "\n  ";
    for (size_t i = 0; i < b.edge_ids.size(); ++i)
      out << (i ? " " : "") << g.edge_label(b.edge_ids[i]);
    out << (b.balanced ? "  [balanced]" : "  [unbalanced]");
    if (b.is_isthmus) out << " [isthmus]";
  }
  emit(o, sgc::blocks_json(g, d), out.str());
  return kExitOk;
}

sgc::EnumerateOptions enum_options(const CommonOpts& o,
                                   std::optional<Sign> filter,
                                   bool chordless) {
  sgc::EnumerateOptions opts;
  opts.sign_filter = filter;
  opts.chordless_only = chordless;
  if (o.length_max > 0) opts.length_max = o.length_max;
  opts.budget = make_budget(o);
  return opts;
}

int run_circles(const CommonOpts& o, const std::string& filter_word,
                bool chordless) {
  const SignedGraph g = load_graph(o);
  std::optional<Sign> filter;
  if (!filter_word.empty()) filter = parse_sign_word(filter_word);
  const auto circles = sgc::enumerate_circles(g, enum_options(o, filter, chordless));
  std::ostringstream out;
  out << circles.size() << " circle(s)";
  for (const sgc::Circle& c : circles)
    out << "\n  " << c.to_string() << "  " << sgc::to_char(c.sign());
  emit(o, sgc::circles_json(circles), out.str());
  return kExitOk;
}

int run_vector(const CommonOpts& o) {
  const SignedGraph g = load_graph(o);
  const sgc::NegativeCircleVector v =
      sgc::negative_circle_vector(g, make_budget(o));
  emit(o, sgc::vector_json(v), v.to_string());
  return kExitOk;
}

sgc::CircleSet read_circle_file(const SignedGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circle file: " + path);
  sgc::CircleSet set;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string token;
    std::istringstream(line) >> token;
    if (token.empty()) continue;
    try {
      set.insert(sgc::Circle::parse(g, token));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return set;
}

int run_realize(const CommonOpts& o, const std::string& circles_path) {
  const SignedGraph g = load_graph(o);
  const sgc::CircleSet b = read_circle_file(g, circles_path);
  const sgc::Budget budget = make_budget(o);
  const sgc::ThetaCheckResult theta = sgc::verify_theta_criterion(g, b, budget);
  const auto realized = sgc::realize_circle_set(g, b, budget);

  std::ostringstream out;
  if (realized) {
    out << "feasible; signature";
    for (int id = 0; id < realized->edge_count(); ++id)
      out << " " << realized->edge_label(id) << ":"
          << sgc::to_char(realized->sign_of(id));
  } else if (theta.violating_theta) {
    const auto& t = *theta.violating_theta;
    out << "infeasible: theta violation " << t[0].to_string() << " / "
        << t[1].to_string() << " / " << t[2].to_string();
  } else {
    out << "infeasible";
  }
  emit(o, sgc::realize_json(g, realized, theta), out.str());
  return realized ? kExitOk : kExitInfeasible;
}

int run_profile(const CommonOpts& o, const std::string& edge_word,
                int vertex_id) {
  const SignedGraph g = load_graph(o);
  const sgc::Budget budget = make_budget(o);

  std::vector<sgc::IncidenceProfile> profiles;
  if (!edge_word.empty()) {
    const auto dash = edge_word.find('-');
    if (dash == std::string::npos)
      throw std::runtime_error("bad edge '" + edge_word + "' (use u-v)");
    const int u = std::stoi(edge_word.substr(0, dash));
    const int v = std::stoi(edge_word.substr(dash + 1));
    const auto id = g.edge_id(u, v);
    if (!id) throw std::runtime_error("no such edge: " + edge_word);
    profiles.push_back(sgc::edge_profile(g, *id, budget));
  } else if (vertex_id >= 0) {
    profiles.push_back(sgc::vertex_profile(g, vertex_id, budget));
  } else {
    profiles = sgc::all_edge_profiles(g, budget);
    const auto vp = sgc::all_vertex_profiles(g, budget);
    profiles.insert(profiles.end(), vp.begin(), vp.end());
  }

  std::ostringstream out;
  bool first = true;
  for (const auto& p : profiles) {
    if (!first) out << "\n";
    first = false;
    out << (p.subject.kind == sgc::Subject::Kind::Edge ? "edge " : "vertex ")
        << p.subject.label(g) << ": -" << p.negative_count << " +"
        << p.positive_count;
    if (p.only_negative) out << " only-negative";
    if (p.only_positive) out << " only-positive";
    if (p.unique_negative) out << " unique-negative";
    if (p.unique_positive) out << " unique-positive";
  }
  emit(o, sgc::profiles_json(g, profiles), out.str());
  return kExitOk;
}

int run_frustration(const CommonOpts& o) {
  const SignedGraph g = load_graph(o);
  const sgc::FrustrationResult r = sgc::frustration(g, make_budget(o));
  std::ostringstream out;
  out << "index " << r.index << ", number " << r.number << "; edge witness {";
  for (size_t i = 0; i < r.edge_witness.size(); ++i)
    out << (i ? ", " : "") << g.edge_label(r.edge_witness[i]);
  out << "}, vertex witness {";
  for (size_t i = 0; i < r.vertex_witness.size(); ++i)
    out << (i ? ", " : "") << r.vertex_witness[i];
  out << "}";
  emit(o, sgc::frustration_json(g, r), out.str());
  return kExitOk;
}

int run_pack(const CommonOpts& o, const std::string& disjoint_word,
             const std::string& sign_word) {
  const SignedGraph g = load_graph(o);
  sgc::Disjointness d;
  if (disjoint_word == "vertex")
    d = sgc::Disjointness::Vertex;
  else if (disjoint_word == "edge")
    d = sgc::Disjointness::Edge;
  else
    throw std::runtime_error("bad --disjoint '" + disjoint_word +
                             "' (use vertex or edge)");
  const sgc::PackingResult r =
      sgc::pack_circles(g, d, parse_sign_word(sign_word), make_budget(o));
  std::ostringstream out;
  out << "packing size " << r.size;
  for (const sgc::Circle& c : r.circles) out << "\n  " << c.to_string();
  emit(o, sgc::packing_json(r), out.str());
  return kExitOk;
}

int run_cover(const CommonOpts& o, const std::string& target_word,
              const std::string& sign_word) {
  const SignedGraph g = load_graph(o);
  sgc::CoverTarget t;
  if (target_word == "vertices")
    t = sgc::CoverTarget::Vertices;
  else if (target_word == "edges")
    t = sgc::CoverTarget::Edges;
  else
    throw std::runtime_error("bad --targets '" + target_word +
                             "' (use vertices or edges)");
  const sgc::CoverResult r =
      sgc::cover_circles(g, t, parse_sign_word(sign_word), make_budget(o));
  std::ostringstream out;
  if (r.feasible) {
    out << "cover size " << r.size;
    for (const sgc::Circle& c : r.circles) out << "\n  " << c.to_string();
  } else {
    out << "infeasible; uncovered";
    for (int s : r.infeasible_subjects)
      out << " "
          << (t == sgc::CoverTarget::Edges ? g.edge_label(s)
                                           : std::to_string(s));
  }
  emit(o, sgc::cover_json(g, r), out.str());
  return r.feasible ? kExitOk : kExitInfeasible;
}

int run_decompose(const CommonOpts& o, const std::string& sign_word) {
  const SignedGraph g = load_graph(o);
  const sgc::DecompositionResult r =
      sgc::decompose_into_circles(g, parse_sign_word(sign_word), make_budget(o));
  std::ostringstream out;
  if (r.feasible) {
    out << "feasible; " << r.parts.size() << " part(s)";
    for (const sgc::Circle& c : r.parts) out << "\n  " << c.to_string();
  } else if (r.undecided()) {
    out << "undecided: search budget exhausted";
  } else if (r.obstruction ==
             sgc::DecompositionResult::Obstruction::OddDegreeVertex) {
    out << "infeasible: odd-degree vertex";
  } else {
    out << "infeasible";
  }
  emit(o, sgc::decomposition_json(r), out.str());
  return r.feasible ? kExitOk : kExitInfeasible;
}

int run_census(const CommonOpts& o, const std::string& csv_path) {
  const SignedGraph g = load_graph(o);
  const sgc::Budget budget = make_budget(o);

  std::ofstream csv;
  sgc::CensusRowSink sink;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw std::runtime_error("cannot open csv file: " + csv_path);
    csv << "mask";
    for (int l = 3; l <= g.vertex_count(); ++l) csv << ",c" << l;
    csv << "\n";
    sink = [&csv](unsigned long long mask, const sgc::NegativeCircleVector& v) {
      csv << mask;
      for (long long c : v.counts) csv << "," << c;
      csv << "\n";
    };
  }

  const sgc::CensusReport r =
      sgc::vector_set_and_dimension(g, budget, o.threads, sink);
  std::ostringstream out;
  out << r.class_count << " switching class(es); affine dimension "
      << r.affine_dimension;
  for (const auto& [length, values] : r.spectra) {
    out << "\n  length " << length << ": {";
    for (size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
    out << "}";
  }
  out << "\n  " << r.vector_set.size() << " distinct vector(s)";
  emit(o, sgc::census_json(r), out.str());
  return kExitOk;
}

nlohmann::json s1_exception_json(const SignedGraph& g,
                                 const sgc::HamiltonianSignSurvey& s,
                                 const std::string& label) {
  nlohmann::json j = sgc::survey_json(s);
  return nlohmann::json{{"kind", "s1-exception"},
                        {"instance", label},
                        {"graph", sgc::render_sgt(g)},
                        {"classification", j["classification"]},
                        {"counts",
                         {{"negative", s.negative_count},
                          {"positive", s.positive_count}}}};
}

int run_survey(const CommonOpts& o) {
  const SignedGraph g = load_graph(o);
  const sgc::HamiltonianSignSurvey s =
      sgc::hamiltonian_sign_survey(g, make_budget(o));
  const nlohmann::json j = sgc::survey_json(s);
  std::ostringstream out;
  if (!s.hamiltonian) {
    out << "no Hamiltonian circle";
  } else {
    out << j["classification"].get<std::string>() << " (-"
        << s.negative_count << " +" << s.positive_count << ")";
    if (s.s1_exception) out << "  [one-signed unbalanced instance]";
  }
  if (s.s1_exception && !o.log_path.empty())
    sgc::append_json_line(o.log_path,
                          s1_exception_json(g, s, instance_label(o)));
  emit(o, j, out.str());
  return kExitOk;
}

int run_bridges(const CommonOpts& o, const std::string& circle_word) {
  const SignedGraph g = load_graph(o);
  const sgc::BridgeReport r =
      sgc::circle_bridges(g, sgc::Circle::parse(g, circle_word));
  std::ostringstream out;
  out << r.chords.size() << " chord(s), " << r.bridges.size() << " bridge(s)";
  for (const sgc::BridgePart& b : r.bridges) {
    out << "\n  attachments {";
    for (size_t i = 0; i < b.attachments.size(); ++i)
      out << (i ? "," : "") << b.attachments[i];
    out << "} interior {";
    for (size_t i = 0; i < b.interior.size(); ++i)
      out << (i ? "," : "") << b.interior[i];
    out << "} edges {";
    for (size_t i = 0; i < b.edge_ids.size(); ++i)
      out << (i ? "," : "") << g.edge_label(b.edge_ids[i]);
    out << "}";
    if (b.is_chord) out << " [chord]";
  }
  emit(o, sgc::bridges_json(g, r), out.str());
  return kExitOk;
}

int run_removal(const CommonOpts& o, const std::string& circle_word,
                const std::string& scan_word) {
  const SignedGraph g = load_graph(o);
  if (!circle_word.empty()) {
    const sgc::RemovalClassification r =
        sgc::removal_connectivity(g, sgc::Circle::parse(g, circle_word));
    std::ostringstream out;
    out << "edge removal: " << sgc::to_string(r.edge_removal)
        << "; vertex removal: " << sgc::to_string(r.vertex_removal);
    emit(o, sgc::removal_json(r), out.str());
    return kExitOk;
  }
  const sgc::RemovalScan s =
      sgc::removal_scan(g, parse_sign_word(scan_word), make_budget(o));
  std::ostringstream out;
  out << s.circle_count << " circle(s) of sign " << sgc::to_char(s.sign);
  for (int c = 0; c < 4; ++c) {
    out << "\n  " << sgc::to_string(static_cast<sgc::ConnectivityClass>(c))
        << ": edge " << s.edge_class_counts[static_cast<size_t>(c)]
        << ", vertex " << s.vertex_class_counts[static_cast<size_t>(c)];
  }
  emit(o, sgc::removal_scan_json(s), out.str());
  return kExitOk;
}

int run_conjectures(const CommonOpts& o, std::vector<std::string> ids) {
  const SignedGraph g = load_graph(o);
  const sgc::Budget budget = make_budget(o);
  if (ids.empty()) ids = sgc::kConjectureIds;

  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream out;
  bool first = true;
  for (const std::string& id : ids) {
    const sgc::ConjectureReport r =
        sgc::conjecture_report(g, id, budget, instance_label(o));
    nlohmann::json j = sgc::conjecture_json(r);
    arr.push_back(j);
    if (!o.log_path.empty()) {
      nlohmann::json line = j;
      line["kind"] = "conjecture";
      sgc::append_json_line(o.log_path, line);
    }
    if (!first) out << "\n";
    first = false;
    out << r.id << ": ";
    if (!r.applicable)
      out << "not applicable";
    else if (r.agrees)
      out << "agrees";
    else
      out << "DISAGREES at " << *r.counterexample;
  }
  emit(o, nlohmann::json{{"conjectures", arr}}, out.str());
  return kExitOk;
}

int run_sweep(const CommonOpts& o, bool over_classes,
              const std::string& seed_range) {
  if (o.log_path.empty())
    throw std::runtime_error("sweep requires --log FILE");
  const sgc::Budget budget = make_budget(o);

  long long instances = 0, disagreements = 0, exceptions = 0, skipped = 0;
  auto run_instance = [&](const SignedGraph& g, const std::string& label) {
    ++instances;
    try {
      for (const std::string& id : sgc::kConjectureIds) {
        const sgc::ConjectureReport r =
            sgc::conjecture_report(g, id, budget, label);
        nlohmann::json line = sgc::conjecture_json(r);
        line["kind"] = "conjecture";
        sgc::append_json_line(o.log_path, line);
        if (r.applicable && !r.agrees) ++disagreements;
      }
      const sgc::HamiltonianSignSurvey s = sgc::hamiltonian_sign_survey(g, budget);
      if (s.s1_exception) {
        ++exceptions;
        sgc::append_json_line(o.log_path, s1_exception_json(g, s, label));
      }
    } catch (const sgc::BudgetExceeded& e) {
      ++skipped;
      sgc::append_json_line(o.log_path,
                            nlohmann::json{{"kind", "skipped"},
                                           {"instance", label},
                                           {"reason", e.what()}});
    }
  };

  if (over_classes) {
    const SignedGraph base = load_graph(o);
    sgc::for_each_signature_class(
        base, budget, [&](unsigned long long mask, const SignedGraph& rep) {
          std::ostringstream label;
          label << instance_label(o) << "/class:" << mask;
          run_instance(rep, label.str());
        });
  } else {
    const auto colon = seed_range.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("bad --seeds '" + seed_range + "' (use LO:HI)");
    const unsigned long long lo = std::stoull(seed_range.substr(0, colon));
    const unsigned long long hi = std::stoull(seed_range.substr(colon + 1));
    if (hi < lo) throw std::runtime_error("empty seed range");
    for (unsigned long long seed = lo; seed <= hi; ++seed) {
      CommonOpts inst = o;
      inst.seed = seed;
      run_instance(load_graph(inst), instance_label(inst));
    }
  }

  nlohmann::json summary{{"instances", instances},
                         {"disagreements", disagreements},
                         {"s1_exceptions", exceptions},
                         {"skipped", skipped}};
  std::ostringstream out;
  out << instances << " instance(s); " << disagreements << " disagreement(s); "
      << exceptions << " s1 exception(s); " << skipped << " skipped";
  emit(o, summary, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgcircles: exact computation on circles of signed graphs"};
  app.require_subcommand(1);
  int code = kExitOk;

  CommonOpts o;

  auto* balance = app.add_subcommand("balance", "balance test with witness");
  add_common(balance, o);
  balance->callback([&] { code = run_balance(o); });

  auto* blocks = app.add_subcommand("blocks", "block decomposition");
  add_common(blocks, o);
  blocks->callback([&] { code = run_blocks(o); });

  auto* circles = app.add_subcommand("circles", "enumerate circles");
  add_common(circles, o);
  std::string circles_filter;
  bool chordless = false;
  circles->add_option("--sign-filter", circles_filter,
                      "keep one sign only (minus or plus)");
  circles->add_flag("--chordless", chordless, "chordless circles only");
  circles->callback([&] { code = run_circles(o, circles_filter, chordless); });

  auto* vec = app.add_subcommand("vector", "negative circle count by length");
  add_common(vec, o);
  vec->callback([&] { code = run_vector(o); });

  auto* realize = app.add_subcommand(
      "realize", "find a signature whose negative circles are a given set");
  add_common(realize, o);
  std::string circles_path;
  realize->add_option("--circles", circles_path, "file of circles, one per line")
      ->required();
  realize->callback([&] { code = run_realize(o, circles_path); });

  auto* profile = app.add_subcommand("profile", "circle membership profiles");
  add_common(profile, o);
  std::string profile_edge;
  int profile_vertex = -1;
  profile->add_option("--edge", profile_edge, "one edge, written u-v");
  profile->add_option("--vertex", profile_vertex, "one vertex");
  profile->callback([&] { code = run_profile(o, profile_edge, profile_vertex); });

  auto* frustration =
      app.add_subcommand("frustration", "minimum deletions to balance");
  add_common(frustration, o);
  frustration->callback([&] { code = run_frustration(o); });

  auto* pack = app.add_subcommand("pack", "maximum disjoint circle packing");
  add_common(pack, o);
  std::string pack_disjoint = "vertex";
  std::string pack_sign = "minus";
  pack->add_option("--disjoint", pack_disjoint, "vertex or edge disjoint");
  pack->add_option("--circle-sign", pack_sign, "sign of packed circles");
  pack->callback([&] { code = run_pack(o, pack_disjoint, pack_sign); });

  auto* cover = app.add_subcommand("cover", "minimum circle cover");
  add_common(cover, o);
  std::string cover_target = "vertices";
  std::string cover_sign = "minus";
  cover->add_option("--targets", cover_target, "cover vertices or edges");
  cover->add_option("--circle-sign", cover_sign, "sign of covering circles");
  cover->callback([&] { code = run_cover(o, cover_target, cover_sign); });

  auto* decompose =
      app.add_subcommand("decompose", "partition all edges into circles");
  add_common(decompose, o);
  std::string decompose_sign = "minus";
  decompose->add_option("--circle-sign", decompose_sign, "sign of the parts");
  decompose->callback([&] { code = run_decompose(o, decompose_sign); });

  auto* census =
      app.add_subcommand("census", "all switching classes: spectra, vectors");
  add_common(census, o);
  std::string census_csv;
  census->add_option("--csv", census_csv, "write one row per class");
  census->callback([&] { code = run_census(o, census_csv); });

  auto* survey =
      app.add_subcommand("survey", "Hamiltonian circle signs");
  add_common(survey, o);
  survey->callback([&] { code = run_survey(o); });

  auto* bridges = app.add_subcommand("bridges", "chords and bridges of a circle");
  add_common(bridges, o);
  std::string bridges_circle;
  bridges->add_option("--circle", bridges_circle, "circle, written 0-1-2")
      ->required();
  bridges->callback([&] { code = run_bridges(o, bridges_circle); });

  auto* removal = app.add_subcommand(
      "removal", "connectivity after removing a circle's edges or vertices");
  add_common(removal, o);
  std::string removal_circle;
  std::string removal_scan_sign;
  auto* rc = removal->add_option("--circle", removal_circle, "one circle");
  auto* rs = removal->add_option("--scan-sign", removal_scan_sign,
                                 "scan all circles of this sign");
  rc->excludes(rs);
  rs->excludes(rc);
  removal->callback([&] {
    if (removal_circle.empty() && removal_scan_sign.empty())
      throw CLI::ValidationError("removal", "pass --circle or --scan-sign");
    code = run_removal(o, removal_circle, removal_scan_sign);
  });

  auto* conjectures = app.add_subcommand(
      "conjectures", "compare enumerated answer sets with predicted ones");
  add_common(conjectures, o);
  std::vector<std::string> conjecture_ids;
  conjectures->add_option("--id", conjecture_ids,
                          "subset of: E5 V4 VP4-theorem E2-3conn EP2-3conn");
  conjectures->callback([&] { code = run_conjectures(o, conjecture_ids); });

  auto* sweep = app.add_subcommand(
      "sweep", "run the conjecture battery over classes or seeds");
  add_common(sweep, o);
  bool sweep_classes = false;
  std::string sweep_seeds;
  sweep->add_flag("--classes", sweep_classes,
                  "iterate every switching class of the input graph");
  sweep->add_option("--seeds", sweep_seeds, "seed range LO:HI for --gen");
  sweep->callback([&] {
    if (sweep_classes == !sweep_seeds.empty())
      throw CLI::ValidationError("sweep", "pass exactly one of --classes or --seeds");
    code = run_sweep(o, sweep_classes, sweep_seeds);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? kExitOk : kExitError;
  } catch (const sgc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}
