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

#include "sgcircles/signed_graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace sgc {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v)
      throw std::invalid_argument("loop edge " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.u) + " " +
                                  std::to_string(e.v));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw std::invalid_argument("duplicate edge " +
                                  std::to_string(edges_[i].u) + " " +
                                  std::to_string(edges_[i].v));
  }
  incident_.resize(static_cast<size_t>(n_));
  for (size_t id = 0; id < edges_.size(); ++id) {
    incident_[static_cast<size_t>(edges_[id].u)].push_back(static_cast<int>(id));
    incident_[static_cast<size_t>(edges_[id].v)].push_back(static_cast<int>(id));
  }
}

std::optional<int> SignedGraph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v) return std::nullopt;
  Edge probe{u, v, Sign::Plus};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), probe, [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
      });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::string SignedGraph::edge_label(int id) const {
  const Edge& e = edge(id);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

SignedGraph SignedGraph::with_signs(const std::vector<Sign>& signs) const {
  if (signs.size() != edges_.size())
    throw std::invalid_argument("sign vector size does not match edge count");
  std::vector<Edge> es = edges_;
  for (size_t i = 0; i < es.size(); ++i) es[i].sign = signs[i];
  return SignedGraph(n_, std::move(es));
}

bool SignedGraph::same_underlying_graph(const SignedGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v)
      return false;
  return true;
}

SignedGraph parse_sgt(std::istream& in) {
  std::string raw;
  int lineno = 0;
  auto next_payload = [&](std::string& out) -> bool {
    while (std::getline(in, raw)) {
      ++lineno;
      size_t start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (raw[start] == '#') continue;
      out = raw;
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_payload(line)) throw ParseError(lineno + 1, "missing header");
  long long n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw ParseError(lineno, "malformed header, expected \"n m\"");
    if (n < 0 || m < 0) throw ParseError(lineno, "negative header value");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_payload(line))
      throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                       " edge lines, got " + std::to_string(i));
    std::istringstream es(line);
    long long u = 0, v = 0;
    std::string s, extra;
    if (!(es >> u >> v >> s) || (es >> extra))
      throw ParseError(lineno, "malformed edge line, expected \"u v s\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex out of range [0, " + std::to_string(n) +
                                   ")");
    if (u == v) throw ParseError(lineno, "loop edge " + std::to_string(u));
    if (s.size() != 1 || (s[0] != '+' && s[0] != '-'))
      throw ParseError(lineno, "bad sign token '" + s + "'");
    edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v),
                         sign_from_char(s[0])});
  }
  if (next_payload(line)) throw ParseError(lineno, "trailing content");

  try {
    return SignedGraph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    // Duplicate edges are only detectable once the whole list is assembled.
    throw ParseError(lineno, e.what());
  }
}

SignedGraph parse_sgt(const std::string& text) {
  std::istringstream in(text);
  return parse_sgt(in);
}

std::string render_sgt(const SignedGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
  return out.str();
}

SignedGraph apply_switching(const SignedGraph& g, const std::vector<int>& x) {
  std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("switching vertex out of range: " +
                                  std::to_string(v));
    in_x[static_cast<size_t>(v)] = 1;
  }
  std::vector<Edge> es = g.edges();
  for (Edge& e : es)
    if (in_x[static_cast<size_t>(e.u)] != in_x[static_cast<size_t>(e.v)])
      e.sign = negated(e.sign);
  return SignedGraph(g.vertex_count(), std::move(es));
}

SignedGraph apply_switching_mask(const SignedGraph& g, std::uint64_t mask) {
  std::vector<int> x;
  for (int v = 0; v < g.vertex_count() && v < 64; ++v)
    if (mask & (std::uint64_t{1} << v)) x.push_back(v);
  return apply_switching(g, x);
}

SignedGraph negate_all(const SignedGraph& g) {
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) e.sign = negated(e.sign);
  return SignedGraph(g.vertex_count(), std::move(es));
}

SignedGraph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("kn needs n >= 1");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back(Edge{u, v, Sign::Plus});
  return SignedGraph(n, std::move(es));
}

SignedGraph make_complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("krs needs r, s >= 1");
  std::vector<Edge> es;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) es.push_back(Edge{u, r + v, Sign::Plus});
  return SignedGraph(r + s, std::move(es));
}

SignedGraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    es.push_back(Edge{v, (v + 1) % n, Sign::Plus});
  return SignedGraph(n, std::move(es));
}

SignedGraph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back(Edge{v, v + 1, Sign::Plus});
  return SignedGraph(n, std::move(es));
}

SignedGraph make_theta(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("theta path lengths must be >= 1");
  int ones = (a == 1) + (b == 1) + (c == 1);
  if (ones > 1)
    throw std::invalid_argument(
        "theta with two unit paths would duplicate an edge");
  int n = 2 + (a - 1) + (b - 1) + (c - 1);
  std::vector<Edge> es;
  int next = 2;  // terminals are 0 and 1
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      es.push_back(Edge{prev, next, Sign::Plus});
      prev = next++;
    }
    es.push_back(Edge{prev, 1, Sign::Plus});
  }
  return SignedGraph(n, std::move(es));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " parameter '" + s + "'");
  }
}

SignedGraph structure_for(const std::string& family) {
  auto colon = family.find(':');
  std::string name = family.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : family.substr(colon + 1);
  auto parts = split(args, ',');
  if (name == "kn" && parts.size() == 1)
    return make_complete(parse_int(parts[0], "kn"));
  if (name == "krs" && parts.size() == 2)
    return make_complete_bipartite(parse_int(parts[0], "krs"),
                                   parse_int(parts[1], "krs"));
  if (name == "cycle" && parts.size() == 1)
    return make_cycle(parse_int(parts[0], "cycle"));
  if (name == "path" && parts.size() == 1)
    return make_path(parse_int(parts[0], "path"));
  if (name == "theta" && parts.size() == 3)
    return make_theta(parse_int(parts[0], "theta"),
                      parse_int(parts[1], "theta"),
                      parse_int(parts[2], "theta"));
  throw std::invalid_argument("unknown graph family spec '" + family + "'");
}

double parse_probability(const std::string& s) {
  try {
    size_t pos = 0;
    double p = std::stod(s, &pos);
    if (pos != s.size() || p < 0.0 || p > 1.0) throw std::invalid_argument(s);
    return p;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad probability '" + s + "'");
  }
}

}  // namespace

SignedGraph generate_graph(const std::string& family, const std::string& signing,
                           std::uint64_t seed) {
  SignedGraph g = structure_for(family);
  std::vector<Sign> signs(static_cast<size_t>(g.edge_count()), Sign::Plus);
  if (signing == "all-plus") {
    // done
  } else if (signing == "all-minus") {
    std::fill(signs.begin(), signs.end(), Sign::Minus);
  } else if (signing.rfind("list:", 0) == 0) {
    std::string pattern = signing.substr(5);
    if (pattern.size() != signs.size())
      throw std::invalid_argument(
          "list signing needs exactly one sign per edge (" +
          std::to_string(signs.size()) + " edges)");
    for (size_t i = 0; i < signs.size(); ++i)
      signs[i] = sign_from_char(pattern[i]);
  } else if (signing.rfind("random:", 0) == 0) {
    double p = parse_probability(signing.substr(7));
    std::mt19937_64 rng(seed);
    for (Sign& s : signs) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      s = u < p ? Sign::Minus : Sign::Plus;
    }
  } else {
    throw std::invalid_argument("unknown signing spec '" + signing + "'");
  }
  return g.with_signs(signs);
}

}  // namespace sgc
