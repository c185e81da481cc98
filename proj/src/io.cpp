// Copyright 2026 The dualcut Authors
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

#include "dualcut/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

using nlohmann::json;

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == std::string_view::npos) break;
  }
  return out;
}

long long to_integer(const Line& line, std::string_view token, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line.number, std::string("expected integer ") + what + ", got '" + std::string(token) + "'");
  return value;
}

VertexId vertex(const Line& line, std::string_view token, int n) {
  long long v = to_integer(line, token, "vertex id");
  if (v < 1 || v > n)
    throw ParseError(line.number, "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<VertexId>(v - 1);
}

void expect_arity(const Line& line, std::size_t count, const char* form) {
  if (line.tokens.size() != count) throw ParseError(line.number, std::string("expected '") + form + "'");
}

json rational_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}, {"decimal", r.value()}}; }

Rational rational_from(const json& j) { return Rational::of(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()); }

json cuts_json(const std::vector<Cut>& cuts) {
  json out = json::array();
  for (const Cut& c : cuts) {
    json side = json::array();
    for (VertexId v : c.side) side.push_back(v + 1);
    out.push_back(side);
  }
  return out;
}

std::vector<Cut> cuts_from(const json& j) {
  std::vector<Cut> out;
  for (const json& side : j) {
    std::vector<VertexId> vs;
    for (const json& v : side) vs.push_back(v.get<int>() - 1);
    out.push_back(Cut{std::move(vs)});
  }
  return out;
}

json ids_json(const std::vector<int>& ids) {
  json out = json::array();
  for (int i : ids) out.push_back(i + 1);
  return out;
}

std::vector<int> ids_from(const json& j) {
  std::vector<int> out;
  for (const json& v : j) out.push_back(v.get<int>() - 1);
  return out;
}

int input_vertex_count(const AnyInstance& instance) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TwoECSInstance>) return x.graph.vertex_count();
        else return x.vertex_count();
      },
      instance.data);
}

}  // namespace

AnyInstance parse_instance(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input: expected a 'p <problem> <n> <count>' header");
  const Line& head = lines.front();
  if (head.tokens[0] != "p") throw ParseError(head.number, "expected a 'p <problem> <n> <count>' header");
  expect_arity(head, 4, "p <problem> <n> <count>");
  ProblemKind kind;
  try {
    kind = problem_kind_from_string(head.tokens[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(head.number, e.what());
  }
  const long long n = to_integer(head, head.tokens[2], "vertex count");
  const long long count = to_integer(head, head.tokens[3], "element count");
  if (n < 1) throw ParseError(head.number, "vertex count must be at least 1");
  if (count < 0) throw ParseError(head.number, "element count must be nonnegative");
  const int nv = static_cast<int>(n);

  const std::string_view tag = kind == ProblemKind::kSsc ? "s" : kind == ProblemKind::kMscs ? "a" : "e";
  std::vector<Star> stars;
  std::vector<Arc> arcs;
  std::vector<DPAEdge> dpa_edges;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen_pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != tag)
      throw ParseError(line.number, "expected a '" + std::string(tag) + "' line, got '" + std::string(line.tokens[0]) + "'");
    auto no_loop = [&](VertexId a, VertexId b) {
      if (a == b) throw ParseError(line.number, "self-loop at vertex " + std::to_string(a + 1));
    };
    switch (kind) {
      case ProblemKind::kSsc: {
        if (line.tokens.size() < 3) throw ParseError(line.number, "expected 's <source> <fan> <sink>...'");
        VertexId src = vertex(line, line.tokens[1], nv);
        long long fan = to_integer(line, line.tokens[2], "fan");
        if (fan < 1) throw ParseError(line.number, "star fan must be at least 1");
        if (line.tokens.size() != static_cast<std::size_t>(fan) + 3)
          throw ParseError(line.number, "star lists " + std::to_string(line.tokens.size() - 3) + " sinks but fan is " +
                                            std::to_string(fan));
        std::vector<VertexId> sinks;
        for (std::size_t t = 3; t < line.tokens.size(); ++t) {
          VertexId v = vertex(line, line.tokens[t], nv);
          no_loop(src, v);
          sinks.push_back(v);
        }
        VertexSet set = make_vertex_set(sinks);
        if (set.size() != sinks.size()) throw ParseError(line.number, "repeated sink in star");
        stars.push_back({src, std::move(set)});
        break;
      }
      case ProblemKind::kMscs: {
        expect_arity(line, 3, "a <tail> <head>");
        VertexId a = vertex(line, line.tokens[1], nv), b = vertex(line, line.tokens[2], nv);
        no_loop(a, b);
        if (!seen_pairs.insert({a, b}).second) throw ParseError(line.number, "repeated arc");
        arcs.push_back({a, b});
        break;
      }
      case ProblemKind::kDpa: {
        expect_arity(line, 4, "e <u> <v> <cost>");
        VertexId a = vertex(line, line.tokens[1], nv), b = vertex(line, line.tokens[2], nv);
        no_loop(a, b);
        long long cost = to_integer(line, line.tokens[3], "cost");
        if (cost != 0 && cost != 1) throw ParseError(line.number, "edge cost must be 0 or 1");
        if (!seen_pairs.insert({std::min(a, b), std::max(a, b)}).second) throw ParseError(line.number, "repeated edge");
        dpa_edges.push_back({a, b, static_cast<int>(cost)});
        break;
      }
      case ProblemKind::kTwoEcs: {
        expect_arity(line, 3, "e <u> <v>");
        VertexId a = vertex(line, line.tokens[1], nv), b = vertex(line, line.tokens[2], nv);
        no_loop(a, b);
        edges.push_back({a, b});
        break;
      }
    }
  }
  const std::size_t got = stars.size() + arcs.size() + dpa_edges.size() + edges.size();
  if (got != static_cast<std::size_t>(count))
    throw ParseError(lines.back().number,
                     "header announces " + std::to_string(count) + " elements but " + std::to_string(got) + " were given");
  switch (kind) {
    case ProblemKind::kSsc:
      return AnyInstance::ssc(SSCInstance(nv, std::move(stars)));
    case ProblemKind::kMscs:
      return AnyInstance::mscs(Digraph(nv, std::move(arcs)));
    case ProblemKind::kDpa:
      return AnyInstance::dpa(DPAInstance(nv, std::move(dpa_edges)));
    case ProblemKind::kTwoEcs:
      break;
  }
  return AnyInstance::two_ecs(Multigraph(nv, std::move(edges)));
}

std::string write_instance(const AnyInstance& instance) {
  std::ostringstream out;
  switch (instance.kind) {
    case ProblemKind::kSsc: {
      const auto& s = std::get<SSCInstance>(instance.data);
      out << "p ssc " << s.vertex_count() << ' ' << s.star_count() << '\n';
      for (const Star& f : s.stars()) {
        out << "s " << f.source + 1 << ' ' << f.sinks.size();
        for (VertexId v : f.sinks) out << ' ' << v + 1;
        out << '\n';
      }
      break;
    }
    case ProblemKind::kMscs: {
      const auto& g = std::get<Digraph>(instance.data);
      out << "p mscs " << g.vertex_count() << ' ' << g.arc_count() << '\n';
      for (const Arc& a : g.arcs()) out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
      break;
    }
    case ProblemKind::kDpa: {
      const auto& d = std::get<DPAInstance>(instance.data);
      out << "p dpa " << d.vertex_count() << ' ' << d.edges().size() << '\n';
      for (const DPAEdge& e : d.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.cost << '\n';
      break;
    }
    case ProblemKind::kTwoEcs: {
      const auto& g = std::get<TwoECSInstance>(instance.data).graph;
      out << "p 2ecs " << g.vertex_count() << ' ' << g.edge_count() << '\n';
      for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
      break;
    }
  }
  return out.str();
}

AdviceScript parse_advice(std::string_view text) {
  AdviceScript script;
  for (const Line& line : tokenize(text))
    for (std::string_view t : line.tokens) {
      long long v = to_integer(line, t, "advice index");
      if (v < 0) throw ParseError(line.number, "advice indices must be nonnegative");
      script.choices.push_back(static_cast<std::size_t>(v));
    }
  return script;
}

std::string write_advice(const AdviceScript& script) {
  std::ostringstream out;
  for (std::size_t i = 0; i < script.choices.size(); ++i) out << script.choices[i] << (i % 20 == 19 ? '\n' : ' ');
  std::string s = out.str();
  if (!s.empty()) s.back() = '\n';
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string instance_digest(const AnyInstance& instance) {
  const std::string text = write_instance(instance);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

json report_to_json(const RunReport& r, const AnyInstance& instance) {
  json hist = json::object();
  for (auto [size, count] : r.histogram) hist[std::to_string(size)] = count;
  json iterations = json::array();
  for (const IterationRecord& it : r.iterations)
    iterations.push_back({{"selected", ids_json(it.selected)},
                          {"cuts", cuts_json(it.cuts)},
                          {"size", it.size},
                          {"rule", it.rule},
                          {"vertices_before", it.vertices_before}});
  return {
      {"format", "dualcut-report/1"},
      {"problem", std::string(to_string(r.problem))},
      {"algorithm", r.algorithm},
      {"instance_digest", instance_digest(instance)},
      {"instance_vertices", input_vertex_count(instance)},
      {"n", r.n},
      {"k", r.k},
      {"cost", r.cost},
      {"selected", ids_json(r.selected)},
      {"histogram", hist},
      {"certificate",
       {{"kind", r.certificate.kind == CertificateKind::kTwoEcs ? "2ecs" : "ssc"}, {"cuts", cuts_json(r.certificate.cuts)}}},
      {"bounds",
       {{"dual_objective", r.bounds.dual_objective},
        {"n_bound", r.bounds.n_bound},
        {"best", r.bounds.best},
        {"convex_bound", rational_json(r.convex_bound)}}},
      {"ratio_vs_best", rational_json(r.ratio_vs_best)},
      {"iterations", iterations},
      {"advisor", {{"decisions", r.advisor.decisions}, {"consumed", r.advisor.consumed}, {"fallbacks", r.advisor.fallbacks}}},
      {"feasible", r.feasible},
  };
}

RunReport report_from_json(const json& doc) {
  try {
    if (doc.at("format").get<std::string>() != "dualcut-report/1") throw ParseError(0, "unknown report format");
    RunReport r;
    r.problem = problem_kind_from_string(doc.at("problem").get<std::string>());
    r.algorithm = doc.at("algorithm").get<std::string>();
    r.n = doc.at("n").get<int>();
    r.k = doc.at("k").get<int>();
    r.cost = doc.at("cost").get<int>();
    r.selected = ids_from(doc.at("selected"));
    for (const auto& [size, count] : doc.at("histogram").items()) r.histogram[std::stoi(size)] = count.get<int>();
    const json& cert = doc.at("certificate");
    r.certificate.kind = cert.at("kind").get<std::string>() == "2ecs" ? CertificateKind::kTwoEcs : CertificateKind::kSsc;
    r.certificate.cuts = cuts_from(cert.at("cuts"));
    const json& b = doc.at("bounds");
    r.bounds = {b.at("dual_objective").get<int>(), b.at("n_bound").get<int>(), b.at("best").get<int>()};
    r.convex_bound = rational_from(b.at("convex_bound"));
    r.ratio_vs_best = rational_from(doc.at("ratio_vs_best"));
    for (const json& it : doc.at("iterations"))
      r.iterations.push_back({ids_from(it.at("selected")), cuts_from(it.at("cuts")), it.at("size").get<int>(),
                              it.at("rule").get<std::string>(), it.at("vertices_before").get<int>()});
    const json& a = doc.at("advisor");
    r.advisor = {a.at("decisions").get<int>(), a.at("consumed").get<int>(), a.at("fallbacks").get<int>()};
    r.feasible = doc.at("feasible").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

}  // namespace dualcut
