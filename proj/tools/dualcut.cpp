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

// Command-line front end: solve, exact, verify, gen, gap.
//
// Exit codes: 0 success, 1 infeasible instance or failed verification,
// 2 parse or usage error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dualcut/error.hpp"
#include "dualcut/generators.hpp"
#include "dualcut/io.hpp"
#include "dualcut/solve.hpp"

namespace {

using namespace dualcut;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct AdvisorFlags {
  std::string advice;
  std::optional<std::uint64_t> seed;
  std::string algorithm = "auto";
};

void add_advisor_flags(CLI::App* cmd, AdvisorFlags& f) {
  cmd->add_option("--advice", f.advice, "Advice script (choice indices)")->check(CLI::ExistingFile);
  cmd->add_option("--advisor-seed", f.seed, "Random advisor seed (instead of a script)");
  cmd->add_option("--algorithm", f.algorithm, "Star algorithm: auto, bidirected or general")
      ->check(CLI::IsMember({"auto", "bidirected", "general"}));
}

std::unique_ptr<Advisor> make_advisor(const AdvisorFlags& f) {
  if (!f.advice.empty() && f.seed) throw CLI::ValidationError("--advice and --advisor-seed are exclusive");
  if (!f.advice.empty()) return std::make_unique<ScriptedAdvisor>(parse_advice(read_file(f.advice)));
  if (f.seed) return std::make_unique<RandomAdvisor>(*f.seed);
  return std::make_unique<DefaultAdvisor>();
}

AnyInstance load(const std::string& path) { return parse_instance(read_file(path)); }

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

std::string rational_text(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.value());
  return r.str() + " (" + buf + ")";
}

int cmd_solve(const std::string& problem, const std::string& input, const AdvisorFlags& af, const std::string& out) {
  AnyInstance instance = load(input);
  if (problem_kind_from_string(problem) != instance.kind)
    throw CLI::ValidationError("--problem " + problem + " does not match the instance header '" +
                               std::string(to_string(instance.kind)) + "'");
  auto advisor = make_advisor(af);
  RunReport r = solve(instance, *advisor, star_algorithm_from_string(af.algorithm));
  emit(out, report_to_json(r, instance).dump(2) + "\n");
  if (!out.empty() && out != "-")
    std::cout << "cost " << r.cost << "  k " << r.k << "  best lower bound " << r.bounds.best << "  ratio "
              << rational_text(r.ratio_vs_best) << "\n";
  return kOk;
}

int cmd_exact(const std::string& input, int limit) {
  AnyInstance instance = load(input);
  ExactResult e = exact_optimum(instance, limit);
  nlohmann::json witness = nlohmann::json::array();
  for (int id : e.witness) witness.push_back(id + 1);
  nlohmann::json doc{{"problem", std::string(to_string(instance.kind))},
                     {"optimum", e.optimum},
                     {"method", std::string(to_string(e.method))},
                     {"explored", e.explored},
                     {"witness", witness}};
  std::cout << doc.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& report_path) {
  AnyInstance instance = load(input);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(report_path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("report is not JSON: ") + e.what());
  }
  RunReport r = report_from_json(doc);
  VerifyOutcome v = verify_report(instance, r, doc.value("instance_digest", std::string{}));
  if (v.ok) {
    std::cout << "PASS  cost " << r.cost << ", certificate of " << r.certificate.cuts.size() << " cuts, bound "
              << r.bounds.best << "\n";
    return kOk;
  }
  std::cout << "FAIL\n";
  for (const std::string& p : v.problems) std::cout << "  " << p << "\n";
  return kFailed;
}

std::string with_header(const std::vector<std::string>& notes, const std::string& body) {
  std::string out;
  for (const std::string& n : notes) out += "# " + n + "\n";
  return out + body;
}

int cmd_gen(const std::string& family, int k, int n, double extra, int fan, double zero_prob, std::uint64_t seed,
            const std::string& out, std::string advice_out) {
  GeneratedInstance g;
  std::vector<std::string> notes;
  if (family == "gk") {
    g = gen_dpa_tight(k);
    notes.push_back("G_k tight family for the bidirected algorithm, k = " + std::to_string(k));
  } else if (family == "tk") {
    g = gen_ssc_tight(k);
    notes.push_back("T_k tight family for the general algorithm, k = " + std::to_string(k));
  } else {
    if (family == "random-ssc") g = gen_random_ssc(n, extra, fan, seed);
    else if (family == "random-bidirected") g = gen_random_bidirected(n, extra, fan, seed);
    else if (family == "random-2ecs") g = gen_random_2ecs(n, extra, seed);
    else g = gen_random_dpa(n, zero_prob, seed, extra);
    std::ostringstream note;
    note << family << " n=" << n << " extra=" << extra << " fan=" << fan << " zero-prob=" << zero_prob << " seed=" << seed
         << " rng=mt19937_64";
    notes.push_back(note.str());
  }
  if (g.expected)
    notes.push_back("expected algorithm cost " + std::to_string(g.expected->algorithm) + " with the advice, optimum " +
                    std::to_string(g.expected->optimum));
  if (!g.labels.empty()) {
    std::string labels = "labels";
    for (const std::string& l : g.labels) labels += " " + l;
    notes.push_back(labels);
  }
  emit(out, with_header(notes, write_instance(g.instance)));
  if (g.advice) {
    if (advice_out.empty() && !out.empty() && out != "-") advice_out = out + ".advice";
    if (!advice_out.empty()) write_file(advice_out, "# advice for " + notes.front() + "\n" + write_advice(*g.advice));
  }
  return kOk;
}

int cmd_gap(const std::string& input, const AdvisorFlags& af, int limit) {
  AnyInstance instance = load(input);
  auto advisor = make_advisor(af);
  GapOutcome g = gap(instance, *advisor, star_algorithm_from_string(af.algorithm), limit);
  std::cout << "problem   " << to_string(instance.kind) << " (" << g.report.algorithm << ")\n"
            << "cost      " << g.report.cost << "\n"
            << "optimum   " << g.exact.optimum << " [" << to_string(g.exact.method) << "]\n"
            << "ratio     " << g.report.cost << "/" << g.exact.optimum << " = " << rational_text(g.ratio) << "\n"
            << "dual      " << g.report.bounds.best << " (certificate " << g.report.bounds.dual_objective << ", n bound "
            << g.report.bounds.n_bound << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-based approximation for 2ECS, DPA, MSCS and SSC with integer dual certificates"};
  app.require_subcommand(1);

  std::string problem, input, out, report, advice_out, family;
  AdvisorFlags af;
  int limit = kDefaultExactLimit;
  int k = 1, n = 8, fan = 2;
  double extra = 1.0, zero_prob = 0.2;
  std::uint64_t seed = 1;

  auto* solve_cmd = app.add_subcommand("solve", "Run the approximation and print a report");
  solve_cmd->add_option("--problem", problem, "2ecs, mscs, dpa or ssc")
      ->required()
      ->check(CLI::IsMember({"2ecs", "mscs", "dpa", "ssc"}));
  solve_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--out", out, "Report file (default: stdout)");
  add_advisor_flags(solve_cmd, af);

  auto* exact_cmd = app.add_subcommand("exact", "Compute the optimum exactly");
  exact_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  exact_cmd->add_option("--limit", limit, "Largest element count for subset search");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a report against its instance");
  verify_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--report", report, "Report file")->required()->check(CLI::ExistingFile);

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", family, "gk, tk, random-ssc, random-bidirected, random-2ecs, random-dpa")
      ->required()
      ->check(CLI::IsMember({"gk", "tk", "random-ssc", "random-bidirected", "random-2ecs", "random-dpa"}));
  gen_cmd->add_option("--k", k, "Family parameter for gk / tk");
  gen_cmd->add_option("--n", n, "Vertex count for random families");
  gen_cmd->add_option("--extra", extra, "Extra arcs or edges per vertex");
  gen_cmd->add_option("--fan", fan, "Largest star fan");
  gen_cmd->add_option("--zero-prob", zero_prob, "Probability of a zero-cost DPA edge");
  gen_cmd->add_option("--seed", seed, "Generator seed");
  gen_cmd->add_option("--out", out, "Instance file (default: stdout)");
  gen_cmd->add_option("--advice-out", advice_out, "Advice file (default: <out>.advice)");

  auto* gap_cmd = app.add_subcommand("gap", "Solve, compute the optimum and print the ratio");
  gap_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  gap_cmd->add_option("--limit", limit, "Largest element count for subset search");
  add_advisor_flags(gap_cmd, af);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(problem, input, af, out);
    if (*exact_cmd) return cmd_exact(input, limit);
    if (*verify_cmd) return cmd_verify(input, report);
    if (*gen_cmd) return cmd_gen(family, k, n, extra, fan, zero_prob, seed, out, advice_out);
    if (*gap_cmd) return cmd_gap(input, af, limit);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kFailed;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kFailed;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
