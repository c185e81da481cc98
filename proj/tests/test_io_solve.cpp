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

#include <gtest/gtest.h>

#include "dualcut/error.hpp"
#include "dualcut/generators.hpp"
#include "dualcut/io.hpp"
#include "dualcut/solve.hpp"
#include "test_util.hpp"

namespace dualcut {
namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Parse, Formats) {
  AnyInstance tri = parse_instance("p mscs 3 3\na 1 2\na 2 3\na 3 1\n");
  EXPECT_EQ(tri.kind, ProblemKind::kMscs);
  EXPECT_EQ(std::get<Digraph>(tri.data).arc_count(), 3);

  AnyInstance two = parse_instance("# digon\np ssc 2 2\ns 1 1 2\ns 2 1 1\n");
  EXPECT_EQ(std::get<SSCInstance>(two.data), testing::digon());

  AnyInstance pair = parse_instance("p 2ecs 2 2\ne 1 2\ne 1 2\n");
  EXPECT_EQ(std::get<TwoECSInstance>(pair.data).graph.edge_count(), 2);

  AnyInstance dpa = parse_instance("p dpa 3 2\ne 1 2 0\ne 2 3 1\n");
  EXPECT_EQ(std::get<DPAInstance>(dpa.data).edges()[0].cost, 0);
}

TEST(Parse, LineNumberedErrors) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("p foo 3 0\n"), 1);
  EXPECT_EQ(parse_error_line("p mscs 3 2\na 1 2\na 2 4\n"), 3);
  EXPECT_EQ(parse_error_line("p mscs 3 2\na 1 1\na 2 3\n"), 2);
  EXPECT_EQ(parse_error_line("p mscs 3 2\na 1 2\na 1 2\n"), 3);
  EXPECT_EQ(parse_error_line("p ssc 3 1\ns 1 2 2\n"), 2);
  EXPECT_EQ(parse_error_line("p ssc 3 1\ns 1 2 2 2\n"), 2);
  EXPECT_EQ(parse_error_line("p dpa 2 1\ne 1 2 3\n"), 2);
  EXPECT_EQ(parse_error_line("p mscs 3 3\na 1 2\n\na 2 3\n"), 4);
  EXPECT_EQ(parse_error_line("p mscs 3 1\na 1 x\n"), 2);
}

TEST(Parse, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const GeneratedInstance& g : {gen_random_ssc(6, 1.0, 3, seed), gen_random_2ecs(6, 1.0, seed),
                                       gen_random_dpa(6, 0.3, seed), gen_ssc_tight(2)}) {
      std::string text = write_instance(g.instance);
      AnyInstance back = parse_instance(text);
      EXPECT_EQ(back.kind, g.instance.kind);
      EXPECT_EQ(write_instance(back), text);
      EXPECT_EQ(instance_digest(back), instance_digest(g.instance));
    }
  }
}

TEST(Digest, Sha256OfCanonicalText) {
  AnyInstance a = parse_instance("p mscs 3 3\na 1 2\na 2 3\na 3 1\n");
  AnyInstance b = parse_instance("# comment\np   mscs 3 3\n a 1 2\na 2 3\n\na 3 1");
  EXPECT_EQ(instance_digest(a), instance_digest(b));
  EXPECT_EQ(instance_digest(a).rfind("sha256:", 0), 0u);
  EXPECT_EQ(instance_digest(a).size(), 7u + 64u);
}

TEST(Advice, RoundTrip) {
  AdviceScript s = parse_advice("# header\n1 0 2\n3\n");
  EXPECT_EQ(s.choices, (std::vector<std::size_t>{1, 0, 2, 3}));
  EXPECT_EQ(parse_advice(write_advice(s)).choices, s.choices);
  EXPECT_THROW(parse_advice("1 -2\n"), ParseError);
}

TEST(Solve, MscsTriangle) {
  DefaultAdvisor a;
  AnyInstance tri = parse_instance("p mscs 3 3\na 1 2\na 2 3\na 3 1\n");
  RunReport r = solve(tri, a);
  EXPECT_EQ(r.cost, 3);
  EXPECT_EQ(r.certificate.cuts.size(), 2u);
  EXPECT_TRUE(verify_report(tri, r, instance_digest(tri)).ok);
}

TEST(Solve, AlgorithmSelection) {
  AnyInstance tri = parse_instance("p mscs 3 3\na 1 2\na 2 3\na 3 1\n");
  DefaultAdvisor a;
  EXPECT_THROW(solve(tri, a, StarAlgorithm::kBidirected), PreconditionError);
  auto g = gen_dpa_tight(2);
  DefaultAdvisor b, c;
  EXPECT_EQ(solve(g.instance, b).algorithm, "bidirected");
  EXPECT_EQ(solve(g.instance, c, StarAlgorithm::kGeneral).algorithm, "general");
  EXPECT_EQ(star_algorithm_from_string("general"), StarAlgorithm::kGeneral);
  EXPECT_THROW(star_algorithm_from_string("fast"), std::invalid_argument);
}

TEST(Solve, InfeasibleInstance) {
  DefaultAdvisor a;
  EXPECT_THROW(solve(parse_instance("p mscs 3 2\na 1 2\na 2 3\n"), a), InfeasibleInstance);
  EXPECT_THROW(solve(parse_instance("p 2ecs 3 2\ne 1 2\ne 2 3\n"), a), InfeasibleInstance);
}

TEST(Report, JsonRoundTrip) {
  auto g = gen_ssc_tight(2);
  ScriptedAdvisor a(*g.advice);
  RunReport r = solve(g.instance, a);
  nlohmann::json doc = report_to_json(r, g.instance);
  EXPECT_EQ(doc["format"], "dualcut-report/1");
  EXPECT_EQ(doc["cost"], 18);
  EXPECT_EQ(doc["selected"][0].get<int>(), r.selected.front() + 1);
  RunReport back = report_from_json(nlohmann::json::parse(doc.dump()));
  EXPECT_EQ(back.cost, r.cost);
  EXPECT_EQ(back.selected, r.selected);
  EXPECT_EQ(back.certificate.cuts, r.certificate.cuts);
  EXPECT_EQ(back.histogram, r.histogram);
  EXPECT_TRUE(verify_report(g.instance, back, doc["instance_digest"]).ok);
}

// Every single-field mutation of a report that breaks feasibility or an
// identity is rejected.
TEST(Verify, RejectsMutations) {
  auto g = gen_random_ssc(7, 1.0, 2, 11);
  RandomAdvisor a(3);
  RunReport r = solve(g.instance, a);
  const std::string digest = instance_digest(g.instance);
  ASSERT_TRUE(verify_report(g.instance, r, digest).ok);

  RunReport cost = r;
  cost.cost += 1;
  EXPECT_FALSE(verify_report(g.instance, cost, digest).ok);

  RunReport dropped = r;
  dropped.selected.pop_back();
  EXPECT_FALSE(verify_report(g.instance, dropped, digest).ok);

  RunReport duplicated = r;
  duplicated.certificate.cuts.push_back(duplicated.certificate.cuts.front());
  VerifyOutcome v = verify_report(g.instance, duplicated, digest);
  EXPECT_FALSE(v.ok);

  RunReport removed = r;
  removed.certificate.cuts.pop_back();
  EXPECT_FALSE(verify_report(g.instance, removed, digest).ok);

  EXPECT_FALSE(verify_report(g.instance, r, "sha256:00").ok);

  RunReport bound = r;
  bound.bounds.best += 1;
  EXPECT_FALSE(verify_report(g.instance, bound, digest).ok);
}

TEST(Gap, TightFamilyRatio) {
  auto g = gen_dpa_tight(3);
  ScriptedAdvisor a(*g.advice);
  GapOutcome out = gap(g.instance, a);
  EXPECT_EQ(out.report.cost, 12);
  EXPECT_EQ(out.exact.optimum, 9);
  EXPECT_EQ(out.ratio, Rational::of(12, 9));
}

TEST(Gap, PowerAssignment) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = gen_random_dpa(6, 0.3, seed);
    DefaultAdvisor a;
    GapOutcome out = gap(g.instance, a);
    EXPECT_LE(out.exact.optimum, out.report.cost);
    EXPECT_LE(out.report.bounds.best, out.exact.optimum);
    EXPECT_LE(2 * out.report.cost, 3 * out.exact.optimum);
  }
}

}  // namespace
}  // namespace dualcut
