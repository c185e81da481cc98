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

#include <algorithm>

#include <gtest/gtest.h>

#include "dualcut/dpa.hpp"
#include "dualcut/generators.hpp"
#include "dualcut/oracles.hpp"
#include "dualcut/ssc.hpp"
#include "dualcut/two_ecs.hpp"
#include "test_util.hpp"

namespace dualcut {
namespace {

using testing::c4;
using testing::digon;
using testing::triangle;
using testing::split_star;
using testing::k4;
using testing::multigraph1;
using testing::set1;
using testing::star1;

VertexSet sorted(VertexSet v) { return make_vertex_set(std::move(v)); }

// ---- 2ECS ----------------------------------------------------------------

TEST(TwoEcsCycle, ParallelPair) {
  DefaultAdvisor a;
  CycleWitness w = find_cycle_with_internal_cut(multigraph1(2, {{1, 2}, {1, 2}}), a);
  EXPECT_EQ(sorted(w.edges), (VertexSet{0, 1}));
  EXPECT_EQ(w.cut_vertex, 1);
}

TEST(TwoEcsCycle, FourCycle) {
  DefaultAdvisor a;
  CycleWitness w = find_cycle_with_internal_cut(c4(), a);
  EXPECT_EQ(w.edges.size(), 4u);
  EXPECT_EQ(w.cut_vertex, 3);
}

TEST(TwoEcsCycle, K4DefaultPath) {
  DefaultAdvisor a;
  CycleWitness w = find_cycle_with_internal_cut(k4(), a);
  // Path 1,2,3,4 closes back to 1.
  EXPECT_EQ(w.vertices, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(w.cut_vertex, 3);
  EXPECT_EQ(w.edges.size(), 4u);
}

TEST(ApproxTwoEcs, SmallCases) {
  DefaultAdvisor a;
  RunReport r = approx_2ecs(TwoECSInstance{c4()}, a);
  EXPECT_EQ(r.cost, 4);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.n, 4);
  EXPECT_EQ(r.bounds.best, 4);
  EXPECT_EQ(r.ratio_vs_best, Rational::of(1, 1));

  DefaultAdvisor b;
  RunReport p = approx_2ecs(TwoECSInstance{multigraph1(2, {{1, 2}, {1, 2}})}, b);
  EXPECT_EQ(p.cost, 2);
  EXPECT_EQ(p.k, 1);
  EXPECT_EQ(p.bounds.best, 2);

  DefaultAdvisor c;
  RunReport q = approx_2ecs(TwoECSInstance{k4()}, c);
  EXPECT_EQ(q.cost, 4);
  EXPECT_EQ(q.k, 1);
}

TEST(ApproxTwoEcs, RandomRunsSatisfyIdentities) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = gen_random_2ecs(8, 1.0, seed);
    RandomAdvisor a(seed * 31);
    RunReport r = approx_2ecs(std::get<TwoECSInstance>(g.instance.data), a);
    EXPECT_TRUE(r.feasible);
    IdentityCheck id = check_identities(r);
    EXPECT_TRUE(id.ok) << "seed " << seed << ": " << (id.failures.empty() ? "" : id.failures.front());
    EXPECT_LT(2 * r.cost, 3 * std::max(r.n, 2 * r.k));
  }
}

// ---- bidirected / DPA ----------------------------------------------------

TEST(DpaTwoCuts, DegenerateTwoVertices) {
  DefaultAdvisor a;
  PerfectSetChoice c = find_perfect_two_cuts(LiveInstance(digon()), a);
  EXPECT_EQ(sorted(c.stars), (std::vector<StarId>{0, 1}));
  ASSERT_EQ(c.cuts.size(), 2u);
  EXPECT_EQ(sorted({c.cuts[0][0], c.cuts[1][0]}), (VertexSet{0, 1}));
}

TEST(DpaTwoCuts, StarWithTwoLeaves) {
  DefaultAdvisor a;
  LiveInstance li(split_star());
  PerfectSetChoice c = find_perfect_two_cuts(li, a);
  EXPECT_EQ(sorted(c.stars), (std::vector<StarId>{0, 1, 2}));
  ASSERT_EQ(c.cuts.size(), 2u);
  EXPECT_EQ(c.cuts[0], set1({2}));
  EXPECT_EQ(c.cuts[1], set1({3}));
  EXPECT_NO_THROW(validate_choice(li, c));
}

TEST(DpaTwoCuts, TightFamilyFirstCycle) {
  // vbar = 0, wbar = 1, u1 = 2, u2 = 3, l1 = 4.
  auto g = gen_dpa_tight(1);
  ScriptedAdvisor a(*g.advice);
  LiveInstance li(std::get<SSCInstance>(g.instance.data));
  RotationCycle cyc = build_rotation_cycle(li, a);
  EXPECT_EQ(cyc.v_bar, 0);
  EXPECT_EQ(cyc.w_bar, 1);
  EXPECT_EQ(sorted(cyc.vertices), (VertexSet{0, 1, 2, 3}));

  ScriptedAdvisor b(*g.advice);
  PerfectSetChoice c = find_perfect_two_cuts(li, b);
  EXPECT_EQ(c.stars.size(), 4u);
  ASSERT_EQ(c.cuts.size(), 2u);
  EXPECT_EQ(c.cuts[0], (VertexSet{0}));
  EXPECT_EQ(c.cuts[1], (VertexSet{1}));
}

TEST(ApproxDpa, SmallCases) {
  DefaultAdvisor a;
  RunReport r = approx_dpa(digon(), a);
  EXPECT_EQ(r.cost, 2);
  EXPECT_EQ(r.bounds.best, 2);
  EXPECT_EQ(r.ratio_vs_best, Rational::of(1, 1));
}

TEST(ApproxDpa, TightFamilySmallK) {
  for (int k = 1; k <= 6; ++k) {
    auto g = gen_dpa_tight(k);
    ScriptedAdvisor a(*g.advice);
    RunReport r = approx_dpa(std::get<SSCInstance>(g.instance.data), a);
    EXPECT_EQ(r.cost, 3 * k + 3) << "k=" << k;
    EXPECT_EQ(r.advisor.fallbacks, 0);
    EXPECT_EQ(r.certificate.cuts.size(), static_cast<std::size_t>(2 * r.k));
    EXPECT_TRUE(check_identities(r).ok);
  }
  auto g1 = gen_dpa_tight(1);
  ScriptedAdvisor a(*g1.advice);
  EXPECT_EQ(approx_dpa(std::get<SSCInstance>(g1.instance.data), a).bounds.best, 5);
}

TEST(ApproxDpa, PowerInstanceSelectsVertices) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = gen_random_dpa(7, 0.25, seed);
    const DPAInstance& d = std::get<DPAInstance>(g.instance.data);
    RandomAdvisor a(seed);
    RunReport r = approx_dpa(d, a);
    EXPECT_EQ(r.problem, ProblemKind::kDpa);
    EXPECT_TRUE(check_feasible(d, PowerSolution{r.selected})) << "seed " << seed;
    EXPECT_TRUE(verify_certificate(d, r.certificate).feasible);
    EXPECT_TRUE(check_identities(r).ok);
  }
}

// ---- general SSC ---------------------------------------------------------

TEST(SimpleCycle, Forced) {
  DefaultAdvisor a;
  SimpleCycle c = build_simple_cycle(LiveInstance(triangle()), a);
  EXPECT_EQ(c.vertices, (VertexSet{0, 1, 2}));
  EXPECT_EQ(c.v_bar, 2);
  DefaultAdvisor b;
  SimpleCycle d = build_simple_cycle(LiveInstance(digon()), b);
  EXPECT_EQ(d.vertices, (VertexSet{0, 1}));
  EXPECT_EQ(d.v_bar, 1);
}

TEST(SscPerfectSet, Triangle) {
  DefaultAdvisor a;
  LiveInstance li(triangle());
  PerfectSetChoice c = find_perfect_set(li, a);
  EXPECT_EQ(c.kind, SetKind::kTwoCuts);
  EXPECT_EQ(sorted(c.stars), (std::vector<StarId>{0, 1, 2}));
  ASSERT_EQ(c.cuts.size(), 2u);
  EXPECT_EQ(c.cuts[0], set1({3}));
  EXPECT_EQ(c.cuts[1], set1({2}));
}

TEST(SscPerfectSet, Digon) {
  DefaultAdvisor a;
  PerfectSetChoice c = find_perfect_set(LiveInstance(digon()), a);
  EXPECT_EQ(sorted(c.stars), (std::vector<StarId>{0, 1}));
  ASSERT_EQ(c.cuts.size(), 2u);
  EXPECT_EQ(c.cuts[0], set1({2}));
  EXPECT_EQ(c.cuts[1], set1({1}));
}

TEST(SscPerfectSet, LongCycle) {
  SSCInstance five(5, {star1(1, {2}), star1(2, {3}), star1(3, {4}), star1(4, {5}), star1(5, {1})});
  DefaultAdvisor a;
  PerfectSetChoice c = find_perfect_set(LiveInstance(five), a);
  EXPECT_EQ(c.kind, SetKind::kBigOneCut);
  EXPECT_EQ(c.stars.size(), 5u);
  ASSERT_EQ(c.cuts.size(), 1u);
  EXPECT_EQ(c.cuts[0], set1({5}));
}

TEST(ApproxSsc, Triangle) {
  DefaultAdvisor a;
  RunReport r = approx_ssc(triangle(), a);
  EXPECT_EQ(r.cost, 3);
  ASSERT_EQ(r.certificate.cuts.size(), 2u);
  EXPECT_EQ(r.certificate.cuts[0].side, set1({3}));
  EXPECT_EQ(r.certificate.cuts[1].side, set1({2}));
  EXPECT_EQ(r.bounds.dual_objective, 2);
}

TEST(ApproxSsc, TightFamilySmallK) {
  for (int k = 1; k <= 6; ++k) {
    auto g = gen_ssc_tight(k);
    ScriptedAdvisor a(*g.advice);
    RunReport r = approx_ssc(std::get<SSCInstance>(g.instance.data), a);
    EXPECT_EQ(r.cost, 8 * k + 2) << "k=" << k;
    EXPECT_EQ(r.advisor.fallbacks, 0);
    EXPECT_TRUE(check_identities(r).ok);
  }
}

TEST(ApproxSsc, RandomRunsSatisfyIdentities) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = gen_random_ssc(9, 1.2, 3, seed);
    RandomAdvisor a(seed);
    RunReport r = approx_ssc(std::get<SSCInstance>(g.instance.data), a);
    EXPECT_TRUE(r.feasible);
    IdentityCheck id = check_identities(r);
    EXPECT_TRUE(id.ok) << "seed " << seed << ": " << (id.failures.empty() ? "" : id.failures.front());
  }
}

}  // namespace
}  // namespace dualcut
