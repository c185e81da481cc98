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

#include "dualcut/dpa.hpp"
#include "dualcut/error.hpp"
#include "dualcut/generators.hpp"
#include "dualcut/oracles.hpp"
#include "dualcut/perfect_sets.hpp"
#include "test_util.hpp"

namespace dualcut {
namespace {

using testing::c4;
using testing::triangle;
using testing::k4;

const SSCInstance& ssc_of(const GeneratedInstance& g) { return std::get<SSCInstance>(g.instance.data); }

TEST(ExactSsc, KnownOptima) {
  EXPECT_EQ(exact_ssc(triangle()).optimum, 3);
  EXPECT_EQ(exact_ssc(ssc_of(gen_dpa_tight(1))).optimum, 5);
  EXPECT_EQ(exact_ssc(ssc_of(gen_ssc_tight(1))).optimum, 7);
  // The subset search agrees with the Hamiltonian shortcut.
  EXPECT_EQ(search_ssc(ssc_of(gen_dpa_tight(1))).optimum, 5);
  EXPECT_EQ(search_ssc(ssc_of(gen_ssc_tight(1))).optimum, 7);
}

TEST(ExactSsc, NonHamiltonianNeedsMoreThanN) {
  // Two triangles sharing vertex 1: no Hamiltonian cycle, optimum 6.
  SSCInstance bowtie(5, {testing::star1(1, {2}), testing::star1(2, {3}), testing::star1(3, {1}),
                         testing::star1(1, {4}), testing::star1(4, {5}), testing::star1(5, {1})});
  ExactResult r = exact_ssc(bowtie);
  EXPECT_EQ(r.optimum, 6);
  EXPECT_EQ(r.method, ExactMethod::kSearch);
  // A star joining both out-arcs of 1 brings it down to 5.
  SSCInstance merged(5, {testing::star1(1, {2, 4}), testing::star1(2, {3}), testing::star1(3, {1}),
                         testing::star1(4, {5}), testing::star1(5, {1})});
  EXPECT_EQ(exact_ssc(merged).optimum, 5);
}

TEST(ExactSsc, LimitExceeded) {
  auto g = gen_random_ssc(12, 3.0, 1, 5);
  EXPECT_THROW(search_ssc(ssc_of(g), 10), LimitExceeded);
}

TEST(ExactTwoEcs, KnownOptima) {
  EXPECT_EQ(exact_2ecs(TwoECSInstance{c4()}).optimum, 4);
  EXPECT_EQ(exact_2ecs(TwoECSInstance{k4()}).optimum, 4);
  EXPECT_EQ(search_2ecs(TwoECSInstance{k4()}).optimum, 4);
  // K_{2,3} has no Hamiltonian cycle; every vertex of the 3-side needs
  // both of its edges.
  Multigraph k23 = testing::multigraph1(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(exact_2ecs(TwoECSInstance{k23}).optimum, 6);
}

TEST(ExactDpa, Triangle) {
  DPAInstance tri(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  EXPECT_EQ(exact_dpa(tri).optimum, 3);
  DPAInstance zero(3, {{0, 1, 0}, {1, 2, 0}});
  EXPECT_EQ(exact_dpa(zero).optimum, 0);
}

TEST(CertifyByBound, HamiltonianWitnesses) {
  auto g = gen_dpa_tight(50);
  EXPECT_EQ(g.witness->cost(), 103);
  EXPECT_TRUE(certify_exact_by_bound(ssc_of(g), *g.witness));
  auto t = gen_ssc_tight(50);
  EXPECT_EQ(t.witness->cost(), 252);
  EXPECT_TRUE(certify_exact_by_bound(ssc_of(t), *t.witness));
  EXPECT_TRUE(certify_exact_by_bound(triangle(), StarSolution{{0, 1, 2}}));
  EXPECT_THROW(certify_exact_by_bound(triangle(), StarSolution{{0, 1}}), InfeasibleInstance);
}

TEST(TightFamilies, DpaShape) {
  auto g1 = gen_dpa_tight(1);
  EXPECT_EQ(ssc_of(g1).vertex_count(), 5);
  EXPECT_EQ(g1.expected->algorithm, 6);
  EXPECT_EQ(g1.expected->optimum, 5);
  auto g50 = gen_dpa_tight(50);
  EXPECT_EQ(g50.expected->algorithm, 153);
  EXPECT_EQ(g50.expected->optimum, 103);
  for (int k = 1; k <= 8; ++k) {
    auto g = gen_dpa_tight(k);
    LiveInstance li(ssc_of(g));
    EXPECT_EQ(li.vertex_count(), 2 * k + 3);
    EXPECT_TRUE(li.is_bidirected());
    EXPECT_FALSE(is_leaf(li, 0));
    EXPECT_FALSE(is_leaf(li, 1));
    for (int i = 0; i < k; ++i) EXPECT_EQ(li.neighbors(k + 3 + i).size(), 2u) << "l" << i + 1;
  }
}

TEST(TightFamilies, SscShape) {
  auto t1 = gen_ssc_tight(1);
  EXPECT_EQ(ssc_of(t1).vertex_count(), 7);
  EXPECT_EQ(ssc_of(t1).star_count(), 11);
  EXPECT_EQ(t1.expected->algorithm, 10);
  EXPECT_EQ(t1.expected->optimum, 7);
  auto t2 = gen_ssc_tight(2);
  EXPECT_EQ(ssc_of(t2).vertex_count(), 12);
  EXPECT_EQ(t2.expected->algorithm, 18);
  EXPECT_EQ(t2.expected->optimum, 12);
  auto t50 = gen_ssc_tight(50);
  EXPECT_EQ(t50.expected->algorithm, 402);
  EXPECT_EQ(t50.expected->optimum, 252);
  EXPECT_THROW(gen_ssc_tight(0), std::invalid_argument);
}

TEST(RandomFamilies, DegenerateParameters) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const SSCInstance s = ssc_of(gen_random_ssc(5, 0.0, 1, seed));
    EXPECT_EQ(s.star_count(), 5);
    EXPECT_TRUE(check_feasible(s, StarSolution{{0, 1, 2, 3, 4}}));
    const Multigraph g = std::get<TwoECSInstance>(gen_random_2ecs(4, 0.0, seed).instance.data).graph;
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_TRUE(is_two_edge_connected(g));
  }
}

TEST(RandomFamilies, Deterministic) {
  EXPECT_EQ(ssc_of(gen_random_ssc(7, 1.0, 3, 42)), ssc_of(gen_random_ssc(7, 1.0, 3, 42)));
  EXPECT_EQ(ssc_of(gen_random_bidirected(7, 1.0, 3, 42)), ssc_of(gen_random_bidirected(7, 1.0, 3, 42)));
  EXPECT_EQ(std::get<DPAInstance>(gen_random_dpa(7, 0.3, 42).instance.data),
            std::get<DPAInstance>(gen_random_dpa(7, 0.3, 42).instance.data));
  EXPECT_FALSE(ssc_of(gen_random_ssc(7, 1.0, 3, 42)) == ssc_of(gen_random_ssc(7, 1.0, 3, 43)));
}

TEST(RandomFamilies, AlwaysFeasible) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    EXPECT_NO_THROW(require_feasible(ssc_of(gen_random_ssc(6, 0.8, 3, seed))));
    const SSCInstance b = ssc_of(gen_random_bidirected(6, 0.5, 2, seed));
    EXPECT_TRUE(b.is_bidirected());
    EXPECT_NO_THROW(require_feasible(b));
    EXPECT_NO_THROW(require_feasible(std::get<TwoECSInstance>(gen_random_2ecs(6, 0.7, seed).instance.data)));
    EXPECT_NO_THROW(require_feasible(std::get<DPAInstance>(gen_random_dpa(6, 0.3, seed).instance.data)));
  }
}

TEST(UniformBelow, Portable) {
  // Reference values of mt19937_64 with the default seed.
  std::mt19937_64 rng;
  EXPECT_EQ(rng(), 14514284786278117030ull);
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_LT(uniform_below(a, 7), 7u);
  EXPECT_EQ(uniform_below(b, 1), 0u);
  EXPECT_THROW(uniform_below(b, 0), std::invalid_argument);
}

TEST(Advisor, ScriptFallbacksAndHistory) {
  ScriptedAdvisor a(AdviceScript{{1, 5}});
  EXPECT_EQ(a.choose(ChoicePoint::kStar, 1), 0u);  // forced, consumes nothing
  EXPECT_EQ(a.choose(ChoicePoint::kStar, 3), 1u);
  EXPECT_EQ(a.choose(ChoicePoint::kStar, 3), 0u);  // 5 is out of range
  EXPECT_EQ(a.choose(ChoicePoint::kStar, 3), 0u);  // exhausted
  EXPECT_EQ(a.stats().decisions, 3);
  EXPECT_EQ(a.stats().consumed, 2);
  EXPECT_EQ(a.stats().fallbacks, 2);
  EXPECT_EQ(a.history(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_THROW(a.choose(ChoicePoint::kStar, 0), std::logic_error);
}

}  // namespace
}  // namespace dualcut
