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
#include "dualcut/instance.hpp"
#include "dualcut/oracles.hpp"
#include "test_util.hpp"

namespace dualcut {
namespace {

using testing::digraph1;
using testing::digon;
using testing::triangle;
using testing::star1;

TEST(Instance, StarValidation) {
  EXPECT_THROW(SSCInstance(2, {Star{0, {}}}), std::invalid_argument);
  EXPECT_THROW(SSCInstance(2, {Star{0, {0, 1}}}), std::invalid_argument);
  EXPECT_THROW(SSCInstance(2, {Star{0, {2}}}), std::out_of_range);
  EXPECT_THROW(require_feasible(SSCInstance(2, {star1(1, {2})})), InfeasibleInstance);
  EXPECT_NO_THROW(require_feasible(triangle()));
}

TEST(Instance, DerivedDigraph) {
  SSCInstance s(3, {star1(1, {2, 3}), star1(1, {2}), star1(2, {1}), star1(3, {1})});
  Digraph g = s.derived_digraph();
  EXPECT_EQ(g.arc_count(), 4);
  EXPECT_TRUE(s.is_bidirected());
  EXPECT_FALSE(triangle().is_bidirected());
}

TEST(DpaToSsc, NoZeroCostEdges) {
  DPAInstance d(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  DpaAsSsc m = dpa_to_ssc(d);
  ASSERT_EQ(m.instance.vertex_count(), 3);
  ASSERT_EQ(m.instance.star_count(), 3);
  for (VertexId v = 0; v < 3; ++v) {
    const Star& s = m.instance.star(m.star_of[v]);
    EXPECT_EQ(s.source, m.component[v]);
    EXPECT_EQ(s.sinks.size(), 2u);
  }
}

TEST(DpaToSsc, SingleZeroCostComponent) {
  DpaAsSsc m = dpa_to_ssc(DPAInstance(2, {{0, 1, 0}}));
  EXPECT_EQ(m.instance.vertex_count(), 1);
  EXPECT_EQ(m.instance.star_count(), 0);
}

TEST(DpaToSsc, MixedCosts) {
  // 1-2 cost 0, 2-3 and 3-1 cost 1: components {1,2}, {3}.
  DpaAsSsc m = dpa_to_ssc(DPAInstance(3, {{0, 1, 0}, {1, 2, 1}, {2, 0, 1}}));
  ASSERT_EQ(m.instance.vertex_count(), 2);
  EXPECT_EQ(m.component[0], m.component[1]);
  EXPECT_NE(m.component[0], m.component[2]);
  // Every original vertex has a cost-1 edge leaving its component.
  ASSERT_EQ(m.instance.star_count(), 3);
  EXPECT_EQ(m.star_owner, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(m.instance.star(m.star_of[2]).sinks, (VertexSet{m.component[0]}));
}

TEST(SscToDpa, Digon) {
  DPAInstance d = ssc_to_dpa(digon());
  EXPECT_EQ(d.vertex_count(), 2);
  ASSERT_EQ(d.edges().size(), 1u);
  EXPECT_EQ(d.edges()[0].cost, 1);
}

TEST(SscToDpa, SharedSourceGetsZeroCostEdge) {
  SSCInstance s(2, {star1(1, {2}), star1(1, {2}), star1(2, {1})});
  DPAInstance d = ssc_to_dpa(s);
  int zero = 0, one = 0;
  for (const DPAEdge& e : d.edges()) (e.cost == 0 ? zero : one)++;
  EXPECT_EQ(zero, 1);
  EXPECT_EQ(one, 2);
  EXPECT_THROW(ssc_to_dpa(triangle()), std::invalid_argument);
}

// ssc_to_dpa followed by dpa_to_ssc keeps the optimum (checked by the
// exact oracle on small bidirected instances).
TEST(SscToDpa, RoundTripKeepsOptimum) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = gen_random_bidirected(5, 0.6, 2, seed);
    const SSCInstance& s = std::get<SSCInstance>(g.instance.data);
    DpaAsSsc back = dpa_to_ssc(ssc_to_dpa(s));
    EXPECT_EQ(search_ssc(s, 30).optimum, search_ssc(back.instance, 30).optimum) << "seed " << seed;
  }
}

TEST(MscsToSsc, SingletonStars) {
  EXPECT_EQ(mscs_to_ssc(digraph1(3, {{1, 2}, {2, 3}, {3, 1}})).star_count(), 3);
  EXPECT_EQ(mscs_to_ssc(digraph1(2, {{1, 2}, {2, 1}})).star_count(), 2);
  auto t1 = gen_ssc_tight(1);
  const SSCInstance& s = std::get<SSCInstance>(t1.instance.data);
  EXPECT_EQ(s.vertex_count(), 7);
  EXPECT_EQ(s.star_count(), 11);
  for (const Star& f : s.stars()) EXPECT_EQ(f.sinks.size(), 1u);
}

TEST(DpaInducedGraph, Arcs) {
  DPAInstance zero(3, {{0, 1, 0}, {1, 2, 0}});
  std::vector<VertexId> none;
  EXPECT_EQ(dpa_induced_graph(zero, none).arc_count(), 4);
  DPAInstance one(2, {{0, 1, 1}});
  std::vector<VertexId> high{0};
  Digraph g = dpa_induced_graph(one, high);
  ASSERT_EQ(g.arc_count(), 1);
  EXPECT_EQ(g.arc(0), (Arc{0, 1}));
}

TEST(DpaInducedGraph, TightFamilyHamiltonianHighSet) {
  for (int k = 1; k <= 5; ++k) {
    auto g = gen_dpa_tight(k);
    const SSCInstance& s = std::get<SSCInstance>(g.instance.data);
    DPAInstance d = ssc_to_dpa(s);
    ASSERT_TRUE(g.witness.has_value());
    // Singleton stars: the DPA vertex of a star is the star itself.
    PowerSolution p{g.witness->stars};
    EXPECT_TRUE(is_strongly_connected(dpa_induced_graph(d, p.high))) << "k=" << k;
    EXPECT_TRUE(check_feasible(d, p));
  }
}

TEST(Feasibility, StarSubsets) {
  EXPECT_TRUE(check_feasible(triangle(), StarSolution{{0, 1, 2}}));
  EXPECT_FALSE(check_feasible(triangle(), StarSolution{{0, 1}}));
  EXPECT_TRUE(check_cut_feasible(triangle(), StarSolution{{0, 1, 2}}));
  EXPECT_FALSE(check_cut_feasible(triangle(), StarSolution{{0, 1}}));
  EXPECT_FALSE(check_cut_feasible(digon(), StarSolution{{0}}));
  for (int k = 1; k <= 4; ++k) {
    auto t = gen_ssc_tight(k);
    EXPECT_TRUE(check_feasible(std::get<SSCInstance>(t.instance.data), *t.witness));
    EXPECT_EQ(t.witness->cost(), 5 * k + 2);
  }
}

TEST(Feasibility, EdgeSubsets) {
  TwoECSInstance t{testing::c4()};
  EXPECT_TRUE(check_feasible(t, EdgeSolution{{0, 1, 2, 3}}));
  EXPECT_FALSE(check_feasible(t, EdgeSolution{{0, 1, 2}}));
  // Repeated ids count once.
  EXPECT_FALSE(check_feasible(t, EdgeSolution{{0, 0, 1, 2}}));
}

TEST(VertexSets, SortedAndDistinct) { EXPECT_EQ(make_vertex_set({2, 0, 1, 2}), (VertexSet{0, 1, 2})); }

}  // namespace
}  // namespace dualcut
