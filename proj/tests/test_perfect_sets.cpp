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

#include "dualcut/error.hpp"
#include "dualcut/generators.hpp"
#include "dualcut/oracles.hpp"
#include "dualcut/perfect_sets.hpp"
#include "test_util.hpp"

namespace dualcut {
namespace {

using testing::digon;
using testing::triangle;
using testing::split_star;
using testing::set1;
using testing::star1;

// Five stars around 1->2->3->4->5->1, where the star at 3 also reaches the
// outside vertex 6; 6->1 keeps the instance strongly connected.
SSCInstance five_with_escape() {
  return SSCInstance(6, {star1(1, {2}), star1(2, {3}), star1(3, {4, 6}), star1(4, {5}), star1(5, {1}), star1(6, {1})});
}

TEST(Quasiperfect, Triangle) {
  LiveInstance li(triangle());
  std::vector<StarId> all{0, 1, 2}, two{0, 1};
  EXPECT_TRUE(is_quasiperfect(li, all));
  EXPECT_FALSE(is_quasiperfect(li, two));
  std::vector<StarId> repeated_source{0, 0};
  EXPECT_FALSE(is_quasiperfect(li, repeated_source));
}

TEST(Quasiperfect, ExternalSinkIgnored) {
  LiveInstance li(five_with_escape());
  std::vector<StarId> five{0, 1, 2, 3, 4};
  EXPECT_TRUE(is_quasiperfect(li, five));
  EXPECT_FALSE(is_perfect(li, five));
}

TEST(Perfect, SmallCases) {
  std::vector<StarId> all{0, 1, 2}, pair{0, 1};
  EXPECT_TRUE(is_perfect(LiveInstance(triangle()), all));
  EXPECT_TRUE(is_perfect(LiveInstance(digon()), pair));
}

TEST(Augment, AlreadyPerfectIsFixedPoint) {
  DefaultAdvisor a;
  std::vector<StarId> all{0, 1, 2};
  EXPECT_EQ(augment_to_perfect(LiveInstance(triangle()), all, a), all);
}

TEST(Augment, ResolvesExternalSinks) {
  DefaultAdvisor a;
  std::vector<StarId> q{0};
  EXPECT_EQ(augment_to_perfect(LiveInstance(split_star()), q, a), (std::vector<StarId>{0, 1, 2}));
}

TEST(Augment, LongPathBack) {
  DefaultAdvisor a;
  std::vector<StarId> five{0, 1, 2, 3, 4};
  std::vector<StarId> out = augment_to_perfect(LiveInstance(five_with_escape()), five, a);
  EXPECT_EQ(out, (std::vector<StarId>{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(is_perfect(LiveInstance(five_with_escape()), out));
}

// On bidirected instances each external sink is resolved by one star
// holding the reverse arc.
TEST(Augment, BidirectedUsesReverseArcs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = gen_random_bidirected(6, 0.5, 1, seed);
    LiveInstance li(std::get<SSCInstance>(g.instance.data));
    for (StarId f : li.live_stars()) {
      std::vector<StarId> q{f};
      RandomAdvisor a(seed);
      std::vector<StarId> out = augment_to_perfect(li, q, a);
      ASSERT_EQ(out.size(), 2u) << "seed " << seed;
      StarId back = out[0] == f ? out[1] : out[0];
      EXPECT_EQ(li.star(back).source, li.star(f).sinks.front());
      EXPECT_EQ(li.star(back).sinks, (VertexSet{li.star(f).source}));
    }
  }
}

TEST(InternalCuts, DegenerateAndTriangle) {
  LiveInstance one(digon());
  std::vector<StarId> pair{0, 1};
  VertexSet c1 = set1({1}), c2 = set1({2});
  EXPECT_TRUE(is_internal_cut(one, pair, c1));
  EXPECT_TRUE(is_internal_cut(one, pair, c2));
  EXPECT_TRUE(are_star_disjoint(one, c1, c2));

  LiveInstance tri(triangle());
  std::vector<StarId> all{0, 1, 2};
  VertexSet c3 = set1({3});
  EXPECT_TRUE(is_internal_cut(tri, all, c3));
  std::vector<StarId> two{0, 1};
  // s3 crosses {3} and its source is outside source({s1, s2}).
  EXPECT_FALSE(is_internal_cut(tri, two, c3));
}

// A crossing star has its source inside the cut, so vertex-disjoint cuts
// never share a crossing star.
TEST(InternalCuts, VertexDisjointCutsAreStarDisjoint) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = gen_random_ssc(6, 1.0, 3, seed);
    LiveInstance li(std::get<SSCInstance>(g.instance.data));
    const int n = li.vertex_count();
    for (unsigned ma = 1; ma + 1 < (1u << n); ++ma)
      for (unsigned mb = 1; mb + 1 < (1u << n); ++mb) {
        if (ma & mb) continue;
        VertexSet ca, cb;
        for (VertexId v = 0; v < n; ++v) {
          if (ma >> v & 1) ca.push_back(v);
          if (mb >> v & 1) cb.push_back(v);
        }
        EXPECT_TRUE(are_star_disjoint(li, ca, cb));
      }
  }
}

TEST(Contract, WholeTriangle) {
  std::vector<StarId> all{0, 1, 2};
  LiveInstance c = contract_perfect(LiveInstance(triangle()), all);
  EXPECT_EQ(c.vertex_count(), 1);
  EXPECT_TRUE(c.live_stars().empty());
  for (StarId f : all) EXPECT_FALSE(c.is_live(f));
}

TEST(Contract, DegenerateDigon) {
  std::vector<StarId> pair{0, 1};
  EXPECT_EQ(contract_perfect(LiveInstance(digon()), pair).vertex_count(), 1);
}

TEST(Contract, RejectsNonPerfect) {
  std::vector<StarId> q{0};
  EXPECT_THROW(contract_perfect(LiveInstance(split_star()), q), PreconditionError);
}

TEST(Contract, TightFamilyFirstCycle) {
  // vbar = 1, wbar = 2, u1 = 3, u2 = 4, l1 = 5 (1-based).
  auto g = gen_dpa_tight(1);
  LiveInstance li(std::get<SSCInstance>(g.instance.data));
  DefaultAdvisor a;
  VertexSet cycle{0, 3, 1, 2};
  std::vector<StarId> q = stars_for_cycle(li, cycle, a);
  ASSERT_EQ(q.size(), 4u);
  ASSERT_TRUE(is_perfect(li, q));
  LiveInstance c = contract_perfect(li, q);
  EXPECT_EQ(c.vertex_count(), 2);
  // l1 keeps its two arcs to u1 and u2 and receives both reverse arcs, so
  // four singleton stars stay live over the two remaining vertices.
  EXPECT_EQ(c.live_stars().size(), 4u);
  EXPECT_EQ(c.digraph().arc_count(), 2);
  EXPECT_EQ(c.lift(VertexSet{c.partition()[4]}).side, (VertexSet{4}));
  for (StarId f : q) EXPECT_FALSE(c.is_live(f));
}

TEST(EnumerateInternalCuts, SmallCases) {
  std::vector<StarId> pair{0, 1};
  auto one = enumerate_internal_cuts(LiveInstance(digon()), pair);
  EXPECT_NE(std::find(one.begin(), one.end(), set1({1})), one.end());
  EXPECT_NE(std::find(one.begin(), one.end(), set1({2})), one.end());

  std::vector<StarId> all{0, 1, 2};
  EXPECT_EQ(enumerate_internal_cuts(LiveInstance(triangle()), all).size(), 6u);

  // With only F = 1->{2,3}, every cut F crosses is excluded.
  std::vector<StarId> partial{0};
  auto cuts = enumerate_internal_cuts(LiveInstance(split_star()), partial);
  for (const VertexSet& c : cuts) EXPECT_FALSE(std::binary_search(c.begin(), c.end(), 0));
}

TEST(ValidateChoice, DetectsBrokenContracts) {
  LiveInstance tri(triangle());
  PerfectSetChoice ok{{0, 1, 2}, {set1({3}), set1({2})}, SetKind::kTwoCuts, "test"};
  EXPECT_NO_THROW(validate_choice(tri, ok));
  PerfectSetChoice overlapping{{0, 1, 2}, {set1({3}), set1({3})}, SetKind::kTwoCuts, "test"};
  EXPECT_THROW(validate_choice(tri, overlapping), std::logic_error);
  PerfectSetChoice one_cut{{0, 1, 2}, {set1({3})}, SetKind::kTwoCuts, "test"};
  EXPECT_THROW(validate_choice(tri, one_cut), std::logic_error);
  PerfectSetChoice small_big{{0, 1, 2}, {set1({3})}, SetKind::kBigOneCut, "test"};
  EXPECT_THROW(validate_choice(tri, small_big), std::logic_error);
}

}  // namespace
}  // namespace dualcut
