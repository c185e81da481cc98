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

#include "dualcut/dpa.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

bool on(const std::vector<VertexId>& list, VertexId v) { return std::find(list.begin(), list.end(), v) != list.end(); }

int index_of(const std::vector<VertexId>& list, VertexId v) {
  return static_cast<int>(std::find(list.begin(), list.end(), v) - list.begin());
}

// Non-leaf neighbors of v that are not on the path, ascending.
std::vector<VertexId> fresh_non_leaves(const LiveInstance& li, VertexId v, const std::vector<VertexId>& path) {
  std::vector<VertexId> out;
  for (VertexId u : li.neighbors(v))
    if (!on(path, u) && !is_leaf(li, u)) out.push_back(u);
  return out;
}

// Neighbor of v appearing earliest on the path.
int earliest_neighbor(const LiveInstance& li, VertexId v, const std::vector<VertexId>& path) {
  for (int i = 0; i < static_cast<int>(path.size()); ++i)
    if (li.has_arc(v, path[i])) return i;
  throw std::logic_error("no neighbor on the path");
}

std::vector<VertexId> leaf_sinks(const LiveInstance& li, StarId f) {
  std::vector<VertexId> out;
  for (VertexId v : li.star(f).sinks)
    if (is_leaf(li, v)) out.push_back(v);
  return out;
}

// Leaves adjacent to c that are not on the cycle.
std::vector<VertexId> off_cycle_leaves(const LiveInstance& li, VertexId c, const std::vector<VertexId>& cycle) {
  std::vector<VertexId> out;
  for (VertexId u : li.neighbors(c))
    if (is_leaf(li, u) && !on(cycle, u)) out.push_back(u);
  return out;
}

VertexSet all_but(int n, VertexId v) {
  VertexSet out;
  for (VertexId u = 0; u < n; ++u)
    if (u != v) out.push_back(u);
  return out;
}

PerfectSetChoice two_leaf_star(const LiveInstance& li, const RotationCycle& c, Advisor& advisor) {
  for (VertexId center : {c.v_bar, c.w_bar}) {
    std::vector<StarId> cand;
    for (StarId f : li.stars_from(center))
      if (leaf_sinks(li, f).size() >= 2) cand.push_back(f);
    if (cand.empty()) continue;
    StarId f = cand[advisor.choose(ChoicePoint::kStar, cand.size())];
    std::vector<VertexId> leaves = leaf_sinks(li, f);
    const StarId seed[] = {f};
    return {augment_to_perfect(li, seed, advisor), {{leaves[0]}, {leaves[1]}}, SetKind::kTwoCuts, "two-leaf-star"};
  }
  return {};
}

PerfectSetChoice single_center(const LiveInstance& li, const RotationCycle& c, Advisor& advisor) {
  const VertexId v = c.v_bar, w = c.vertices[1];
  std::vector<VertexId> leaves = off_cycle_leaves(li, v, c.vertices);
  if (leaves.empty()) throw std::logic_error("center without off-cycle leaves");
  const VertexId l = leaves[advisor.choose(ChoicePoint::kLeaf, leaves.size())];
  VertexSet rest = all_but(li.vertex_count(), l);
  std::vector<StarId> joint;
  for (StarId f : li.stars_with_arc(v, l))
    if (li.star(f).sinks == make_vertex_set({l, w})) joint.push_back(f);
  if (!joint.empty()) {
    const StarId seed[] = {joint[advisor.choose(ChoicePoint::kStar, joint.size())]};
    return {augment_to_perfect(li, seed, advisor), {{l}, rest}, SetKind::kTwoCuts, "leaf-and-cycle-star"};
  }
  std::vector<StarId> out_single;
  for (StarId f : li.stars_with_arc(v, l))
    if (li.star(f).sinks.size() == 1) out_single.push_back(f);
  if (out_single.empty()) throw std::logic_error("no singleton star to the leaf");
  std::vector<StarId> back = li.stars_with_arc(l, v);
  std::vector<StarId> q{out_single[advisor.choose(ChoicePoint::kStar, out_single.size())],
                        back[advisor.choose(ChoicePoint::kStarForArc, back.size())]};
  return {q, {{l}, rest}, SetKind::kTwoCuts, "leaf-pair"};
}

PerfectSetChoice leaf_with_cycle_sink(const LiveInstance& li, const RotationCycle& c, Advisor& advisor) {
  const std::vector<VertexId>& cyc = c.vertices;
  const int len = static_cast<int>(cyc.size());
  for (VertexId center : {c.v_bar, c.w_bar}) {
    std::vector<StarId> cand;
    for (StarId f : li.stars_from(center)) {
      const VertexSet& sinks = li.star(f).sinks;
      bool leaf = false, cycle = false;
      for (VertexId u : sinks) {
        if (is_leaf(li, u) && !on(cyc, u)) leaf = true;
        if (on(cyc, u)) cycle = true;
      }
      if (leaf && cycle) cand.push_back(f);
    }
    if (cand.empty()) continue;
    const int dir = advisor.choose(ChoicePoint::kCycleDirection, 2) == 0 ? 1 : -1;
    const int at = index_of(cyc, center);
    auto distance = [&](VertexId u) { return ((index_of(cyc, u) - at) * dir % len + len) % len; };
    int best = std::numeric_limits<int>::max();
    for (StarId f : cand)
      for (VertexId u : li.star(f).sinks)
        if (on(cyc, u)) best = std::min(best, distance(u));
    std::vector<StarId> nearest;
    for (StarId f : cand)
      for (VertexId u : li.star(f).sinks)
        if (on(cyc, u) && distance(u) == best) {
          nearest.push_back(f);
          break;
        }
    const StarId f = nearest[advisor.choose(ChoicePoint::kStar, nearest.size())];
    VertexId l = -1;
    for (VertexId u : li.star(f).sinks)
      if (is_leaf(li, u) && !on(cyc, u)) l = u;
    std::vector<StarId> seed{f};
    // Walk from u (distance best) around to the center.
    for (int d = best; d < len; ++d) {
      VertexId a = cyc[((at + dir * d) % len + len) % len];
      VertexId b = cyc[((at + dir * (d + 1)) % len + len) % len];
      std::vector<StarId> arc_stars = li.stars_with_arc(a, b);
      seed.push_back(arc_stars[advisor.choose(ChoicePoint::kStarForArc, arc_stars.size())]);
    }
    return {augment_to_perfect(li, seed, advisor), {{l}, all_but(li.vertex_count(), l)}, SetKind::kTwoCuts,
            "leaf-star-with-cycle-sink"};
  }
  return {};
}

PerfectSetChoice whole_cycle(const LiveInstance& li, const RotationCycle& c, Advisor& advisor) {
  std::vector<StarId> seed = stars_for_cycle(li, c.vertices, advisor);
  auto side = [&](VertexId center) {
    std::vector<VertexId> s = off_cycle_leaves(li, center, c.vertices);
    s.push_back(center);
    return make_vertex_set(std::move(s));
  };
  return {augment_to_perfect(li, seed, advisor), {side(c.v_bar), side(c.w_bar)}, SetKind::kTwoCuts, "cycle"};
}

}  // namespace

bool is_leaf(const LiveInstance& li, VertexId v) { return li.neighbors(v).size() == 1; }

RotationCycle build_rotation_cycle(const LiveInstance& li, Advisor& advisor) {
  if (li.vertex_count() < 3) throw PreconditionError("build_rotation_cycle: fewer than 3 vertices");
  if (!li.is_bidirected()) throw PreconditionError("build_rotation_cycle: digraph is not bidirected");

  std::vector<Arc> starts;
  for (const Arc& a : li.digraph().arcs())
    if (!is_leaf(li, a.head)) starts.push_back(a);
  std::sort(starts.begin(), starts.end());
  if (starts.empty()) throw PreconditionError("build_rotation_cycle: no non-leaf vertex");
  const Arc first = starts[advisor.choose(ChoicePoint::kStartArc, starts.size())];
  std::vector<VertexId> path{first.tail, first.head};

  while (true) {
    const VertexId v_bar = path.back();
    if (std::vector<VertexId> ext = fresh_non_leaves(li, v_bar, path); !ext.empty()) {
      path.push_back(ext[advisor.choose(ChoicePoint::kExtendPath, ext.size())]);
      continue;
    }
    const int w = earliest_neighbor(li, v_bar, path);
    const VertexId w_bar = path[w + 1];
    if (std::vector<VertexId> ext = fresh_non_leaves(li, w_bar, path); !ext.empty()) {
      // Use the arc w -> v_bar in place of w -> w_bar, then leave from w_bar.
      std::reverse(path.begin() + w + 1, path.end());
      path.push_back(ext[advisor.choose(ChoicePoint::kRotate, ext.size())]);
      continue;
    }
    const int x = earliest_neighbor(li, w_bar, path);
    RotationCycle out;
    out.v_bar = v_bar;
    out.w_bar = w_bar;
    out.vertices.push_back(v_bar);
    for (int i = w; i >= x; --i) out.vertices.push_back(path[i]);
    for (int i = w + 1; i + 1 < static_cast<int>(path.size()); ++i) out.vertices.push_back(path[i]);
    return out;
  }
}

PerfectSetChoice find_perfect_two_cuts(const LiveInstance& li, Advisor& advisor) {
  const int n = li.vertex_count();
  if (n < 2) throw PreconditionError("find_perfect_two_cuts: fewer than 2 vertices");
  if (!li.is_bidirected()) throw PreconditionError("find_perfect_two_cuts: digraph is not bidirected");
  if (n == 2) {
    const VertexId pair[] = {0, 1};
    return {stars_for_cycle(li, pair, advisor), {{0}, {1}}, SetKind::kTwoCuts, "two-vertices"};
  }
  RotationCycle c = build_rotation_cycle(li, advisor);
  if (PerfectSetChoice r = two_leaf_star(li, c, advisor); !r.stars.empty()) return r;
  if (c.v_bar == c.w_bar) return single_center(li, c, advisor);
  if (PerfectSetChoice r = leaf_with_cycle_sink(li, c, advisor); !r.stars.empty()) return r;
  return whole_cycle(li, c, advisor);
}

RunReport approx_dpa(const SSCInstance& s, Advisor& advisor) {
  require_feasible(s);
  if (!s.is_bidirected()) throw PreconditionError("approx_dpa: derived digraph is not bidirected");
  auto records = contract_until_single(LiveInstance(s), find_perfect_two_cuts, advisor);
  return make_star_report(s, records, "bidirected", advisor);
}

RunReport approx_dpa(const DPAInstance& d, Advisor& advisor) {
  require_feasible(d);
  DpaAsSsc map = dpa_to_ssc(d);
  RunReport report = approx_dpa(map.instance, advisor);
  PowerSolution power = to_power_solution(map, StarSolution{report.selected});
  report.problem = ProblemKind::kDpa;
  report.selected = power.high;
  std::sort(report.selected.begin(), report.selected.end());
  report.cost = power.cost();
  report.feasible = check_feasible(d, power);
  report.certificate = lift_to_dpa(map, report.certificate);
  for (IterationRecord& it : report.iterations) {
    it.cuts = lift_to_dpa(map, DualCertificate{CertificateKind::kSsc, it.cuts}).cuts;
    for (int& f : it.selected) f = map.star_owner[f];
    std::sort(it.selected.begin(), it.selected.end());
  }
  return report;
}

}  // namespace dualcut
