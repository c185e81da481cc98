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

#include "dualcut/ssc.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

using Path = std::vector<VertexId>;

// Shortest path from -> to with at least two arcs whose internal vertices
// avoid `blocked` (from and to are never internal). Empty if none.
Path nontrivial_path(const LiveInstance& li, VertexId from, VertexId to, const std::vector<char>& blocked) {
  const int n = li.vertex_count();
  std::vector<VertexId> parent(n, -2);
  std::deque<VertexId> queue;
  for (VertexId x : li.out_neighbors(from)) {
    if (blocked[x] || x == to || x == from) continue;
    parent[x] = from;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (li.has_arc(x, to)) {
      Path out{to};
      for (VertexId y = x; y != from; y = parent[y]) out.push_back(y);
      out.push_back(from);
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (VertexId y : li.out_neighbors(x)) {
      if (blocked[y] || y == to || y == from || parent[y] != -2) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return {};
}

std::vector<char> mask(int n, std::initializer_list<VertexId> vs) {
  std::vector<char> m(n, 0);
  for (VertexId v : vs) m[v] = 1;
  return m;
}

std::vector<char> mask(int n, const std::vector<VertexId>& vs) {
  std::vector<char> m(n, 0);
  for (VertexId v : vs) m[v] = 1;
  return m;
}

// Vertices reachable from u without arcs joining two cycle vertices.
VertexSet reach_off_cycle(const LiveInstance& li, VertexId u, const std::vector<VertexId>& cycle) {
  const Digraph& g = li.digraph();
  std::vector<char> in = mask(li.vertex_count(), cycle);
  return reachable_avoiding(g, u, [&](ArcId a) { return in[g.arc(a).tail] && in[g.arc(a).head]; });
}

bool has_external_sink(const LiveInstance& li, StarId f, const std::vector<char>& inside) {
  for (VertexId v : li.star(f).sinks)
    if (!inside[v]) return true;
  return false;
}

// One star per arc of `cycle` except arc `skip`, which is served by `f`.
std::vector<StarId> cycle_with(const LiveInstance& li, const std::vector<VertexId>& cycle, std::size_t skip, StarId f,
                               Advisor& advisor) {
  std::vector<StarId> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i == skip) {
      out.push_back(f);
      continue;
    }
    std::vector<StarId> cand = li.stars_with_arc(cycle[i], cycle[(i + 1) % cycle.size()]);
    out.push_back(cand[advisor.choose(ChoicePoint::kStarForArc, cand.size())]);
  }
  return out;
}

// A star on some arc of `cycle` with a sink off the cycle, completed by one
// star per other arc and augmented.
std::optional<PerfectSetChoice> grow_from_escaping_star(const LiveInstance& li, const std::vector<VertexId>& cycle,
                                                        const char* rule, Advisor& advisor) {
  std::vector<char> inside = mask(li.vertex_count(), cycle);
  std::vector<std::pair<std::size_t, StarId>> cand;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    for (StarId f : li.stars_with_arc(cycle[i], cycle[(i + 1) % cycle.size()]))
      if (has_external_sink(li, f, inside)) cand.emplace_back(i, f);
  if (cand.empty()) return std::nullopt;
  auto [arc, f] = cand[advisor.choose(ChoicePoint::kStar, cand.size())];
  std::vector<StarId> seed = cycle_with(li, cycle, arc, f, advisor);
  return PerfectSetChoice{augment_to_perfect(li, seed, advisor), {{cycle[0]}}, SetKind::kBigOneCut, rule};
}

PerfectSetChoice long_cycle(const LiveInstance& li, const std::vector<VertexId>& cycle, Advisor& advisor) {
  std::vector<StarId> seed = stars_for_cycle(li, cycle, advisor);
  return {augment_to_perfect(li, seed, advisor), {{cycle[0]}}, SetKind::kBigOneCut, "long-cycle"};
}

Path interior(const Path& p) { return p.size() <= 2 ? Path{} : Path(p.begin() + 1, p.end() - 1); }

// Returns a choice, or replaces `cycle` with a longer one and returns nullopt.
std::optional<PerfectSetChoice> triangle(const LiveInstance& li, std::vector<VertexId>& cycle, Advisor& advisor) {
  const int n = li.vertex_count();
  const VertexId v = cycle[0], u1 = cycle[1], u2 = cycle[2];
  if (auto r = grow_from_escaping_star(li, cycle, "triangle-escaping-star", advisor)) return r;

  const std::vector<char> on_cycle = mask(n, cycle);
  if (Path p = nontrivial_path(li, u1, u2, on_cycle); !p.empty()) {
    Path mid = interior(p);
    cycle = {v, u1};
    cycle.insert(cycle.end(), mid.begin(), mid.end());
    cycle.push_back(u2);
    return std::nullopt;
  }
  if (Path p = nontrivial_path(li, u2, v, on_cycle); !p.empty()) {
    Path mid = interior(p);
    cycle = {v, u1, u2};
    cycle.insert(cycle.end(), mid.begin(), mid.end());
    return std::nullopt;
  }

  const Path p21 = nontrivial_path(li, u2, u1, on_cycle);
  const Path p1v = nontrivial_path(li, u1, v, on_cycle);
  const bool to_u1 = !p21.empty() || li.has_arc(u2, u1);
  const bool to_v = !p1v.empty() || li.has_arc(u1, v);
  const bool v_to_u2 = li.has_arc(v, u2);
  if (to_u1 && to_v && v_to_u2 && (!p21.empty() || !p1v.empty())) {
    Path a = interior(p21), b = interior(p1v);
    std::vector<char> seen = mask(n, a);
    for (VertexId x : b)
      if (seen[x]) throw std::logic_error("triangle: detour paths overlap");
    cycle = {v, u2};
    cycle.insert(cycle.end(), a.begin(), a.end());
    cycle.push_back(u1);
    cycle.insert(cycle.end(), b.begin(), b.end());
    return std::nullopt;
  }

  auto pair = [&](VertexSet second, const char* rule) {
    return PerfectSetChoice{stars_for_cycle(li, cycle, advisor), {{v}, std::move(second)}, SetKind::kTwoCuts, rule};
  };
  if (!to_u1) return pair(reach_off_cycle(li, u2, cycle), "triangle-no-return-to-u1");
  if (!to_v) return pair(reach_off_cycle(li, u1, cycle), "triangle-no-return-to-v");
  if (!v_to_u2) {
    VertexSet side = reach_off_cycle(li, u1, cycle);
    side.push_back(v);
    return pair(make_vertex_set(std::move(side)), "triangle-one-way");
  }
  const std::vector<VertexId> reversed{v, u2, u1};
  if (auto r = grow_from_escaping_star(li, reversed, "triangle-reverse-escaping-star", advisor)) return r;
  return pair(reach_off_cycle(li, u1, cycle), "triangle-bidirected");
}

std::optional<PerfectSetChoice> digon(const LiveInstance& li, std::vector<VertexId>& cycle, Advisor& advisor) {
  const int n = li.vertex_count();
  const VertexId v = cycle[0], u1 = cycle[1];
  const std::vector<char> pair_mask = mask(n, {v, u1});
  if (Path p = nontrivial_path(li, u1, v, pair_mask); !p.empty()) {
    cycle = {v};
    cycle.insert(cycle.end(), p.begin(), p.end() - 1);
    return std::nullopt;
  }

  std::vector<StarId> f1_cand;
  for (StarId f : li.stars_with_arc(u1, v))
    if (li.star(f).sinks.size() >= 2) f1_cand.push_back(f);
  VertexSet rest;
  for (VertexId x = 0; x < n; ++x)
    if (x != v) rest.push_back(x);
  if (f1_cand.empty()) return PerfectSetChoice{stars_for_cycle(li, cycle, advisor), {{v}, rest}, SetKind::kTwoCuts, "digon"};

  const StarId f1 = f1_cand[advisor.choose(ChoicePoint::kStar, f1_cand.size())];
  std::vector<VertexId> others;
  for (VertexId x : li.star(f1).sinks)
    if (x != v) others.push_back(x);
  const VertexId u2 = others[advisor.choose(ChoicePoint::kSink, others.size())];

  if (Path p = nontrivial_path(li, u2, u1, pair_mask); !p.empty()) {
    std::vector<StarId> back = li.stars_with_arc(v, u1);
    std::vector<StarId> seed{back[advisor.choose(ChoicePoint::kStarForArc, back.size())], f1};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      std::vector<StarId> cand = li.stars_with_arc(p[i], p[i + 1]);
      seed.push_back(cand[advisor.choose(ChoicePoint::kStarForArc, cand.size())]);
    }
    return PerfectSetChoice{augment_to_perfect(li, seed, advisor), {{v}}, SetKind::kBigOneCut, "digon-detour"};
  }

  const Digraph& g = li.digraph();
  VertexSet r = reachable_avoiding(g, u2, [&](ArcId a) { return g.arc(a).tail == u2 && g.arc(a).head == u1; });
  std::vector<StarId> f2_cand;
  for (StarId f : li.stars_with_arc(u2, u1))
    if (li.star(f).sinks.size() >= 2) f2_cand.push_back(f);
  if (!f2_cand.empty()) {
    const StarId seed[] = {f1, f2_cand[advisor.choose(ChoicePoint::kStar, f2_cand.size())]};
    return PerfectSetChoice{augment_to_perfect(li, seed, advisor), {{v}}, SetKind::kBigOneCut, "digon-double-fan"};
  }
  const StarId seed[] = {f1};
  return PerfectSetChoice{augment_to_perfect(li, seed, advisor), {{v}, r}, SetKind::kTwoCuts, "digon-fan"};
}

}  // namespace

SimpleCycle build_simple_cycle(const LiveInstance& li, Advisor& advisor) {
  if (li.vertex_count() < 2) throw PreconditionError("build_simple_cycle: fewer than 2 vertices");
  const std::vector<Arc>& arcs = li.digraph().arcs();  // sorted
  if (arcs.empty()) throw PreconditionError("build_simple_cycle: no arcs");
  const Arc first = arcs[advisor.choose(ChoicePoint::kStartArc, arcs.size())];
  std::vector<VertexId> path{first.tail, first.head};
  std::vector<int> position(li.vertex_count(), -1);
  position[first.tail] = 0;
  position[first.head] = 1;
  while (true) {
    std::vector<VertexId> ext;
    for (VertexId u : li.out_neighbors(path.back()))
      if (position[u] < 0) ext.push_back(u);
    if (ext.empty()) break;
    VertexId u = ext[advisor.choose(ChoicePoint::kExtendPath, ext.size())];
    position[u] = static_cast<int>(path.size());
    path.push_back(u);
  }
  int w = static_cast<int>(path.size());
  for (VertexId u : li.out_neighbors(path.back())) w = std::min(w, position[u]);
  return {std::vector<VertexId>(path.begin() + w, path.end()), path.back()};
}

PerfectSetChoice find_perfect_set(const LiveInstance& li, Advisor& advisor) {
  SimpleCycle sc = build_simple_cycle(li, advisor);
  // v_bar first, then the cycle order.
  std::vector<VertexId> cycle{sc.v_bar};
  cycle.insert(cycle.end(), sc.vertices.begin(), sc.vertices.end() - 1);
  while (true) {
    if (cycle.size() >= 4) return long_cycle(li, cycle, advisor);
    std::optional<PerfectSetChoice> r = cycle.size() == 3 ? triangle(li, cycle, advisor) : digon(li, cycle, advisor);
    if (r) return *r;
  }
}

RunReport approx_ssc(const SSCInstance& s, Advisor& advisor) {
  require_feasible(s);
  auto records = contract_until_single(LiveInstance(s), find_perfect_set, advisor);
  return make_star_report(s, records, "general", advisor);
}

}  // namespace dualcut
