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

#include "dualcut/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

void check_id(int count, int id, const char* what) {
  if (id < 0 || id >= count) throw std::out_of_range(std::string("unknown ") + what + " id " + std::to_string(id));
}

// Union-find over zero-cost edges.
class Components {
 public:
  explicit Components(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

VertexSet make_vertex_set(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

SSCInstance::SSCInstance(int vertex_count, std::vector<Star> stars) : vertex_count_(vertex_count), stars_(std::move(stars)) {
  if (vertex_count < 1) throw std::invalid_argument("SSCInstance: need at least one vertex");
  for (std::size_t i = 0; i < stars_.size(); ++i) {
    Star& f = stars_[i];
    const std::string tag = "star " + std::to_string(i);
    if (f.source < 0 || f.source >= vertex_count_) throw std::out_of_range(tag + ": source out of range");
    f.sinks = make_vertex_set(std::move(f.sinks));
    if (f.sinks.empty()) throw std::invalid_argument(tag + ": no sinks");
    for (VertexId v : f.sinks) {
      if (v < 0 || v >= vertex_count_) throw std::out_of_range(tag + ": sink out of range");
      if (v == f.source) throw std::invalid_argument(tag + ": self-loop");
    }
  }
}

Digraph SSCInstance::derived_digraph() const {
  std::vector<Arc> arcs;
  for (const Star& f : stars_)
    for (VertexId v : f.sinks) arcs.push_back({f.source, v});
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph(vertex_count_, std::move(arcs));
}

bool SSCInstance::is_bidirected() const {
  Digraph g = derived_digraph();
  for (const Arc& a : g.arcs())
    if (!g.has_arc(a.head, a.tail)) return false;
  return true;
}

DPAInstance::DPAInstance(int vertex_count, std::vector<DPAEdge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw std::invalid_argument("DPAInstance: negative vertex count");
  std::vector<std::pair<int, int>> keys;
  for (const DPAEdge& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      throw std::out_of_range("DPAInstance: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("DPAInstance: self-loop at vertex " + std::to_string(e.u));
    if (e.cost != 0 && e.cost != 1) throw std::invalid_argument("DPAInstance: cost must be 0 or 1");
    keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw std::invalid_argument("DPAInstance: duplicate edge");
}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kTwoEcs:
      return "2ecs";
    case ProblemKind::kMscs:
      return "mscs";
    case ProblemKind::kDpa:
      return "dpa";
    case ProblemKind::kSsc:
      return "ssc";
  }
  return "?";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  if (name == "2ecs") return ProblemKind::kTwoEcs;
  if (name == "mscs") return ProblemKind::kMscs;
  if (name == "dpa") return ProblemKind::kDpa;
  if (name == "ssc") return ProblemKind::kSsc;
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

void require_feasible(const SSCInstance& s) {
  if (!is_strongly_connected(s.derived_digraph()))
    throw InfeasibleInstance("SSC instance: union of stars is not strongly connected");
}

void require_feasible(const DPAInstance& d) {
  std::vector<VertexId> all(d.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  if (!is_strongly_connected(dpa_induced_graph(d, all)))
    throw InfeasibleInstance("DPA instance: not strongly connected even with every vertex at high power");
}

void require_feasible(const TwoECSInstance& t) {
  if (!is_two_edge_connected(t.graph)) throw InfeasibleInstance("2ECS instance: graph is not 2-edge-connected");
}

void require_feasible(const AnyInstance& instance) {
  std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Digraph>) {
          if (!is_strongly_connected(x)) throw InfeasibleInstance("MSCS instance: digraph is not strongly connected");
        } else {
          require_feasible(x);
        }
      },
      instance.data);
}

DpaAsSsc dpa_to_ssc(const DPAInstance& d) {
  require_feasible(d);
  const int n = d.vertex_count();
  Components uf(n);
  for (const DPAEdge& e : d.edges())
    if (e.cost == 0) uf.unite(e.u, e.v);

  DpaAsSsc out;
  out.component.assign(n, -1);
  std::vector<int> comp_of_root(n, -1);
  int comps = 0;
  for (VertexId v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (comp_of_root[r] < 0) comp_of_root[r] = comps++;
    out.component[v] = comp_of_root[r];
  }

  std::vector<std::vector<VertexId>> reach(n);
  for (const DPAEdge& e : d.edges()) {
    VertexId cu = out.component[e.u], cv = out.component[e.v];
    if (cu == cv) continue;
    reach[e.u].push_back(cv);
    reach[e.v].push_back(cu);
  }
  std::vector<Star> stars;
  out.star_of.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (reach[v].empty()) continue;
    out.star_of[v] = static_cast<StarId>(stars.size());
    out.star_owner.push_back(v);
    stars.push_back({out.component[v], make_vertex_set(std::move(reach[v]))});
  }
  out.instance = SSCInstance(std::max(comps, 1), std::move(stars));
  return out;
}

StarSolution to_star_solution(const DpaAsSsc& map, const PowerSolution& p) {
  StarSolution s;
  for (VertexId v : p.high) {
    check_id(static_cast<int>(map.star_of.size()), v, "DPA vertex");
    if (map.star_of[v] >= 0) s.stars.push_back(map.star_of[v]);
  }
  s.stars = make_vertex_set(std::move(s.stars));
  return s;
}

PowerSolution to_power_solution(const DpaAsSsc& map, const StarSolution& s) {
  PowerSolution p;
  for (StarId f : s.stars) {
    check_id(static_cast<int>(map.star_owner.size()), f, "star");
    p.high.push_back(map.star_owner[f]);
  }
  p.high = make_vertex_set(std::move(p.high));
  return p;
}

DPAInstance ssc_to_dpa(const SSCInstance& s) {
  if (!s.is_bidirected()) throw std::invalid_argument("ssc_to_dpa: derived digraph is not bidirected");
  std::vector<DPAEdge> edges;
  std::vector<std::vector<StarId>> by_source(s.vertex_count());
  for (StarId f = 0; f < s.star_count(); ++f) by_source[s.star(f).source].push_back(f);
  for (const auto& group : by_source) {
    const std::size_t g = group.size();
    if (g == 2) edges.push_back({group[0], group[1], 0});
    if (g >= 3)
      for (std::size_t i = 0; i < g; ++i) edges.push_back({group[i], group[(i + 1) % g], 0});
  }
  // For each unordered pair {u,v} with u<v: every star holding uv joins
  // every star holding vu with a cost-one edge.
  const Digraph derived = s.derived_digraph();
  for (const Arc& a : derived.arcs()) {
    if (a.tail > a.head) continue;
    for (StarId f : by_source[a.tail]) {
      if (!std::binary_search(s.star(f).sinks.begin(), s.star(f).sinks.end(), a.head)) continue;
      for (StarId g : by_source[a.head])
        if (std::binary_search(s.star(g).sinks.begin(), s.star(g).sinks.end(), a.tail)) edges.push_back({f, g, 1});
    }
  }
  return DPAInstance(s.star_count(), std::move(edges));
}

SSCInstance mscs_to_ssc(const Digraph& g) {
  if (!is_strongly_connected(g)) throw InfeasibleInstance("mscs_to_ssc: digraph is not strongly connected");
  std::vector<Star> stars;
  stars.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) stars.push_back({a.tail, {a.head}});
  return SSCInstance(std::max(g.vertex_count(), 1), std::move(stars));
}

Digraph dpa_induced_graph(const DPAInstance& d, std::span<const VertexId> high) {
  std::vector<char> is_high(d.vertex_count(), 0);
  for (VertexId v : high) {
    check_id(d.vertex_count(), v, "DPA vertex");
    is_high[v] = 1;
  }
  std::vector<Arc> arcs;
  for (const DPAEdge& e : d.edges()) {
    if (e.cost == 0 || is_high[e.u]) arcs.push_back({e.u, e.v});
    if (e.cost == 0 || is_high[e.v]) arcs.push_back({e.v, e.u});
  }
  return Digraph(d.vertex_count(), std::move(arcs));
}

bool check_feasible(const SSCInstance& s, const StarSolution& solution) {
  std::vector<Arc> arcs;
  for (StarId f : solution.stars) {
    check_id(s.star_count(), f, "star");
    for (VertexId v : s.star(f).sinks) arcs.push_back({s.star(f).source, v});
  }
  return is_strongly_connected(Digraph(s.vertex_count(), std::move(arcs)));
}

bool check_feasible(const TwoECSInstance& t, const EdgeSolution& solution) {
  std::vector<EdgeId> ids = make_vertex_set(solution.edges);
  std::vector<Edge> edges;
  for (EdgeId e : ids) {
    check_id(t.graph.edge_count(), e, "edge");
    edges.push_back(t.graph.edge(e));
  }
  return is_two_edge_connected(Multigraph(t.graph.vertex_count(), std::move(edges)));
}

bool check_feasible(const DPAInstance& d, const PowerSolution& solution) {
  return is_strongly_connected(dpa_induced_graph(d, solution.high));
}

bool check_cut_feasible(const SSCInstance& s, const StarSolution& solution, int exhaustive_limit) {
  const int n = s.vertex_count();
  if (n > exhaustive_limit || n > 30)
    throw LimitExceeded("check_cut_feasible: " + std::to_string(n) + " vertices exceeds the exhaustive limit");
  std::vector<std::uint32_t> sink_mask;
  std::vector<VertexId> source;
  for (StarId f : solution.stars) {
    check_id(s.star_count(), f, "star");
    std::uint32_t m = 0;
    for (VertexId v : s.star(f).sinks) m |= 1u << v;
    sink_mask.push_back(m);
    source.push_back(s.star(f).source);
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t side = 1; side < full; ++side) {
    bool crossed = false;
    for (std::size_t i = 0; i < source.size() && !crossed; ++i)
      crossed = ((side >> source[i]) & 1u) && (sink_mask[i] & ~side & full);
    if (!crossed) return false;
  }
  return true;
}

}  // namespace dualcut
