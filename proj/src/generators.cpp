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

#include "dualcut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "dualcut/dpa.hpp"
#include "dualcut/ssc.hpp"

namespace dualcut {
namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

void require_random(int n, double factor) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(factor >= 0) || !std::isfinite(factor)) throw std::invalid_argument("extra factor must be finite and nonnegative");
}

// Replays `prefix` through the algorithm and returns every decision it
// made, so the shipped script never runs dry.
template <class Run>
AdviceScript complete_script(std::vector<std::size_t> prefix, Run run) {
  ScriptedAdvisor advisor(AdviceScript{std::move(prefix)});
  run(advisor);
  return AdviceScript{advisor.history()};
}

// Singleton stars in sorted arc order; returns star ids of `cycle` arcs.
std::vector<StarId> cycle_stars(const std::vector<Arc>& sorted_arcs, const std::vector<VertexId>& cycle) {
  std::vector<StarId> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Arc a{cycle[i], cycle[(i + 1) % cycle.size()]};
    auto it = std::lower_bound(sorted_arcs.begin(), sorted_arcs.end(), a);
    if (it == sorted_arcs.end() || !(*it == a)) throw std::logic_error("witness arc missing");
    out.push_back(static_cast<StarId>(it - sorted_arcs.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void shuffle(std::vector<VertexId>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

std::vector<VertexId> permutation(int n, std::mt19937_64& rng) {
  std::vector<VertexId> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  shuffle(p, rng);
  return p;
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(uniform_below(rng, 1000000)) < std::llround(p * 1e6);
}

int extra_count(int n, double factor) { return static_cast<int>(std::llround(factor * n)); }

// Splits each vertex's out-neighbors into stars of at most `fan` sinks and,
// for fan > 1, adds overlapping stars over random subsets.
std::vector<Star> make_stars(int n, const std::vector<VertexSet>& out, int fan, std::mt19937_64& rng) {
  if (fan < 1) throw std::invalid_argument("max star fan must be at least 1");
  std::vector<Star> stars;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> rest = out[v];
    shuffle(rest, rng);
    std::size_t at = 0;
    while (at < rest.size()) {
      std::size_t take = std::min<std::size_t>(1 + uniform_below(rng, static_cast<std::uint64_t>(fan)), rest.size() - at);
      stars.push_back({v, make_vertex_set({rest.begin() + at, rest.begin() + at + take})});
      at += take;
    }
  }
  if (fan > 1) {
    const int extra = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n / 2 + 1)));
    for (int i = 0; i < extra; ++i) {
      VertexId v = static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      if (out[v].size() < 2) continue;
      std::vector<VertexId> pool = out[v];
      shuffle(pool, rng);
      std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(fan), pool.size());
      std::size_t size = 2 + uniform_below(rng, hi - 1);
      stars.push_back({v, make_vertex_set({pool.begin(), pool.begin() + size})});
    }
  }
  return stars;
}

// Random spanning tree on a random vertex order plus `extra` new pairs.
std::set<std::pair<VertexId, VertexId>> tree_plus(int n, int extra, std::mt19937_64& rng) {
  std::set<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> p = permutation(n, rng);
  for (int i = 1; i < n; ++i) {
    VertexId a = p[i], b = p[uniform_below(rng, static_cast<std::uint64_t>(i))];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  for (int i = 0; i < extra && edges.size() < max_edges; ++i) {
    while (true) {
      VertexId a = static_cast<VertexId>(uniform_below(rng, n)), b = static_cast<VertexId>(uniform_below(rng, n));
      if (a == b) continue;
      if (edges.insert({std::min(a, b), std::max(a, b)}).second) break;
    }
  }
  return edges;
}

}  // namespace

GeneratedInstance gen_dpa_tight(int k) {
  require_k(k);
  const int n = 2 * k + 3;
  const VertexId v_bar = 0, w_bar = 1;
  auto u = [&](int i) { return 1 + i; };      // i = 1..k+1
  auto l = [&](int i) { return k + 2 + i; };  // i = 1..k
  std::set<std::pair<VertexId, VertexId>> edges;
  auto add = [&](VertexId a, VertexId b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  add(v_bar, u(k + 1));
  add(w_bar, u(k));
  std::vector<VertexId> outer{v_bar}, hamiltonian{v_bar};
  for (int i = 1; i <= k + 1; ++i) outer.push_back(u(i));
  outer.push_back(w_bar);
  for (int i = 1; i <= k; ++i) {
    hamiltonian.push_back(u(i));
    hamiltonian.push_back(l(i));
  }
  hamiltonian.push_back(u(k + 1));
  hamiltonian.push_back(w_bar);
  for (const auto* cyc : {&outer, &hamiltonian})
    for (std::size_t i = 0; i < cyc->size(); ++i) add((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]);

  std::vector<Arc> arcs;
  for (auto [a, b] : edges) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  }
  std::sort(arcs.begin(), arcs.end());
  SSCInstance s = mscs_to_ssc(Digraph(n, arcs));

  GeneratedInstance out;
  out.labels = {"vbar", "wbar"};
  for (int i = 1; i <= k + 1; ++i) out.labels.push_back("u" + std::to_string(i));
  for (int i = 1; i <= k; ++i) out.labels.push_back("l" + std::to_string(i));
  // Start the path on u_{k+1} -> w_bar (every vertex is a non-leaf, so the
  // start candidates are all arcs), then step from w_bar to u_k rather
  // than v_bar.
  const Arc start{u(k + 1), w_bar};
  const auto start_index = static_cast<std::size_t>(std::lower_bound(arcs.begin(), arcs.end(), start) - arcs.begin());
  out.advice = complete_script({start_index, 1}, [&](Advisor& a) { approx_dpa(s, a); });
  out.expected = ExpectedCosts{3 * k + 3, 2 * k + 3};
  out.witness = StarSolution{cycle_stars(arcs, hamiltonian)};
  out.instance = AnyInstance::ssc(std::move(s));
  return out;
}

GeneratedInstance gen_ssc_tight(int k) {
  require_k(k);
  using Named = std::pair<std::string, std::string>;
  // T_1: cycles abcdxyz and yxca.
  std::vector<Named> arcs{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "x"}, {"x", "y"}, {"y", "z"},
                          {"z", "a"}, {"y", "x"}, {"x", "c"}, {"c", "a"}, {"a", "y"}};
  std::vector<std::string> tour{"a", "b", "c", "d", "x", "y", "z"};
  std::string c = "c", d = "d", x = "x", y = "y";
  for (int j = 2; j <= k; ++j) {
    const std::string s = std::to_string(j);
    const std::string a2 = "a" + s, b2 = "b" + s, c2 = "c" + s, d2 = "d" + s, x2 = "x" + s, y2 = "y" + s;
    std::erase_if(arcs, [&](const Named& e) { return e.first == x || e.second == x; });
    for (Named e : std::vector<Named>{{a2, c}, {d, a2}, {y2, y}, {y, y2}, {a2, b2}, {b2, c2}, {c2, d2}, {d2, x2},
                                      {x2, y2}, {y2, x2}, {x2, c2}, {c2, a2}, {a2, y2}})
      arcs.push_back(e);
    auto at = std::find(tour.begin(), tour.end(), x);
    at = tour.erase(at);
    tour.insert(at, {a2, b2, c2, d2, x2, y2});
    c = c2, d = d2, x = x2, y = y2;
  }

  // Innermost block first, each block ordered c, a, y, (x), d, b, so that
  // after every block collapses onto its c the next block's c->a arc sits
  // right after the two arcs leaving the supervertex.
  std::vector<std::string> order;
  for (int j = k; j >= 1; --j) {
    const std::string s = j == 1 ? "" : std::to_string(j);
    for (const char* base : {"c", "a", "y", "x", "d", "b"}) {
      if (std::string(base) == "x" && j != k) continue;
      order.push_back(base + s);
    }
    if (j == 1) order.push_back("z");
  }
  std::map<std::string, VertexId> id;
  for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<VertexId>(i);
  std::vector<Arc> numbered;
  for (const auto& [t, h] : arcs) numbered.push_back({id.at(t), id.at(h)});
  std::sort(numbered.begin(), numbered.end());
  const int n = static_cast<int>(order.size());
  SSCInstance s = mscs_to_ssc(Digraph(n, numbered));

  // Per level: start arc, two extensions, then the two (three on the last
  // level) digons. The innermost level starts on the first arc; outer
  // levels skip the supervertex's two out-arcs.
  std::vector<std::size_t> prefix;
  for (int j = k; j >= 1; --j) {
    prefix.insert(prefix.end(), {j == k ? std::size_t{0} : std::size_t{2}, 0, 0, 0, 0});
    if (j == 1) prefix.push_back(0);
  }

  GeneratedInstance out;
  out.labels = order;
  out.advice = complete_script(prefix, [&](Advisor& a) { approx_ssc(s, a); });
  out.expected = ExpectedCosts{8 * k + 2, 5 * k + 2};
  std::vector<VertexId> tour_ids;
  for (const std::string& v : tour) tour_ids.push_back(id.at(v));
  out.witness = StarSolution{cycle_stars(numbered, tour_ids)};
  out.instance = AnyInstance::ssc(std::move(s));
  return out;
}

GeneratedInstance gen_random_ssc(int n, double extra_arc_factor, int max_star_fan, std::uint64_t seed) {
  require_random(n, extra_arc_factor);
  std::mt19937_64 rng(seed);
  std::vector<VertexId> p = permutation(n, rng);
  std::set<std::pair<VertexId, VertexId>> arcs;
  for (int i = 0; i < n; ++i) arcs.insert({p[i], p[(i + 1) % n]});
  const std::size_t max_arcs = static_cast<std::size_t>(n) * (n - 1);
  const int extra = extra_count(n, extra_arc_factor);
  for (int i = 0; i < extra && arcs.size() < max_arcs; ++i) {
    while (true) {
      VertexId a = static_cast<VertexId>(uniform_below(rng, n)), b = static_cast<VertexId>(uniform_below(rng, n));
      if (a != b && arcs.insert({a, b}).second) break;
    }
  }
  std::vector<VertexSet> out(n);
  for (auto [a, b] : arcs) out[a].push_back(b);
  GeneratedInstance g;
  g.instance = AnyInstance::ssc(SSCInstance(n, make_stars(n, out, max_star_fan, rng)));
  return g;
}

GeneratedInstance gen_random_bidirected(int n, double extra_edge_factor, int max_star_fan, std::uint64_t seed) {
  require_random(n, extra_edge_factor);
  std::mt19937_64 rng(seed);
  auto edges = tree_plus(n, extra_count(n, extra_edge_factor), rng);
  std::vector<VertexSet> out(n);
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    out[b].push_back(a);
  }
  for (VertexSet& o : out) o = make_vertex_set(std::move(o));
  GeneratedInstance g;
  g.instance = AnyInstance::ssc(SSCInstance(n, make_stars(n, out, max_star_fan, rng)));
  return g;
}

GeneratedInstance gen_random_2ecs(int n, double extra_edge_factor, std::uint64_t seed) {
  require_random(n, extra_edge_factor);
  std::mt19937_64 rng(seed);
  std::vector<VertexId> p = permutation(n, rng);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({p[i], p[(i + 1) % n]});
  const int extra = extra_count(n, extra_edge_factor);
  for (int i = 0; i < extra; ++i) {
    while (true) {
      VertexId a = static_cast<VertexId>(uniform_below(rng, n)), b = static_cast<VertexId>(uniform_below(rng, n));
      if (a == b) continue;
      edges.push_back({a, b});
      break;
    }
  }
  GeneratedInstance g;
  g.instance = AnyInstance::two_ecs(Multigraph(n, std::move(edges)));
  return g;
}

GeneratedInstance gen_random_dpa(int n, double zero_cost_prob, std::uint64_t seed, double extra_edge_factor) {
  require_random(n, extra_edge_factor);
  if (!(zero_cost_prob >= 0 && zero_cost_prob <= 1)) throw std::invalid_argument("zero cost probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  auto pairs = tree_plus(n, extra_count(n, extra_edge_factor), rng);
  std::vector<DPAEdge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, coin(rng, zero_cost_prob) ? 0 : 1});
  DPAInstance d(n, std::move(edges));
  require_feasible(d);
  GeneratedInstance g;
  g.instance = AnyInstance::dpa(std::move(d));
  return g;
}

}  // namespace dualcut
