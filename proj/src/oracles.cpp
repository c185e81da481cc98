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

#include "dualcut/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

void require_small(int count, int limit, const char* what) {
  if (count > limit)
    throw LimitExceeded(std::string(what) + " count " + std::to_string(count) + " exceeds the exact-search limit " +
                        std::to_string(limit));
}

Mask closure(Mask start, const std::vector<Mask>& adj) {
  Mask seen = start, frontier = start;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool strongly_connected(const std::vector<Mask>& out) {
  const int n = static_cast<int>(out.size());
  if (n <= 1) return true;
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  if (closure(1, out) != all) return false;
  std::vector<Mask> in(n, 0);
  for (int u = 0; u < n; ++u)
    for (Mask f = out[u]; f; f &= f - 1) in[std::countr_zero(f)] |= bit(u);
  return closure(1, in) == all;
}

// Enumerates k-subsets of [0, m) in lexicographic order; `extend` may veto
// a prefix, `leaf` returns true to stop.
struct SubsetSearch {
  int m = 0;
  std::function<bool(const std::vector<int>&, int target)> prune;
  std::function<bool(const std::vector<int>&)> leaf;
  std::int64_t explored = 0;
  std::vector<int> chosen;

  bool run(int target, int from = 0) {
    if (static_cast<int>(chosen.size()) == target) {
      ++explored;
      return leaf(chosen);
    }
    if (prune && prune(chosen, target)) return false;
    for (int i = from; i + (target - static_cast<int>(chosen.size())) <= m; ++i) {
      chosen.push_back(i);
      if (run(target, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

bool bridgeless_connected(int n, const std::vector<Edge>& edges, const std::vector<int>& subset) {
  std::vector<Mask> adj(n, 0);
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (int e : subset) {
    const Edge& ed = edges[e];
    adj[ed.u] |= bit(ed.v);
    adj[ed.v] |= bit(ed.u);
    ++mult[ed.u][ed.v];
    ++mult[ed.v][ed.u];
  }
  const Mask all = bit(n) - 1;
  if (closure(1, adj) != all) return false;
  for (int e : subset) {
    const Edge& ed = edges[e];
    if (mult[ed.u][ed.v] >= 2) continue;
    adj[ed.u] &= ~bit(ed.v);
    adj[ed.v] &= ~bit(ed.u);
    const bool ok = closure(1, adj) == all;
    adj[ed.u] |= bit(ed.v);
    adj[ed.v] |= bit(ed.u);
    if (!ok) return false;
  }
  return true;
}

// Depth-first Hamiltonian cycle search from vertex 0, fewest onward options
// first. `next(v)` lists neighbors usable after v.
std::optional<std::vector<VertexId>> hamiltonian_cycle(int n, const std::function<std::vector<VertexId>(VertexId)>& next,
                                                       const std::function<bool(VertexId, VertexId)>& closes,
                                                       std::int64_t budget) {
  std::vector<char> used(n, 0);
  std::vector<VertexId> path{0};
  used[0] = 1;
  std::int64_t nodes = 0;
  std::function<bool()> dfs = [&]() -> bool {
    if (++nodes > budget) return false;
    const VertexId v = path.back();
    if (static_cast<int>(path.size()) == n) return closes(v, 0);
    std::vector<std::pair<int, VertexId>> cand;
    for (VertexId u : next(v)) {
      if (used[u]) continue;
      int onward = 0;
      for (VertexId x : next(u)) onward += used[x] ? 0 : 1;
      cand.emplace_back(onward, u);
    }
    std::sort(cand.begin(), cand.end());
    for (auto [onward, u] : cand) {
      used[u] = 1;
      path.push_back(u);
      if (dfs()) return true;
      path.pop_back();
      used[u] = 0;
      if (nodes > budget) return false;
    }
    return false;
  };
  if (dfs()) return path;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ExactMethod m) {
  return m == ExactMethod::kHamiltonianCertificate ? "hamiltonian-certificate" : "search";
}

ExactResult search_ssc(const SSCInstance& s, int limit) {
  require_feasible(s);
  require_small(s.star_count(), limit, "star");
  const int n = s.vertex_count();
  ExactResult out;
  if (n == 1) return out;
  std::vector<Mask> sinks(s.star_count(), 0);
  for (StarId f = 0; f < s.star_count(); ++f)
    for (VertexId v : s.star(f).sinks) sinks[f] |= bit(v);

  SubsetSearch search;
  search.m = s.star_count();
  search.prune = [&](const std::vector<int>& chosen, int target) {
    Mask covered = 0;
    for (int f : chosen) covered |= bit(s.star(f).source);
    return n - std::popcount(covered) > target - static_cast<int>(chosen.size());
  };
  search.leaf = [&](const std::vector<int>& chosen) {
    std::vector<Mask> adj(n, 0);
    for (int f : chosen) adj[s.star(f).source] |= sinks[f];
    return strongly_connected(adj);
  };
  for (int target = n; target <= s.star_count(); ++target) {
    if (search.run(target)) {
      out.optimum = target;
      out.witness = search.chosen;
      out.explored = search.explored;
      return out;
    }
  }
  throw std::logic_error("search_ssc: feasible instance without a solution");
}

ExactResult search_2ecs(const TwoECSInstance& t, int limit) {
  require_feasible(t);
  const Multigraph& g = t.graph;
  require_small(g.edge_count(), limit, "edge");
  const int n = g.vertex_count();
  ExactResult out;
  if (n == 1) return out;
  SubsetSearch search;
  search.m = g.edge_count();
  search.prune = [&](const std::vector<int>& chosen, int target) {
    std::vector<int> deg(n, 0);
    for (int e : chosen) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
    int deficit = 0;
    for (int d : deg) deficit += std::max(0, 2 - d);
    return deficit > 2 * (target - static_cast<int>(chosen.size()));
  };
  search.leaf = [&](const std::vector<int>& chosen) { return bridgeless_connected(n, g.edges(), chosen); };
  for (int target = n; target <= g.edge_count(); ++target) {
    if (search.run(target)) {
      out.optimum = target;
      out.witness = search.chosen;
      out.explored = search.explored;
      return out;
    }
  }
  throw std::logic_error("search_2ecs: feasible instance without a solution");
}

std::optional<StarSolution> hamiltonian_witness(const SSCInstance& s, std::int64_t budget) {
  const int n = s.vertex_count();
  if (n < 2) return std::nullopt;
  const Digraph g = s.derived_digraph();
  std::vector<VertexSet> out(n);
  for (const Arc& a : g.arcs()) out[a.tail].push_back(a.head);
  auto cycle = hamiltonian_cycle(
      n, [&](VertexId v) { return out[v]; }, [&](VertexId v, VertexId u) { return g.has_arc(v, u); }, budget);
  if (!cycle) return std::nullopt;
  StarSolution sol;
  for (int i = 0; i < n; ++i) {
    const VertexId a = (*cycle)[i], b = (*cycle)[(i + 1) % n];
    for (StarId f = 0; f < s.star_count(); ++f)
      if (s.star(f).source == a && std::binary_search(s.star(f).sinks.begin(), s.star(f).sinks.end(), b)) {
        sol.stars.push_back(f);
        break;
      }
  }
  std::sort(sol.stars.begin(), sol.stars.end());
  return sol;
}

std::optional<EdgeSolution> hamiltonian_witness(const TwoECSInstance& t, std::int64_t budget) {
  const Multigraph& g = t.graph;
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  auto edge_between = [&](VertexId a, VertexId b, EdgeId skip) {
    EdgeId best = -1;
    for (EdgeId e : g.incident(a))
      if (e != skip && g.other_end(e, a) == b && (best < 0 || e < best)) best = e;
    return best;
  };
  if (n == 2) {
    EdgeId first = edge_between(0, 1, -1);
    EdgeId second = first < 0 ? -1 : edge_between(0, 1, first);
    if (second < 0) return std::nullopt;
    return EdgeSolution{{first, second}};
  }
  auto cycle = hamiltonian_cycle(
      n, [&](VertexId v) { return neighbors(g, v); }, [&](VertexId v, VertexId u) { return edge_between(v, u, -1) >= 0; },
      budget);
  if (!cycle) return std::nullopt;
  EdgeSolution sol;
  for (int i = 0; i < n; ++i) sol.edges.push_back(edge_between((*cycle)[i], (*cycle)[(i + 1) % n], -1));
  std::sort(sol.edges.begin(), sol.edges.end());
  return sol;
}

ExactResult exact_ssc(const SSCInstance& s, int limit, std::int64_t hamiltonian_budget) {
  require_feasible(s);
  if (auto w = hamiltonian_witness(s, hamiltonian_budget); w && check_feasible(s, *w))
    return {w->cost(), w->stars, ExactMethod::kHamiltonianCertificate, 0};
  return search_ssc(s, limit);
}

ExactResult exact_2ecs(const TwoECSInstance& t, int limit, std::int64_t hamiltonian_budget) {
  require_feasible(t);
  if (auto w = hamiltonian_witness(t, hamiltonian_budget); w && check_feasible(t, *w))
    return {w->cost(), w->edges, ExactMethod::kHamiltonianCertificate, 0};
  return search_2ecs(t, limit);
}

ExactResult exact_dpa(const DPAInstance& d, int limit) {
  require_feasible(d);
  const int n = d.vertex_count();
  require_small(n, limit, "vertex");
  ExactResult out;
  SubsetSearch search;
  search.m = n;
  search.leaf = [&](const std::vector<int>& high) {
    Mask hi = 0;
    for (int v : high) hi |= bit(v);
    std::vector<Mask> adj(n, 0);
    for (const DPAEdge& e : d.edges()) {
      if (e.cost == 0 || (hi & bit(e.u))) adj[e.u] |= bit(e.v);
      if (e.cost == 0 || (hi & bit(e.v))) adj[e.v] |= bit(e.u);
    }
    return strongly_connected(adj);
  };
  for (int target = 0; target <= n; ++target) {
    if (search.run(target)) {
      out.optimum = target;
      out.witness = search.chosen;
      out.explored = search.explored;
      return out;
    }
  }
  throw std::logic_error("exact_dpa: feasible instance without a solution");
}

std::vector<VertexSet> enumerate_internal_cuts(const LiveInstance& li, std::span<const StarId> q, int size_limit) {
  const int n = li.vertex_count();
  require_small(n, size_limit, "vertex");
  std::vector<VertexSet> out;
  for (Mask m = 1; m + 1 < bit(n); ++m) {
    VertexSet cut;
    for (Mask f = m; f; f &= f - 1) cut.push_back(std::countr_zero(f));
    if (is_internal_cut(li, q, cut)) out.push_back(std::move(cut));
  }
  return out;
}

bool certify_exact_by_bound(const SSCInstance& s, const StarSolution& witness, const DualCertificate* cert) {
  if (!check_feasible(s, witness)) throw InfeasibleInstance("witness is not a feasible solution");
  LowerBounds b = lower_bounds(s, cert ? *cert : DualCertificate{});
  return witness.cost() == b.best;
}

bool certify_exact_by_bound(const TwoECSInstance& t, const EdgeSolution& witness, const DualCertificate* cert) {
  if (!check_feasible(t, witness)) throw InfeasibleInstance("witness is not a feasible solution");
  DualCertificate empty;
  empty.kind = CertificateKind::kTwoEcs;
  LowerBounds b = lower_bounds(t, cert ? *cert : empty);
  return witness.cost() == b.best;
}

}  // namespace dualcut
