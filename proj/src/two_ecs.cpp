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

#include "dualcut/two_ecs.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

// Smallest edge id joining a and b that is not in `used`, or -1.
EdgeId smallest_edge_between(const Multigraph& g, VertexId a, VertexId b, const std::vector<EdgeId>& used) {
  EdgeId best = -1;
  for (EdgeId e : g.incident(a)) {
    if (g.other_end(e, a) != b || std::find(used.begin(), used.end(), e) != used.end()) continue;
    if (best < 0 || e < best) best = e;
  }
  return best;
}

}  // namespace

CycleWitness find_cycle_with_internal_cut(const Multigraph& g, Advisor& advisor) {
  const int n = g.vertex_count();
  if (n < 2) throw PreconditionError("find_cycle_with_internal_cut: fewer than 2 vertices");
  if (!is_two_edge_connected(g)) throw PreconditionError("find_cycle_with_internal_cut: graph is not 2-edge-connected");

  const std::size_t start = advisor.choose(ChoicePoint::kFirstEdge, 2 * static_cast<std::size_t>(g.edge_count()));
  const Edge& first = g.edge(static_cast<EdgeId>(start / 2));
  std::vector<VertexId> path = start % 2 == 0 ? std::vector<VertexId>{first.u, first.v} : std::vector<VertexId>{first.v, first.u};
  std::vector<EdgeId> path_edges{static_cast<EdgeId>(start / 2)};
  std::vector<int> position(n, -1);
  position[path[0]] = 0;
  position[path[1]] = 1;

  while (true) {
    const VertexId end = path.back();
    std::vector<VertexId> off;
    for (VertexId u : neighbors(g, end))
      if (position[u] < 0) off.push_back(u);
    if (off.empty()) break;
    VertexId next = off[advisor.choose(ChoicePoint::kExtendPath, off.size())];
    path_edges.push_back(smallest_edge_between(g, end, next, {}));
    position[next] = static_cast<int>(path.size());
    path.push_back(next);
  }

  const VertexId end = path.back();
  int earliest = std::numeric_limits<int>::max();
  for (VertexId u : neighbors(g, end)) earliest = std::min(earliest, position[u]);
  CycleWitness out;
  out.cut_vertex = end;
  out.vertices.assign(path.begin() + earliest, path.end());
  out.edges.assign(path_edges.begin() + earliest, path_edges.end());
  EdgeId closing = smallest_edge_between(g, end, path[earliest], out.edges);
  if (closing < 0) throw std::logic_error("find_cycle_with_internal_cut: no closing edge");
  out.edges.push_back(closing);
  return out;
}

RunReport approx_2ecs(const TwoECSInstance& t, Advisor& advisor) {
  require_feasible(t);
  RunReport report;
  report.problem = ProblemKind::kTwoEcs;
  report.algorithm = "2ecs";
  report.n = t.graph.vertex_count();
  report.certificate.kind = CertificateKind::kTwoEcs;

  Multigraph g = t.graph;
  VertexPartition partition = VertexPartition::identity(report.n);
  std::vector<EdgeId> origin(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) origin[e] = e;

  while (g.vertex_count() > 1) {
    CycleWitness c = find_cycle_with_internal_cut(g, advisor);
    IterationRecord it;
    for (EdgeId e : c.edges) it.selected.push_back(origin[e]);
    std::sort(it.selected.begin(), it.selected.end());
    const VertexId cut_vertex[] = {c.cut_vertex};
    it.cuts.push_back(Cut{partition.lift(cut_vertex)});
    it.size = static_cast<int>(c.edges.size());
    it.rule = c.edges.size() == 2 ? "two-cycle" : "cycle";
    it.vertices_before = g.vertex_count();

    MultigraphContraction next = contract(g, c.vertices);
    std::vector<EdgeId> next_origin;
    for (EdgeId e : next.origin) next_origin.push_back(origin[e]);
    partition = partition.then(next.partition);
    g = std::move(next.graph);
    origin = std::move(next_origin);

    report.selected.insert(report.selected.end(), it.selected.begin(), it.selected.end());
    report.certificate.cuts.insert(report.certificate.cuts.end(), it.cuts.begin(), it.cuts.end());
    report.iterations.push_back(std::move(it));
  }
  std::sort(report.selected.begin(), report.selected.end());
  report.cost = static_cast<int>(report.selected.size());
  report.advisor = advisor.stats();
  report.feasible = check_feasible(t, EdgeSolution{report.selected});
  CertificateCheck cc = verify_certificate(t, report.certificate);
  if (!cc.feasible) throw std::logic_error("approx_2ecs: certificate is not dual feasible");
  finalize_report(report, lower_bounds(t, report.certificate));
  return report;
}

}  // namespace dualcut
