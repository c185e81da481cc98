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

// Problem instances for star strong connectivity (SSC), minimum strongly
// connected spanning subgraph (MSCS), dual power assignment (DPA) and
// 2-edge-connected spanning subgraph (2ECS), the conversions between them,
// and direct feasibility tests for candidate solutions.

#ifndef DUALCUT_INSTANCE_HPP_
#define DUALCUT_INSTANCE_HPP_

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "dualcut/graph.hpp"

namespace dualcut {

using StarId = int;

// Sorted, duplicate-free set of vertices.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> vertices);

// Arcs sharing one source. Sinks are kept as a set.
struct Star {
  VertexId source = 0;
  VertexSet sinks;
  friend bool operator==(const Star&, const Star&) = default;
};

class SSCInstance {
 public:
  SSCInstance() = default;
  // Validates star shape (range, nonempty sinks, no source among sinks) but
  // not strong connectivity; see require_feasible.
  SSCInstance(int vertex_count, std::vector<Star> stars);

  int vertex_count() const { return vertex_count_; }
  int star_count() const { return static_cast<int>(stars_.size()); }
  const std::vector<Star>& stars() const { return stars_; }
  const Star& star(StarId id) const { return stars_.at(static_cast<std::size_t>(id)); }

  // Union of all stars, one arc per distinct (tail, head), sorted.
  Digraph derived_digraph() const;
  bool is_bidirected() const;

  friend bool operator==(const SSCInstance&, const SSCInstance&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Star> stars_;
};

struct DPAEdge {
  VertexId u = 0;
  VertexId v = 0;
  int cost = 1;  // 0 or 1
  friend bool operator==(const DPAEdge&, const DPAEdge&) = default;
};

// Each undirected entry stands for the arc pair uv, vu with equal cost.
class DPAInstance {
 public:
  DPAInstance() = default;
  DPAInstance(int vertex_count, std::vector<DPAEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<DPAEdge>& edges() const { return edges_; }

  friend bool operator==(const DPAInstance&, const DPAInstance&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<DPAEdge> edges_;
};

struct TwoECSInstance {
  Multigraph graph;
};

struct StarSolution {
  std::vector<StarId> stars;
  int cost() const { return static_cast<int>(stars.size()); }
};

struct EdgeSolution {
  std::vector<EdgeId> edges;
  int cost() const { return static_cast<int>(edges.size()); }
};

struct PowerSolution {
  std::vector<VertexId> high;
  int cost() const { return static_cast<int>(high.size()); }
};

enum class ProblemKind { kTwoEcs, kMscs, kDpa, kSsc };

std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);  // throws std::invalid_argument

// One parsed instance of any supported kind.
struct AnyInstance {
  ProblemKind kind = ProblemKind::kSsc;
  std::variant<SSCInstance, Digraph, DPAInstance, TwoECSInstance> data;

  static AnyInstance ssc(SSCInstance s) { return {ProblemKind::kSsc, std::move(s)}; }
  static AnyInstance mscs(Digraph g) { return {ProblemKind::kMscs, std::move(g)}; }
  static AnyInstance dpa(DPAInstance d) { return {ProblemKind::kDpa, std::move(d)}; }
  static AnyInstance two_ecs(Multigraph g) { return {ProblemKind::kTwoEcs, TwoECSInstance{std::move(g)}}; }
};

// Throw InfeasibleInstance when the connectivity requirement fails.
void require_feasible(const SSCInstance& s);
void require_feasible(const DPAInstance& d);
void require_feasible(const TwoECSInstance& t);
void require_feasible(const AnyInstance& instance);

// DPA -> SSC: one SSC vertex per zero-cost component (ordered by smallest
// member); one star per DPA vertex that has an edge leaving its component.
struct DpaAsSsc {
  SSCInstance instance;
  std::vector<VertexId> component;   // DPA vertex -> SSC vertex
  std::vector<VertexId> star_owner;  // StarId -> DPA vertex
  std::vector<StarId> star_of;       // DPA vertex -> StarId, or -1
};

DpaAsSsc dpa_to_ssc(const DPAInstance& d);
// High-power vertices without a star are dropped; they cannot help.
StarSolution to_star_solution(const DpaAsSsc& map, const PowerSolution& p);
PowerSolution to_power_solution(const DpaAsSsc& map, const StarSolution& s);

// SSC (bidirected) -> DPA: DPA vertex i stands for star i, so solutions
// convert by identity on ids.
DPAInstance ssc_to_dpa(const SSCInstance& s);

// One singleton star per arc, star ids in arc order.
SSCInstance mscs_to_ssc(const Digraph& g);

// Arc xy present iff edge {x,y} exists and (cost 0 or x is high).
Digraph dpa_induced_graph(const DPAInstance& d, std::span<const VertexId> high);

bool check_feasible(const SSCInstance& s, const StarSolution& solution);
bool check_feasible(const TwoECSInstance& t, const EdgeSolution& solution);
bool check_feasible(const DPAInstance& d, const PowerSolution& solution);

// Every cut is crossed by a selected star, tested over all 2^n - 2 cuts.
bool check_cut_feasible(const SSCInstance& s, const StarSolution& solution, int exhaustive_limit = 12);

}  // namespace dualcut

#endif  // DUALCUT_INSTANCE_HPP_
