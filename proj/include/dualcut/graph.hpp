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

// Directed and undirected multigraph primitives shared by every algorithm:
// connectivity tests, neighbor sets, contraction with an explicit vertex
// partition, and reachability under an arc filter.
//
// Vertex ids are dense 0-based integers internally; files and reports use
// 1-based ids (see io.hpp).

#ifndef DUALCUT_GRAPH_HPP_
#define DUALCUT_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace dualcut {

using VertexId = int;
using ArcId = int;
using EdgeId = int;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Arcs keep their list index as ArcId. Self-loops are rejected; parallel
// arcs are allowed.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }

  std::span<const ArcId> out_arcs(VertexId v) const;
  std::span<const ArcId> in_arcs(VertexId v) const;
  bool has_arc(VertexId tail, VertexId head) const;

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_offset_, in_offset_;
  std::vector<ArcId> out_list_, in_list_;
};

// Undirected multigraph; parallel edges are distinct entities.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const EdgeId> incident(VertexId v) const;
  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_;
  std::vector<EdgeId> list_;
};

// Maps every original vertex to a current (super)vertex. Current ids are
// dense in [0, current_count).
class VertexPartition {
 public:
  VertexPartition() = default;
  VertexPartition(std::vector<VertexId> block_of, int current_count);
  static VertexPartition identity(int n);

  int original_count() const { return static_cast<int>(block_of_.size()); }
  int current_count() const { return current_count_; }
  VertexId operator[](VertexId original) const {
    return block_of_[static_cast<std::size_t>(original)];
  }
  const std::vector<VertexId>& block_of() const { return block_of_; }

  // Original vertices merged into `current`, ascending.
  std::vector<VertexId> members(VertexId current) const;
  // Union of members over a set of current vertices, ascending.
  std::vector<VertexId> lift(std::span<const VertexId> current) const;
  // original -> this -> next.
  VertexPartition then(const VertexPartition& next) const;

 private:
  std::vector<VertexId> block_of_;
  int current_count_ = 0;
};

bool is_strongly_connected(const Digraph& g);
bool is_two_edge_connected(const Multigraph& g);

// Sorted, deduplicated.
std::vector<VertexId> neighbors(const Multigraph& g, VertexId v);
std::vector<VertexId> neighbors(const Digraph& g, VertexId v);  // in or out
std::vector<VertexId> out_neighbors(const Digraph& g, VertexId v);

// Partition that merges `block` into its smallest member and renumbers the
// remaining vertices densely in increasing order.
VertexPartition merge_partition(int vertex_count, std::span<const VertexId> block);

struct MultigraphContraction {
  Multigraph graph;
  VertexPartition partition;
  std::vector<EdgeId> origin;  // new EdgeId -> EdgeId in the input graph
};

// Edges inside the block vanish; parallels among the survivors are kept.
MultigraphContraction contract(const Multigraph& g, std::span<const VertexId> block);

struct DigraphContraction {
  Digraph graph;
  VertexPartition partition;
  std::vector<ArcId> origin;  // new ArcId -> first input ArcId mapping onto it
};

// Arcs inside the block vanish; duplicate arcs are merged.
DigraphContraction contract(const Digraph& g, std::span<const VertexId> block);

// Vertices reachable from `start` (inclusive) through arcs for which
// `forbidden(arc_id)` is false. Sorted ascending.
template <class ArcFilter>
std::vector<VertexId> reachable_avoiding(const Digraph& g, VertexId start, ArcFilter&& forbidden);

std::vector<VertexId> reachable(const Digraph& g, VertexId start);

}  // namespace dualcut

#include "dualcut/graph_inl.hpp"

#endif  // DUALCUT_GRAPH_HPP_
