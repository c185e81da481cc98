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

#include "dualcut/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dualcut {
namespace {

void check_vertex(int n, VertexId v, const char* who) {
  if (v < 0 || v >= n) throw std::out_of_range(std::string(who) + ": vertex " + std::to_string(v) + " out of range");
}

// Compressed adjacency: offset has n+1 entries.
template <class Key>
void build_csr(int n, int count, Key key, std::vector<int>& offset, std::vector<int>& list) {
  offset.assign(n + 1, 0);
  for (int i = 0; i < count; ++i) ++offset[key(i) + 1];
  for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
  list.assign(count, 0);
  std::vector<int> fill(offset.begin(), offset.end() - 1);
  for (int i = 0; i < count; ++i) list[fill[key(i)]++] = i;
}

}  // namespace

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs) : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  if (vertex_count < 0) throw std::invalid_argument("Digraph: negative vertex count");
  for (const Arc& a : arcs_) {
    check_vertex(vertex_count_, a.tail, "Digraph");
    check_vertex(vertex_count_, a.head, "Digraph");
    if (a.tail == a.head) throw std::invalid_argument("Digraph: self-loop at vertex " + std::to_string(a.tail));
  }
  const int m = arc_count();
  build_csr(vertex_count_, m, [&](int i) { return arcs_[i].tail; }, out_offset_, out_list_);
  build_csr(vertex_count_, m, [&](int i) { return arcs_[i].head; }, in_offset_, in_list_);
}

std::span<const ArcId> Digraph::out_arcs(VertexId v) const {
  return {out_list_.data() + out_offset_[v], out_list_.data() + out_offset_[v + 1]};
}

std::span<const ArcId> Digraph::in_arcs(VertexId v) const {
  return {in_list_.data() + in_offset_[v], in_list_.data() + in_offset_[v + 1]};
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
  for (ArcId a : out_arcs(tail))
    if (arcs_[a].head == head) return true;
  return false;
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw std::invalid_argument("Multigraph: negative vertex count");
  for (const Edge& e : edges_) {
    check_vertex(vertex_count_, e.u, "Multigraph");
    check_vertex(vertex_count_, e.v, "Multigraph");
    if (e.u == e.v) throw std::invalid_argument("Multigraph: self-loop at vertex " + std::to_string(e.u));
  }
  // Each edge appears in the incidence list of both endpoints.
  const int m = edge_count();
  offset_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offset_[e.u + 1];
    ++offset_[e.v + 1];
  }
  for (int v = 0; v < vertex_count_; ++v) offset_[v + 1] += offset_[v];
  list_.assign(2 * m, 0);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (EdgeId e = 0; e < m; ++e) {
    list_[fill[edges_[e].u]++] = e;
    list_[fill[edges_[e].v]++] = e;
  }
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
  return {list_.data() + offset_[v], list_.data() + offset_[v + 1]};
}

VertexPartition::VertexPartition(std::vector<VertexId> block_of, int current_count)
    : block_of_(std::move(block_of)), current_count_(current_count) {
  std::vector<char> hit(current_count_, 0);
  for (VertexId b : block_of_) {
    check_vertex(current_count_, b, "VertexPartition");
    hit[b] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw std::invalid_argument("VertexPartition: current ids are not dense");
}

VertexPartition VertexPartition::identity(int n) {
  std::vector<VertexId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return VertexPartition(std::move(ids), n);
}

std::vector<VertexId> VertexPartition::members(VertexId current) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < original_count(); ++v)
    if (block_of_[v] == current) out.push_back(v);
  return out;
}

std::vector<VertexId> VertexPartition::lift(std::span<const VertexId> current) const {
  std::vector<char> in(current_count_, 0);
  for (VertexId c : current) {
    check_vertex(current_count_, c, "VertexPartition::lift");
    in[c] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < original_count(); ++v)
    if (in[block_of_[v]]) out.push_back(v);
  return out;
}

VertexPartition VertexPartition::then(const VertexPartition& next) const {
  if (next.original_count() != current_count_) throw std::invalid_argument("VertexPartition::then: size mismatch");
  std::vector<VertexId> ids(block_of_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = next[block_of_[i]];
  return VertexPartition(std::move(ids), next.current_count());
}

bool is_strongly_connected(const Digraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  if (static_cast<int>(reachable(g, 0).size()) != n) return false;
  // Reverse reachability from 0.
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.in_arcs(v)) {
      VertexId t = g.arc(a).tail;
      if (!seen[t]) {
        seen[t] = 1;
        ++count;
        stack.push_back(t);
      }
    }
  }
  return count == n;
}

bool is_two_edge_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  // Iterative bridge search; the tree edge is skipped by id so that a
  // parallel copy counts as a back edge.
  std::vector<int> order(n, -1), low(n, 0);
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int clock = 0;
  order[0] = low[0] = clock++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      EdgeId e = inc[f.next++];
      if (e == f.parent_edge) continue;
      VertexId w = g.other_end(e, f.v);
      if (order[w] < 0) {
        order[w] = low[w] = clock++;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], order[w]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        VertexId parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > order[parent]) return false;  // bridge
      }
    }
  }
  return clock == n;
}

std::vector<VertexId> neighbors(const Multigraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v, "neighbors");
  std::vector<VertexId> out;
  for (EdgeId e : g.incident(v)) out.push_back(g.other_end(e, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> neighbors(const Digraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v, "neighbors");
  std::vector<VertexId> out;
  for (ArcId a : g.out_arcs(v)) out.push_back(g.arc(a).head);
  for (ArcId a : g.in_arcs(v)) out.push_back(g.arc(a).tail);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> out_neighbors(const Digraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v, "out_neighbors");
  std::vector<VertexId> out;
  for (ArcId a : g.out_arcs(v)) out.push_back(g.arc(a).head);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexPartition merge_partition(int vertex_count, std::span<const VertexId> block) {
  if (block.empty()) throw std::invalid_argument("contract: empty block");
  std::vector<char> in(vertex_count, 0);
  VertexId rep = vertex_count;
  for (VertexId v : block) {
    check_vertex(vertex_count, v, "contract");
    in[v] = 1;
    rep = std::min(rep, v);
  }
  std::vector<VertexId> ids(vertex_count);
  int next = 0;
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (in[v] && v != rep) continue;
    ids[v] = next++;
  }
  for (VertexId v = 0; v < vertex_count; ++v)
    if (in[v]) ids[v] = ids[rep];
  return VertexPartition(std::move(ids), next);
}

MultigraphContraction contract(const Multigraph& g, std::span<const VertexId> block) {
  MultigraphContraction out;
  out.partition = merge_partition(g.vertex_count(), block);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId u = out.partition[g.edge(e).u], v = out.partition[g.edge(e).v];
    if (u == v) continue;
    edges.push_back({u, v});
    out.origin.push_back(e);
  }
  out.graph = Multigraph(out.partition.current_count(), std::move(edges));
  return out;
}

DigraphContraction contract(const Digraph& g, std::span<const VertexId> block) {
  DigraphContraction out;
  out.partition = merge_partition(g.vertex_count(), block);
  std::vector<Arc> arcs;
  std::vector<std::pair<Arc, ArcId>> keyed;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    Arc mapped{out.partition[g.arc(a).tail], out.partition[g.arc(a).head]};
    if (mapped.tail == mapped.head) continue;
    keyed.emplace_back(mapped, a);
  }
  // Keep the first occurrence of each mapped arc, in input order.
  std::vector<std::pair<Arc, ArcId>> sorted = keyed;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ArcId> first_ids;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (i == 0 || !(sorted[i].first == sorted[i - 1].first)) first_ids.push_back(sorted[i].second);
  std::sort(first_ids.begin(), first_ids.end());
  for (ArcId a : first_ids) {
    arcs.push_back({out.partition[g.arc(a).tail], out.partition[g.arc(a).head]});
    out.origin.push_back(a);
  }
  out.graph = Digraph(out.partition.current_count(), std::move(arcs));
  return out;
}

std::vector<VertexId> reachable(const Digraph& g, VertexId start) {
  return reachable_avoiding(g, start, [](ArcId) { return false; });
}

}  // namespace dualcut
