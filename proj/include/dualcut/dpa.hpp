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

#ifndef DUALCUT_DPA_HPP_
#define DUALCUT_DPA_HPP_

#include <vector>

#include "dualcut/advisor.hpp"
#include "dualcut/instance.hpp"
#include "dualcut/perfect_sets.hpp"
#include "dualcut/report.hpp"

namespace dualcut {

// Cycle in the current bidirected digraph. vertices[0] == v_bar; the
// remaining order is v_bar, w, (path back to x), w_bar, ..., so every
// consecutive pair (and last -> first) is an arc.
struct RotationCycle {
  std::vector<VertexId> vertices;
  VertexId v_bar = 0;
  VertexId w_bar = 0;
};

// Exactly one neighbor in the current digraph.
bool is_leaf(const LiveInstance& li, VertexId v);

// Path growth through non-leaf vertices with rotation. Requires a
// bidirected, strongly connected live instance with at least 3 vertices.
RotationCycle build_rotation_cycle(const LiveInstance& li, Advisor& advisor);

// Perfect set with two star-disjoint internal cuts (bidirected instances,
// at least 2 vertices).
PerfectSetChoice find_perfect_two_cuts(const LiveInstance& li, Advisor& advisor);

// Runs on an SSC instance whose derived digraph is bidirected.
RunReport approx_dpa(const SSCInstance& s, Advisor& advisor);
// Runs on the SSC transform; `selected` holds high-power vertices.
RunReport approx_dpa(const DPAInstance& d, Advisor& advisor);

}  // namespace dualcut

#endif  // DUALCUT_DPA_HPP_
