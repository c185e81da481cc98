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

#ifndef DUALCUT_TWO_ECS_HPP_
#define DUALCUT_TWO_ECS_HPP_

#include <vector>

#include "dualcut/advisor.hpp"
#include "dualcut/graph.hpp"
#include "dualcut/instance.hpp"
#include "dualcut/report.hpp"

namespace dualcut {

// A cycle (possibly a parallel pair) whose last path vertex has all its
// neighbors on the cycle, so {cut_vertex} is internal to it.
struct CycleWitness {
  std::vector<EdgeId> edges;       // edges[i] joins vertices[i] and vertices[i+1 mod len]
  std::vector<VertexId> vertices;  // starts where the path entered the cycle
  VertexId cut_vertex = 0;
};

// Greedy path growth from an advisor-chosen oriented edge; closes through
// the neighbor of the path end that appears earliest on the path.
CycleWitness find_cycle_with_internal_cut(const Multigraph& g, Advisor& advisor);

RunReport approx_2ecs(const TwoECSInstance& t, Advisor& advisor);

}  // namespace dualcut

#endif  // DUALCUT_TWO_ECS_HPP_
