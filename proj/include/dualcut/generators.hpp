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

#ifndef DUALCUT_GENERATORS_HPP_
#define DUALCUT_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualcut/advisor.hpp"
#include "dualcut/instance.hpp"

namespace dualcut {

struct ExpectedCosts {
  int algorithm = 0;  // cost of the adversarial run driven by the advice
  int optimum = 0;
};

struct GeneratedInstance {
  AnyInstance instance;
  std::optional<AdviceScript> advice;
  std::optional<ExpectedCosts> expected;
  std::optional<StarSolution> witness;  // optimal solution when known
  std::vector<std::string> labels;      // vertex names, when meaningful
};

// Bidirected singleton-star family on 2k+3 vertices where the bidirected
// algorithm can pay 3k+3 against an optimum of 2k+3.
GeneratedInstance gen_dpa_tight(int k);

// Singleton-star family on 5k+2 vertices where the general algorithm can
// pay 8k+2 against an optimum of 5k+2.
GeneratedInstance gen_ssc_tight(int k);

// Random instances, deterministic per seed (mt19937_64 with rejection
// sampling, so identical across platforms).
//
// SSC: Hamiltonian-cycle backbone plus round(extra_arc_factor * n) extra
// arcs. Each vertex's out-arcs are split into stars of at most
// max_star_fan sinks; when max_star_fan > 1, a few overlapping stars are
// added on top so that several stars may share an arc.
GeneratedInstance gen_random_ssc(int n, double extra_arc_factor, int max_star_fan, std::uint64_t seed);
// Bidirected SSC on a random spanning tree plus extra edges.
GeneratedInstance gen_random_bidirected(int n, double extra_edge_factor, int max_star_fan, std::uint64_t seed);
// Hamiltonian cycle plus extra edges (parallels allowed).
GeneratedInstance gen_random_2ecs(int n, double extra_edge_factor, std::uint64_t seed);
// Random spanning tree plus extra edges; each edge costs 0 with
// probability zero_cost_prob.
GeneratedInstance gen_random_dpa(int n, double zero_cost_prob, std::uint64_t seed, double extra_edge_factor = 0.5);

}  // namespace dualcut

#endif  // DUALCUT_GENERATORS_HPP_
