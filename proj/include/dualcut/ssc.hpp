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

#ifndef DUALCUT_SSC_HPP_
#define DUALCUT_SSC_HPP_

#include <vector>

#include "dualcut/advisor.hpp"
#include "dualcut/instance.hpp"
#include "dualcut/perfect_sets.hpp"
#include "dualcut/report.hpp"

namespace dualcut {

// vertices runs from the closing vertex w to v_bar along the path; every
// out-neighbor of v_bar is on it.
struct SimpleCycle {
  std::vector<VertexId> vertices;
  VertexId v_bar = 0;
};

SimpleCycle build_simple_cycle(const LiveInstance& li, Advisor& advisor);

// Either at least four stars with one internal cut (kBigOneCut) or two
// star-disjoint internal cuts (kTwoCuts).
PerfectSetChoice find_perfect_set(const LiveInstance& li, Advisor& advisor);

RunReport approx_ssc(const SSCInstance& s, Advisor& advisor);

}  // namespace dualcut

#endif  // DUALCUT_SSC_HPP_
