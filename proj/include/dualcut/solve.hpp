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

#ifndef DUALCUT_SOLVE_HPP_
#define DUALCUT_SOLVE_HPP_

#include <string>
#include <vector>

#include "dualcut/advisor.hpp"
#include "dualcut/instance.hpp"
#include "dualcut/oracles.hpp"
#include "dualcut/report.hpp"

namespace dualcut {

// Which star algorithm runs on SSC, MSCS and DPA inputs. kAuto picks the
// bidirected one whenever the derived digraph is bidirected (always, for
// DPA).
enum class StarAlgorithm { kAuto, kBidirected, kGeneral };

StarAlgorithm star_algorithm_from_string(std::string_view name);  // throws std::invalid_argument

// Requires a feasible instance (throws InfeasibleInstance otherwise).
RunReport solve(const AnyInstance& instance, Advisor& advisor, StarAlgorithm algorithm = StarAlgorithm::kAuto);

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> problems;
};

// Re-derives everything a report claims from the instance alone: digest,
// solution feasibility, certificate feasibility, bounds and identities.
VerifyOutcome verify_report(const AnyInstance& instance, const RunReport& report, const std::string& digest);

// Optimum of any instance kind: Hamiltonian certificate first, subset
// search within `limit` otherwise. DPA goes through its SSC transform for
// the certificate and searches over high-power vertex sets.
ExactResult exact_optimum(const AnyInstance& instance, int limit = kDefaultExactLimit);

struct GapOutcome {
  RunReport report;
  ExactResult exact;
  Rational ratio;  // cost / optimum (1 when both are 0)
};

GapOutcome gap(const AnyInstance& instance, Advisor& advisor, StarAlgorithm algorithm = StarAlgorithm::kAuto,
               int limit = kDefaultExactLimit);

}  // namespace dualcut

#endif  // DUALCUT_SOLVE_HPP_
