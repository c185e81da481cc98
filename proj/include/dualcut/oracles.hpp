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

#ifndef DUALCUT_ORACLES_HPP_
#define DUALCUT_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "dualcut/certificate.hpp"
#include "dualcut/instance.hpp"
#include "dualcut/perfect_sets.hpp"

namespace dualcut {

enum class ExactMethod {
  kHamiltonianCertificate,  // a witness of cost n meets the n lower bound
  kSearch,                  // size-increasing exhaustive subset search
};

std::string_view to_string(ExactMethod m);

struct ExactResult {
  int optimum = 0;
  std::vector<int> witness;  // star ids, edge ids or high-power vertices; sorted
  ExactMethod method = ExactMethod::kSearch;
  std::int64_t explored = 0;  // candidate subsets tested
};

inline constexpr int kDefaultExactLimit = 22;
inline constexpr int kDefaultCutEnumerationLimit = 16;
inline constexpr std::int64_t kDefaultHamiltonianBudget = 2'000'000;

// Each first tries a Hamiltonian witness (within `hamiltonian_budget` search
// nodes), which is optimal because every solution needs n elements. Failing
// that, the instance must be within `limit` stars / edges / vertices or
// LimitExceeded is thrown.
ExactResult exact_ssc(const SSCInstance& s, int limit = kDefaultExactLimit,
                      std::int64_t hamiltonian_budget = kDefaultHamiltonianBudget);
ExactResult exact_2ecs(const TwoECSInstance& t, int limit = kDefaultExactLimit,
                       std::int64_t hamiltonian_budget = kDefaultHamiltonianBudget);
ExactResult exact_dpa(const DPAInstance& d, int limit = kDefaultExactLimit);

// Subset search only; no Hamiltonian shortcut.
ExactResult search_ssc(const SSCInstance& s, int limit = kDefaultExactLimit);
ExactResult search_2ecs(const TwoECSInstance& t, int limit = kDefaultExactLimit);

// Hamiltonian cycle of the derived digraph / multigraph as a solution of
// cost n, or nullopt when none is found within the node budget.
std::optional<StarSolution> hamiltonian_witness(const SSCInstance& s, std::int64_t budget);
std::optional<EdgeSolution> hamiltonian_witness(const TwoECSInstance& t, std::int64_t budget);

// Every cut over current vertices that is internal to q.
std::vector<VertexSet> enumerate_internal_cuts(const LiveInstance& li, std::span<const StarId> q,
                                               int size_limit = kDefaultCutEnumerationLimit);

// True iff the witness cost equals a verified lower bound (n, or the
// objective of `cert` when given). Throws InfeasibleInstance when the
// witness is infeasible and PreconditionError when `cert` is.
bool certify_exact_by_bound(const SSCInstance& s, const StarSolution& witness, const DualCertificate* cert = nullptr);
bool certify_exact_by_bound(const TwoECSInstance& t, const EdgeSolution& witness,
                            const DualCertificate* cert = nullptr);

}  // namespace dualcut

#endif  // DUALCUT_ORACLES_HPP_
