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

#ifndef DUALCUT_REPORT_HPP_
#define DUALCUT_REPORT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dualcut/advisor.hpp"
#include "dualcut/certificate.hpp"
#include "dualcut/instance.hpp"

namespace dualcut {

// Exact nonnegative-denominator fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);  // throws on den == 0
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;  // "p/q", or "p" when q == 1

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
};

// One contraction step. `selected` holds original star ids (SSC, DPA) or
// original edge ids (2ECS).
struct IterationRecord {
  std::vector<int> selected;
  std::vector<Cut> cuts;
  int size = 0;
  std::string rule;
  int vertices_before = 0;
};

struct RunReport {
  ProblemKind problem = ProblemKind::kSsc;
  std::string algorithm;  // "2ecs", "bidirected" or "general"
  int n = 0;              // vertices of the instance the algorithm ran on
  int k = 0;              // iterations
  int cost = 0;
  // Sorted: star ids for SSC/MSCS (arc ids for MSCS), edge ids for 2ECS,
  // high-power vertices for DPA.
  std::vector<int> selected;
  std::map<int, int> histogram;  // set or cycle size -> count
  DualCertificate certificate;
  LowerBounds bounds;
  Rational convex_bound;
  Rational ratio_vs_best;
  std::vector<IterationRecord> iterations;
  AdvisorStats advisor;
  bool feasible = false;
};

// Fills histogram, k, bounds, convex bound and ratio from the iterations,
// cost and certificate already present in the report.
void finalize_report(RunReport& report, LowerBounds bounds);

struct IdentityCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Integer-exact accounting identities and guarantees for the report's
// algorithm. Does not look at the instance.
IdentityCheck check_identities(const RunReport& report);

}  // namespace dualcut

#endif  // DUALCUT_REPORT_HPP_
