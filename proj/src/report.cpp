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

#include "dualcut/report.hpp"

#include <numeric>
#include <stdexcept>

namespace dualcut {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

void finalize_report(RunReport& report, LowerBounds bounds) {
  report.k = static_cast<int>(report.iterations.size());
  report.histogram.clear();
  for (const IterationRecord& it : report.iterations) ++report.histogram[it.size];
  report.bounds = bounds;
  const std::int64_t n = report.n, k = report.k;
  if (report.algorithm == "general")
    report.convex_bound = Rational::of(3 * (n - 1) + bounds.dual_objective, 4);
  else
    report.convex_bound = Rational::of(2 * n + 2 * k, 3);
  report.ratio_vs_best = bounds.best == 0 ? Rational::of(report.cost == 0 ? 1 : 0, 1) : Rational::of(report.cost, bounds.best);
}

IdentityCheck check_identities(const RunReport& r) {
  IdentityCheck out;
  auto require = [&](bool cond, std::string what) {
    if (!cond) {
      out.ok = false;
      out.failures.push_back(std::move(what));
    }
  };
  const std::int64_t n = r.n, k = r.k, cost = r.cost;
  const std::int64_t cuts = static_cast<std::int64_t>(r.certificate.cuts.size());
  require(k == static_cast<std::int64_t>(r.iterations.size()), "k equals the number of iterations");

  std::int64_t contracted = 0, weighted = 0, histogram_total = 0;
  for (auto [size, count] : r.histogram) {
    contracted += static_cast<std::int64_t>(size - 1) * count;
    weighted += static_cast<std::int64_t>(size) * count;
    histogram_total += count;
  }
  require(histogram_total == k, "histogram counts sum to k");
  require(contracted == std::max<std::int64_t>(n - 1, 0), "sum (i-1) A_i = n - 1");
  require(weighted == cost, "sum i A_i = cost");

  std::int64_t per_iteration_cuts = 0;
  for (const IterationRecord& it : r.iterations) per_iteration_cuts += static_cast<std::int64_t>(it.cuts.size());
  require(per_iteration_cuts == cuts, "certificate holds exactly the recorded cuts");

  const std::int64_t objective = r.certificate.kind == CertificateKind::kTwoEcs ? 2 * cuts : cuts;
  require(objective == r.bounds.dual_objective, "dual objective matches the certificate");

  if (r.algorithm == "general") {
    std::int64_t small = 0, big = 0;
    for (auto [size, count] : r.histogram) (size <= 3 ? small : big) += count;
    require(objective >= 2 * small + big, "D >= 2A_2 + 2A_3 + sum_{i>=4} A_i");
    require(5 * cost <= 6 * (n - 1) + 2 * objective, "5 cost <= 6(n-1) + 2D");
    for (const IterationRecord& it : r.iterations) {
      if (it.size <= 3) require(it.cuts.size() == 2, "sets of size 2 or 3 carry two cuts");
      else require(!it.cuts.empty(), "sets of size 4 or more carry a cut");
    }
  } else {
    require(cost == n + k - 1 || (n <= 1 && cost == 0), "cost = n + k - 1");
    const std::int64_t cuts_per = r.algorithm == "2ecs" ? 1 : 2;
    require(cuts == cuts_per * k, r.algorithm == "2ecs" ? "one cut per cycle" : "two cuts per perfect set");
    require(2 * cost < 3 * std::max(n, 2 * k) || n <= 1, "2 cost < 3 max(n, 2k)");
  }
  return out;
}

}  // namespace dualcut
