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

#include "dualcut/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "dualcut/certificate.hpp"
#include "dualcut/dpa.hpp"
#include "dualcut/error.hpp"
#include "dualcut/io.hpp"
#include "dualcut/ssc.hpp"
#include "dualcut/two_ecs.hpp"

namespace dualcut {
namespace {

RunReport solve_stars(const SSCInstance& s, Advisor& advisor, StarAlgorithm algorithm) {
  require_feasible(s);
  const bool bidirected = s.is_bidirected();
  if (algorithm == StarAlgorithm::kBidirected && !bidirected)
    throw PreconditionError("the bidirected algorithm needs a bidirected instance");
  if (algorithm == StarAlgorithm::kGeneral || !bidirected) return approx_ssc(s, advisor);
  return approx_dpa(s, advisor);
}

std::vector<Cut> flatten_cuts(const RunReport& r) {
  std::vector<Cut> out;
  for (const IterationRecord& it : r.iterations) out.insert(out.end(), it.cuts.begin(), it.cuts.end());
  return out;
}

}  // namespace

StarAlgorithm star_algorithm_from_string(std::string_view name) {
  if (name == "auto") return StarAlgorithm::kAuto;
  if (name == "bidirected") return StarAlgorithm::kBidirected;
  if (name == "general") return StarAlgorithm::kGeneral;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

RunReport solve(const AnyInstance& instance, Advisor& advisor, StarAlgorithm algorithm) {
  require_feasible(instance);
  switch (instance.kind) {
    case ProblemKind::kTwoEcs:
      return approx_2ecs(std::get<TwoECSInstance>(instance.data), advisor);
    case ProblemKind::kSsc:
      return solve_stars(std::get<SSCInstance>(instance.data), advisor, algorithm);
    case ProblemKind::kMscs: {
      RunReport r = solve_stars(mscs_to_ssc(std::get<Digraph>(instance.data)), advisor, algorithm);
      r.problem = ProblemKind::kMscs;
      return r;
    }
    case ProblemKind::kDpa: {
      const auto& d = std::get<DPAInstance>(instance.data);
      if (algorithm != StarAlgorithm::kGeneral) return approx_dpa(d, advisor);
      DpaAsSsc map = dpa_to_ssc(d);
      RunReport r = approx_ssc(map.instance, advisor);
      PowerSolution power = to_power_solution(map, StarSolution{r.selected});
      r.problem = ProblemKind::kDpa;
      r.selected = power.high;
      r.cost = power.cost();
      r.feasible = check_feasible(d, power);
      r.certificate = lift_to_dpa(map, r.certificate);
      for (IterationRecord& it : r.iterations) {
        it.cuts = lift_to_dpa(map, DualCertificate{CertificateKind::kSsc, it.cuts}).cuts;
        for (int& f : it.selected) f = map.star_owner[f];
        std::sort(it.selected.begin(), it.selected.end());
      }
      return r;
    }
  }
  throw std::logic_error("solve: unknown problem kind");
}

VerifyOutcome verify_report(const AnyInstance& instance, const RunReport& r, const std::string& digest) {
  VerifyOutcome out;
  auto fail = [&](std::string what) {
    out.ok = false;
    out.problems.push_back(std::move(what));
  };
  if (digest != instance_digest(instance)) fail("instance digest does not match the report");
  if (r.problem != instance.kind) fail("report problem '" + std::string(to_string(r.problem)) + "' does not match the instance");

  std::vector<int> sorted = r.selected;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("selected ids repeat");
  if (r.cost != static_cast<int>(r.selected.size())) fail("cost differs from the number of selected ids");

  std::vector<int> from_iterations;
  for (const IterationRecord& it : r.iterations) from_iterations.insert(from_iterations.end(), it.selected.begin(), it.selected.end());
  std::sort(from_iterations.begin(), from_iterations.end());
  // DPA iterations list star owners, so only star-based runs must match exactly.
  if (instance.kind != ProblemKind::kDpa && from_iterations != sorted) fail("iterations do not add up to the selection");
  if (flatten_cuts(r) != r.certificate.cuts) fail("certificate differs from the cuts recorded per iteration");

  bool feasible = false;
  int expected_n = 0;
  CertificateCheck cc;
  LowerBounds bounds;
  bool bounds_known = false;
  try {
    switch (instance.kind) {
      case ProblemKind::kTwoEcs: {
        const auto& t = std::get<TwoECSInstance>(instance.data);
        for (int e : sorted)
          if (e < 0 || e >= t.graph.edge_count()) throw std::invalid_argument("edge id out of range");
        feasible = check_feasible(t, EdgeSolution{sorted});
        expected_n = t.graph.vertex_count();
        if (r.certificate.kind != CertificateKind::kTwoEcs) throw std::invalid_argument("certificate kind is not 2ecs");
        cc = verify_certificate(t, r.certificate);
        if (cc.feasible) bounds = lower_bounds(t, r.certificate), bounds_known = true;
        break;
      }
      case ProblemKind::kSsc:
      case ProblemKind::kMscs: {
        SSCInstance s = instance.kind == ProblemKind::kSsc ? std::get<SSCInstance>(instance.data)
                                                           : mscs_to_ssc(std::get<Digraph>(instance.data));
        for (int f : sorted)
          if (f < 0 || f >= s.star_count()) throw std::invalid_argument("star id out of range");
        feasible = check_feasible(s, StarSolution{sorted});
        expected_n = s.vertex_count();
        if (r.certificate.kind != CertificateKind::kSsc) throw std::invalid_argument("certificate kind is not ssc");
        cc = verify_certificate(s, r.certificate);
        if (cc.feasible) bounds = lower_bounds(s, r.certificate), bounds_known = true;
        break;
      }
      case ProblemKind::kDpa: {
        const auto& d = std::get<DPAInstance>(instance.data);
        for (int v : sorted)
          if (v < 0 || v >= d.vertex_count()) throw std::invalid_argument("vertex id out of range");
        feasible = check_feasible(d, PowerSolution{sorted});
        expected_n = dpa_to_ssc(d).instance.vertex_count();
        if (r.certificate.kind != CertificateKind::kSsc) throw std::invalid_argument("certificate kind is not ssc");
        cc = verify_certificate(d, r.certificate);
        if (cc.feasible) bounds = lower_bounds(d, r.certificate), bounds_known = true;
        break;
      }
    }
  } catch (const std::exception& e) {
    fail(std::string("invalid report content: ") + e.what());
    return out;
  }
  if (!feasible) fail("selected solution is infeasible");
  if (!r.feasible) fail("report does not claim feasibility");
  if (r.n != expected_n) fail("n differs from the instance");
  for (const Violation& v : cc.violations) {
    std::string cuts;
    for (int c : v.cuts) cuts += (cuts.empty() ? "" : ",") + std::to_string(c + 1);
    fail("certificate violation: element " + std::to_string(v.element + 1) + " crosses cuts " + cuts);
  }
  if (bounds_known) {
    if (bounds.dual_objective != r.bounds.dual_objective || bounds.n_bound != r.bounds.n_bound || bounds.best != r.bounds.best)
      fail("reported bounds differ from the recomputed ones");
    RunReport recomputed = r;
    finalize_report(recomputed, bounds);
    if (recomputed.convex_bound != r.convex_bound) fail("convex bound differs from the recomputed one");
    if (recomputed.ratio_vs_best != r.ratio_vs_best) fail("ratio differs from the recomputed one");
    if (recomputed.histogram != r.histogram) fail("histogram differs from the iterations");
    if (bounds.best > r.cost) fail("lower bound exceeds the cost");
  }
  IdentityCheck ids = check_identities(r);
  for (const std::string& f : ids.failures) fail("identity failed: " + f);
  return out;
}

ExactResult exact_optimum(const AnyInstance& instance, int limit) {
  require_feasible(instance);
  switch (instance.kind) {
    case ProblemKind::kTwoEcs:
      return exact_2ecs(std::get<TwoECSInstance>(instance.data), limit);
    case ProblemKind::kSsc:
      return exact_ssc(std::get<SSCInstance>(instance.data), limit);
    case ProblemKind::kMscs:
      return exact_ssc(mscs_to_ssc(std::get<Digraph>(instance.data)), limit);
    case ProblemKind::kDpa: {
      const auto& d = std::get<DPAInstance>(instance.data);
      DpaAsSsc map = dpa_to_ssc(d);
      if (auto w = hamiltonian_witness(map.instance, kDefaultHamiltonianBudget); w && check_feasible(map.instance, *w)) {
        PowerSolution p = to_power_solution(map, *w);
        if (check_feasible(d, p)) return {p.cost(), p.high, ExactMethod::kHamiltonianCertificate, 0};
      }
      if (map.instance.vertex_count() == 1) return {0, {}, ExactMethod::kSearch, 0};
      return exact_dpa(d, limit);
    }
  }
  throw std::logic_error("exact_optimum: unknown problem kind");
}

GapOutcome gap(const AnyInstance& instance, Advisor& advisor, StarAlgorithm algorithm, int limit) {
  GapOutcome out;
  out.report = solve(instance, advisor, algorithm);
  out.exact = exact_optimum(instance, limit);
  out.ratio = out.exact.optimum == 0 ? Rational::of(out.report.cost == 0 ? 1 : 0, 1)
                                     : Rational::of(out.report.cost, out.exact.optimum);
  return out;
}

}  // namespace dualcut
