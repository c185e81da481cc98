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

#include "dualcut/certificate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

std::vector<char> membership(const Cut& cut, int n) {
  std::vector<char> in(n, 0);
  for (VertexId v : cut.side) in[v] = 1;
  return in;
}

// Groups element -> crossing cut indices and reports every element crossed
// twice or more.
template <class CrossFn>
CertificateCheck check_disjoint(int element_count, const DualCertificate& cert, CrossFn crossing) {
  std::vector<std::vector<int>> hits(element_count);
  for (int c = 0; c < static_cast<int>(cert.cuts.size()); ++c)
    for (int e : crossing(cert.cuts[c])) hits[e].push_back(c);
  CertificateCheck out;
  for (int e = 0; e < element_count; ++e)
    if (hits[e].size() >= 2) out.violations.push_back({e, hits[e]});
  out.feasible = out.violations.empty();
  return out;
}

}  // namespace

Cut make_cut(std::vector<VertexId> side) { return Cut{make_vertex_set(std::move(side))}; }

void validate_cut(const Cut& cut, int vertex_count) {
  if (cut.side.empty()) throw std::invalid_argument("cut is empty");
  if (static_cast<int>(cut.side.size()) >= vertex_count) throw std::invalid_argument("cut is not a proper subset");
  if (!std::is_sorted(cut.side.begin(), cut.side.end()) ||
      std::adjacent_find(cut.side.begin(), cut.side.end()) != cut.side.end())
    throw std::invalid_argument("cut vertices must be sorted and distinct");
  if (cut.side.front() < 0 || cut.side.back() >= vertex_count)
    throw std::invalid_argument("cut vertex out of range");
}

std::vector<StarId> crossing_stars(const SSCInstance& s, const Cut& cut) {
  validate_cut(cut, s.vertex_count());
  auto in = membership(cut, s.vertex_count());
  std::vector<StarId> out;
  for (StarId f = 0; f < s.star_count(); ++f) {
    const Star& star = s.star(f);
    if (!in[star.source]) continue;
    if (std::any_of(star.sinks.begin(), star.sinks.end(), [&](VertexId v) { return !in[v]; })) out.push_back(f);
  }
  return out;
}

std::vector<EdgeId> crossing_edges(const TwoECSInstance& t, const Cut& cut) {
  validate_cut(cut, t.graph.vertex_count());
  auto in = membership(cut, t.graph.vertex_count());
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < t.graph.edge_count(); ++e)
    if (in[t.graph.edge(e).u] != in[t.graph.edge(e).v]) out.push_back(e);
  return out;
}

CertificateCheck verify_certificate(const SSCInstance& s, const DualCertificate& cert) {
  if (cert.kind != CertificateKind::kSsc) throw std::invalid_argument("verify_certificate: not an SSC certificate");
  CertificateCheck out = check_disjoint(s.star_count(), cert, [&](const Cut& c) { return crossing_stars(s, c); });
  out.objective = static_cast<int>(cert.cuts.size());
  return out;
}

CertificateCheck verify_certificate(const TwoECSInstance& t, const DualCertificate& cert) {
  if (cert.kind != CertificateKind::kTwoEcs) throw std::invalid_argument("verify_certificate: not a 2ECS certificate");
  CertificateCheck out = check_disjoint(t.graph.edge_count(), cert, [&](const Cut& c) { return crossing_edges(t, c); });
  out.objective = 2 * static_cast<int>(cert.cuts.size());
  return out;
}

LowerBounds lower_bounds(const SSCInstance& s, const DualCertificate& cert) {
  CertificateCheck check = verify_certificate(s, cert);
  if (!check.feasible) throw PreconditionError("lower_bounds: certificate is not dual feasible");
  // The singleton dual needs at least two vertices to have proper cuts.
  LowerBounds b{check.objective, s.vertex_count() >= 2 ? s.vertex_count() : 0, 0};
  b.best = std::max(b.dual_objective, b.n_bound);
  return b;
}

LowerBounds lower_bounds(const TwoECSInstance& t, const DualCertificate& cert) {
  CertificateCheck check = verify_certificate(t, cert);
  if (!check.feasible) throw PreconditionError("lower_bounds: certificate is not dual feasible");
  // A single vertex needs no edges.
  const int n = t.graph.vertex_count();
  LowerBounds b{check.objective, n >= 2 ? n : 0, 0};
  b.best = std::max(b.dual_objective, b.n_bound);
  return b;
}

DualCertificate lift_to_dpa(const DpaAsSsc& map, const DualCertificate& cert) {
  DualCertificate out{CertificateKind::kSsc, {}};
  for (const Cut& c : cert.cuts) {
    std::vector<char> in = membership(c, map.instance.vertex_count());
    VertexSet side;
    for (VertexId v = 0; v < static_cast<VertexId>(map.component.size()); ++v)
      if (in[map.component[v]]) side.push_back(v);
    out.cuts.push_back(Cut{std::move(side)});
  }
  return out;
}

DualCertificate project_to_ssc(const DpaAsSsc& map, const DualCertificate& cert) {
  const int dpa_n = static_cast<int>(map.component.size());
  DualCertificate out{CertificateKind::kSsc, {}};
  for (const Cut& c : cert.cuts) {
    validate_cut(c, dpa_n);
    std::vector<char> in = membership(c, dpa_n);
    std::vector<int> state(map.instance.vertex_count(), -1);
    VertexSet side;
    for (VertexId v = 0; v < dpa_n; ++v) {
      int& st = state[map.component[v]];
      if (st >= 0 && st != in[v]) throw std::invalid_argument("cut splits a zero-cost component");
      st = in[v];
      if (in[v]) side.push_back(map.component[v]);
    }
    Cut projected = make_cut(std::move(side));
    validate_cut(projected, map.instance.vertex_count());
    out.cuts.push_back(std::move(projected));
  }
  return out;
}

CertificateCheck verify_certificate(const DPAInstance& d, const DualCertificate& cert) {
  DpaAsSsc map = dpa_to_ssc(d);
  CertificateCheck out = verify_certificate(map.instance, project_to_ssc(map, cert));
  for (Violation& v : out.violations) v.element = map.star_owner[v.element];
  return out;
}

LowerBounds lower_bounds(const DPAInstance& d, const DualCertificate& cert) {
  DpaAsSsc map = dpa_to_ssc(d);
  return lower_bounds(map.instance, project_to_ssc(map, cert));
}

DualCertificate singleton_certificate(int vertex_count) {
  DualCertificate cert{CertificateKind::kSsc, {}};
  if (vertex_count < 2) return cert;
  for (VertexId v = 0; v < vertex_count; ++v) cert.cuts.push_back(Cut{{v}});
  return cert;
}

}  // namespace dualcut
