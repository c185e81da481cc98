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

// Integer dual solutions for the cut-based relaxations. A certificate is a
// family of cuts over ORIGINAL vertex ids with every multiplier equal to 1;
// when no star (resp. edge) crosses two of its cuts it is dual feasible and
// its objective lower-bounds the optimum by weak duality.

#ifndef DUALCUT_CERTIFICATE_HPP_
#define DUALCUT_CERTIFICATE_HPP_

#include <vector>

#include "dualcut/instance.hpp"

namespace dualcut {

struct Cut {
  VertexSet side;  // nonempty proper subset of the vertices
  friend bool operator==(const Cut&, const Cut&) = default;
};

Cut make_cut(std::vector<VertexId> side);

// Throws std::invalid_argument unless 0 < |side| < vertex_count and ids are
// in range.
void validate_cut(const Cut& cut, int vertex_count);

enum class CertificateKind { kSsc, kTwoEcs };

struct DualCertificate {
  CertificateKind kind = CertificateKind::kSsc;
  std::vector<Cut> cuts;
};

// Stars whose source is in the cut and some sink is outside it.
std::vector<StarId> crossing_stars(const SSCInstance& s, const Cut& cut);
// Edges with exactly one endpoint in the cut.
std::vector<EdgeId> crossing_edges(const TwoECSInstance& t, const Cut& cut);

struct Violation {
  int element = 0;        // star id or edge id
  std::vector<int> cuts;  // indices of the cuts it crosses (>= 2)
};

struct CertificateCheck {
  bool feasible = false;
  int objective = 0;  // |cuts| for SSC, 2|cuts| for 2ECS
  std::vector<Violation> violations;
};

CertificateCheck verify_certificate(const SSCInstance& s, const DualCertificate& cert);
CertificateCheck verify_certificate(const TwoECSInstance& t, const DualCertificate& cert);

// DPA certificates are cuts over DPA vertices that never split a zero-cost
// component; they are checked on the SSC transform, whose stars are the
// DPA vertices with edges leaving their component. A splitting cut throws
// std::invalid_argument.
CertificateCheck verify_certificate(const DPAInstance& d, const DualCertificate& cert);
DualCertificate lift_to_dpa(const DpaAsSsc& map, const DualCertificate& cert);
DualCertificate project_to_ssc(const DpaAsSsc& map, const DualCertificate& cert);

// For SSC the n bound comes from the all-singletons dual; for 2ECS it is
// the counting bound (every vertex has degree >= 2), which is not a dual
// solution of the 2ECS program.
struct LowerBounds {
  int dual_objective = 0;
  int n_bound = 0;
  int best = 0;
};

// Throws PreconditionError if the certificate is infeasible.
LowerBounds lower_bounds(const SSCInstance& s, const DualCertificate& cert);
LowerBounds lower_bounds(const TwoECSInstance& t, const DualCertificate& cert);
// Bounds of the SSC transform (n counts zero-cost components).
LowerBounds lower_bounds(const DPAInstance& d, const DualCertificate& cert);

// {{v} : v in V}; feasible on every SSC instance.
DualCertificate singleton_certificate(int vertex_count);

}  // namespace dualcut

#endif  // DUALCUT_CERTIFICATE_HPP_
