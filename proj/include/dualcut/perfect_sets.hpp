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

// The contracted SSC instance carried through a run, and the perfect-set
// machinery built on it.
//
// A set Q of live stars is quasiperfect when its sources are distinct and
// the arcs of Q among source(Q) form a strongly connected digraph; it is
// perfect when additionally every sink of Q lies in source(Q). Contracting
// a perfect set merges source(Q) into one supervertex and leaves another
// SSC instance. A cut S (over current vertices) is internal to Q when every
// live star crossing S has its source and all of its sinks in source(Q);
// contracting Q then deletes every crosser of S, which is what makes the
// internal cuts collected over a run pairwise star-disjoint.

#ifndef DUALCUT_PERFECT_SETS_HPP_
#define DUALCUT_PERFECT_SETS_HPP_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dualcut/advisor.hpp"
#include "dualcut/certificate.hpp"
#include "dualcut/instance.hpp"
#include "dualcut/report.hpp"

namespace dualcut {

struct LiveStar {
  VertexId source = 0;  // current id
  VertexSet sinks;      // current ids, never empty, never the source
};

class LiveInstance {
 public:
  explicit LiveInstance(std::shared_ptr<const SSCInstance> base);
  explicit LiveInstance(const SSCInstance& base) : LiveInstance(std::make_shared<const SSCInstance>(base)) {}

  const SSCInstance& base() const { return *base_; }
  const std::shared_ptr<const SSCInstance>& base_ptr() const { return base_; }
  const VertexPartition& partition() const { return partition_; }
  int vertex_count() const { return partition_.current_count(); }

  bool is_live(StarId f) const;
  const LiveStar& star(StarId f) const;  // throws std::out_of_range if dead
  const std::vector<StarId>& live_stars() const { return live_; }

  // Current derived digraph: one arc per distinct (tail, head), sorted.
  const Digraph& digraph() const { return digraph_; }
  const VertexSet& out_neighbors(VertexId v) const { return out_[v]; }
  const VertexSet& in_neighbors(VertexId v) const { return in_[v]; }
  // In- or out-neighbors.
  VertexSet neighbors(VertexId v) const;
  bool has_arc(VertexId tail, VertexId head) const;
  bool is_bidirected() const;

  // Live stars containing the arc, ascending.
  std::vector<StarId> stars_with_arc(VertexId tail, VertexId head) const;
  // Live stars sourced at v, ascending.
  const std::vector<StarId>& stars_from(VertexId v) const { return from_[v]; }

  // Original vertices making up a set of current vertices.
  Cut lift(std::span<const VertexId> current) const;

  // Merges `block` into one supervertex: sinks are remapped and
  // deduplicated, arcs inside the block vanish, emptied stars die.
  LiveInstance merged(std::span<const VertexId> block) const;

 private:
  LiveInstance() = default;
  void rebuild();

  std::shared_ptr<const SSCInstance> base_;
  VertexPartition partition_;
  std::vector<LiveStar> stars_;  // indexed by StarId; dead stars have empty sinks
  std::vector<StarId> live_;
  Digraph digraph_;
  std::vector<VertexSet> out_, in_;
  std::vector<std::vector<StarId>> from_;
  std::vector<std::pair<Arc, StarId>> arc_index_;  // sorted
};

// Distinct source vertices of q, sorted. Throws on dead ids.
VertexSet sources_of(const LiveInstance& li, std::span<const StarId> q);

bool is_quasiperfect(const LiveInstance& li, std::span<const StarId> q);
bool is_perfect(const LiveInstance& li, std::span<const StarId> q);

// Grows a quasiperfect set into a perfect superset. While some star of the
// set has a sink u outside its sources, a depth-first search finds a path
// from u back to the sources whose internal vertices avoid them, and one
// star per path arc joins the set. Returns the result sorted.
std::vector<StarId> augment_to_perfect(const LiveInstance& li, std::span<const StarId> q, Advisor& advisor);

// Live stars crossing a cut given over current vertices.
std::vector<StarId> crossing_stars(const LiveInstance& li, std::span<const VertexId> cut);
bool is_internal_cut(const LiveInstance& li, std::span<const StarId> q, std::span<const VertexId> cut);
bool are_star_disjoint(const LiveInstance& li, std::span<const VertexId> cut1, std::span<const VertexId> cut2);

// Contracts source(q). Throws PreconditionError unless q is perfect.
LiveInstance contract_perfect(const LiveInstance& li, std::span<const StarId> q);

// One star per arc of a cycle given as an ordered vertex list
// (cycle[i] -> cycle[i+1], last -> first), chosen by the advisor.
std::vector<StarId> stars_for_cycle(const LiveInstance& li, std::span<const VertexId> cycle, Advisor& advisor);

enum class SetKind { kTwoCuts, kBigOneCut };

// A perfect set together with its internal cuts over current vertices.
struct PerfectSetChoice {
  std::vector<StarId> stars;
  std::vector<VertexSet> cuts;
  SetKind kind = SetKind::kTwoCuts;
  const char* rule = "";  // construction branch that produced it
};

// One contraction step of a run, cuts lifted to original vertices.
struct PerfectSetRecord {
  std::vector<StarId> stars;
  std::vector<Cut> internal_cuts;
  int size = 0;
  SetKind kind = SetKind::kTwoCuts;
  std::string rule;
  int vertices_before = 0;
};

// Throws std::logic_error describing the first failed check: q perfect,
// every cut internal, two cuts star-disjoint, and the size/cut-count
// contract of `kind`.
void validate_choice(const LiveInstance& li, const PerfectSetChoice& choice);

using PerfectSetFinder = std::function<PerfectSetChoice(const LiveInstance&, Advisor&)>;

// Finds, validates and contracts perfect sets until one vertex is left.
std::vector<PerfectSetRecord> contract_until_single(LiveInstance li, const PerfectSetFinder& find, Advisor& advisor);

// Report for a star-selection run on `s`: selected stars, lifted cuts,
// verified certificate, feasibility and bounds.
RunReport make_star_report(const SSCInstance& s, const std::vector<PerfectSetRecord>& records, std::string algorithm,
                           const Advisor& advisor);

}  // namespace dualcut

#endif  // DUALCUT_PERFECT_SETS_HPP_
