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

#include "dualcut/perfect_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dualcut/error.hpp"

namespace dualcut {
namespace {

bool contains(const VertexSet& set, VertexId v) { return std::binary_search(set.begin(), set.end(), v); }

std::vector<char> mask_of(int n, std::span<const VertexId> vertices) {
  std::vector<char> m(n, 0);
  for (VertexId v : vertices) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " is not a current vertex");
    m[v] = 1;
  }
  return m;
}

void check_proper_cut(const LiveInstance& li, std::span<const VertexId> cut) {
  VertexSet s = make_vertex_set({cut.begin(), cut.end()});
  if (s.empty() || static_cast<int>(s.size()) >= li.vertex_count()) throw std::invalid_argument("cut is not a nonempty proper subset");
  if (s.front() < 0 || s.back() >= li.vertex_count()) throw std::invalid_argument("cut vertex out of range");
}

}  // namespace

LiveInstance::LiveInstance(std::shared_ptr<const SSCInstance> base) : base_(std::move(base)) {
  partition_ = VertexPartition::identity(base_->vertex_count());
  stars_.reserve(base_->stars().size());
  for (const Star& f : base_->stars()) stars_.push_back({f.source, f.sinks});
  rebuild();
}

void LiveInstance::rebuild() {
  const int n = vertex_count();
  live_.clear();
  out_.assign(n, {});
  in_.assign(n, {});
  from_.assign(n, {});
  arc_index_.clear();
  for (StarId f = 0; f < static_cast<StarId>(stars_.size()); ++f) {
    const LiveStar& s = stars_[f];
    if (s.sinks.empty()) continue;
    live_.push_back(f);
    from_[s.source].push_back(f);
    for (VertexId v : s.sinks) {
      arc_index_.push_back({Arc{s.source, v}, f});
      out_[s.source].push_back(v);
      in_[v].push_back(s.source);
    }
  }
  std::sort(arc_index_.begin(), arc_index_.end());
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < n; ++v) {
    out_[v] = make_vertex_set(std::move(out_[v]));
    in_[v] = make_vertex_set(std::move(in_[v]));
    for (VertexId h : out_[v]) arcs.push_back({v, h});
  }
  digraph_ = Digraph(n, std::move(arcs));
}

bool LiveInstance::is_live(StarId f) const {
  return f >= 0 && f < static_cast<StarId>(stars_.size()) && !stars_[f].sinks.empty();
}

const LiveStar& LiveInstance::star(StarId f) const {
  if (!is_live(f)) throw std::out_of_range("star " + std::to_string(f) + " is not live");
  return stars_[f];
}

VertexSet LiveInstance::neighbors(VertexId v) const {
  VertexSet out = out_.at(v);
  out.insert(out.end(), in_[v].begin(), in_[v].end());
  return make_vertex_set(std::move(out));
}

bool LiveInstance::has_arc(VertexId tail, VertexId head) const { return contains(out_.at(tail), head); }

bool LiveInstance::is_bidirected() const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (out_[v] != in_[v]) return false;
  return true;
}

std::vector<StarId> LiveInstance::stars_with_arc(VertexId tail, VertexId head) const {
  const Arc key{tail, head};
  auto lo = std::lower_bound(arc_index_.begin(), arc_index_.end(), std::pair<Arc, StarId>{key, -1});
  std::vector<StarId> out;
  for (auto it = lo; it != arc_index_.end() && it->first == key; ++it) out.push_back(it->second);
  return out;
}

Cut LiveInstance::lift(std::span<const VertexId> current) const { return Cut{partition_.lift(current)}; }

LiveInstance LiveInstance::merged(std::span<const VertexId> block) const {
  VertexPartition step = merge_partition(vertex_count(), block);
  LiveInstance next;
  next.base_ = base_;
  next.partition_ = partition_.then(step);
  next.stars_.resize(stars_.size());
  for (StarId f : live_) {
    LiveStar s{step[stars_[f].source], {}};
    for (VertexId v : stars_[f].sinks) {
      VertexId w = step[v];
      if (w != s.source) s.sinks.push_back(w);
    }
    s.sinks = make_vertex_set(std::move(s.sinks));
    next.stars_[f] = std::move(s);
  }
  next.rebuild();
  return next;
}

VertexSet sources_of(const LiveInstance& li, std::span<const StarId> q) {
  VertexSet out;
  for (StarId f : q) out.push_back(li.star(f).source);
  return make_vertex_set(std::move(out));
}

bool is_quasiperfect(const LiveInstance& li, std::span<const StarId> q) {
  if (q.empty()) return false;
  VertexSet src = sources_of(li, q);
  if (src.size() != q.size()) return false;
  // Arcs leaving source(q) are ignored.
  std::vector<Arc> arcs;
  for (StarId f : q) {
    const LiveStar& s = li.star(f);
    VertexId t = static_cast<VertexId>(std::lower_bound(src.begin(), src.end(), s.source) - src.begin());
    for (VertexId v : s.sinks) {
      auto it = std::lower_bound(src.begin(), src.end(), v);
      if (it != src.end() && *it == v) arcs.push_back({t, static_cast<VertexId>(it - src.begin())});
    }
  }
  return is_strongly_connected(Digraph(static_cast<int>(src.size()), std::move(arcs)));
}

bool is_perfect(const LiveInstance& li, std::span<const StarId> q) {
  if (!is_quasiperfect(li, q)) return false;
  VertexSet src = sources_of(li, q);
  for (StarId f : q)
    for (VertexId v : li.star(f).sinks)
      if (!contains(src, v)) return false;
  return true;
}

std::vector<StarId> augment_to_perfect(const LiveInstance& li, std::span<const StarId> q, Advisor& advisor) {
  if (!is_quasiperfect(li, q)) throw PreconditionError("augment_to_perfect: set is not quasiperfect");
  const int n = li.vertex_count();
  std::vector<StarId> set(q.begin(), q.end());
  std::sort(set.begin(), set.end());
  while (true) {
    VertexSet src = sources_of(li, set);
    std::vector<VertexId> pending;
    for (StarId f : set)
      for (VertexId v : li.star(f).sinks)
        if (!contains(src, v)) pending.push_back(v);
    pending = make_vertex_set(std::move(pending));
    if (pending.empty()) return set;
    VertexId u = pending[advisor.choose(ChoicePoint::kAugmentSink, pending.size())];

    // Depth-first search from u to source(set), children in advisor order.
    std::vector<char> in_src = mask_of(n, src);
    std::vector<char> visited(n, 0);
    struct Frame {
      VertexId v;
      std::vector<VertexId> rest;
    };
    std::vector<Frame> stack;
    // An arc straight into source(set) ends the path, so when one exists
    // only those arcs are offered; on bidirected instances every path is
    // then the single reverse arc.
    auto open = [&](VertexId v) {
      visited[v] = 1;
      std::vector<VertexId> rest, home;
      for (VertexId w : li.out_neighbors(v)) {
        if (in_src[w]) home.push_back(w);
        else if (!visited[w]) rest.push_back(w);
      }
      stack.push_back({v, home.empty() ? std::move(rest) : std::move(home)});
    };
    open(u);
    std::vector<VertexId> path;
    while (path.empty()) {
      if (stack.empty()) throw std::logic_error("augment_to_perfect: no path back to the set (instance not strongly connected)");
      Frame& top = stack.back();
      if (top.rest.empty()) {
        stack.pop_back();
        continue;
      }
      std::size_t i = advisor.choose(ChoicePoint::kAugmentStep, top.rest.size());
      VertexId w = top.rest[i];
      top.rest.erase(top.rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (in_src[w]) {
        for (const Frame& fr : stack) path.push_back(fr.v);
        path.push_back(w);
      } else if (!visited[w]) {
        open(w);
      }
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      std::vector<StarId> cand = li.stars_with_arc(path[i], path[i + 1]);
      set.push_back(cand[advisor.choose(ChoicePoint::kStarForArc, cand.size())]);
    }
    std::sort(set.begin(), set.end());
  }
}

std::vector<StarId> crossing_stars(const LiveInstance& li, std::span<const VertexId> cut) {
  std::vector<char> in = mask_of(li.vertex_count(), cut);
  std::vector<StarId> out;
  for (StarId f : li.live_stars()) {
    const LiveStar& s = li.star(f);
    if (!in[s.source]) continue;
    if (std::any_of(s.sinks.begin(), s.sinks.end(), [&](VertexId v) { return !in[v]; })) out.push_back(f);
  }
  return out;
}

bool is_internal_cut(const LiveInstance& li, std::span<const StarId> q, std::span<const VertexId> cut) {
  check_proper_cut(li, cut);
  VertexSet src = sources_of(li, q);
  for (StarId f : crossing_stars(li, cut)) {
    const LiveStar& s = li.star(f);
    if (!contains(src, s.source)) return false;
    for (VertexId v : s.sinks)
      if (!contains(src, v)) return false;
  }
  return true;
}

bool are_star_disjoint(const LiveInstance& li, std::span<const VertexId> cut1, std::span<const VertexId> cut2) {
  check_proper_cut(li, cut1);
  check_proper_cut(li, cut2);
  std::vector<StarId> a = crossing_stars(li, cut1), b = crossing_stars(li, cut2);
  std::vector<StarId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

LiveInstance contract_perfect(const LiveInstance& li, std::span<const StarId> q) {
  if (!is_perfect(li, q)) throw PreconditionError("contract_perfect: set is not perfect");
  VertexSet src = sources_of(li, q);
  return li.merged(src);
}

std::vector<StarId> stars_for_cycle(const LiveInstance& li, std::span<const VertexId> cycle, Advisor& advisor) {
  std::vector<StarId> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    VertexId t = cycle[i], h = cycle[(i + 1) % cycle.size()];
    std::vector<StarId> cand = li.stars_with_arc(t, h);
    if (cand.empty()) throw std::logic_error("stars_for_cycle: arc " + std::to_string(t) + "->" + std::to_string(h) + " missing");
    out.push_back(cand[advisor.choose(ChoicePoint::kStarForArc, cand.size())]);
  }
  return out;
}

void validate_choice(const LiveInstance& li, const PerfectSetChoice& choice) {
  const std::string rule = choice.rule;
  if (!is_perfect(li, choice.stars)) throw std::logic_error(rule + ": selected set is not perfect");
  for (const VertexSet& cut : choice.cuts)
    if (!is_internal_cut(li, choice.stars, cut)) throw std::logic_error(rule + ": cut is not internal");
  if (choice.cuts.size() == 2 && !are_star_disjoint(li, choice.cuts[0], choice.cuts[1]))
    throw std::logic_error(rule + ": cuts are not star-disjoint");
  if (choice.kind == SetKind::kTwoCuts && choice.cuts.size() != 2) throw std::logic_error(rule + ": expected two cuts");
  if (choice.kind == SetKind::kBigOneCut && (choice.stars.size() < 4 || choice.cuts.empty()))
    throw std::logic_error(rule + ": expected at least four stars and one cut");
}

std::vector<PerfectSetRecord> contract_until_single(LiveInstance li, const PerfectSetFinder& find, Advisor& advisor) {
  std::vector<PerfectSetRecord> records;
  while (li.vertex_count() > 1) {
    if (!is_strongly_connected(li.digraph())) throw std::logic_error("live instance lost strong connectivity");
    PerfectSetChoice choice = find(li, advisor);
    validate_choice(li, choice);
    PerfectSetRecord rec;
    rec.stars = choice.stars;
    std::sort(rec.stars.begin(), rec.stars.end());
    for (const VertexSet& cut : choice.cuts) rec.internal_cuts.push_back(li.lift(cut));
    rec.size = static_cast<int>(rec.stars.size());
    rec.kind = choice.kind;
    rec.rule = choice.rule;
    rec.vertices_before = li.vertex_count();
    li = contract_perfect(li, rec.stars);
    records.push_back(std::move(rec));
  }
  return records;
}

RunReport make_star_report(const SSCInstance& s, const std::vector<PerfectSetRecord>& records, std::string algorithm,
                           const Advisor& advisor) {
  RunReport report;
  report.problem = ProblemKind::kSsc;
  report.algorithm = std::move(algorithm);
  report.n = s.vertex_count();
  report.certificate.kind = CertificateKind::kSsc;
  for (const PerfectSetRecord& rec : records) {
    IterationRecord it{rec.stars, rec.internal_cuts, rec.size, rec.rule, rec.vertices_before};
    report.selected.insert(report.selected.end(), rec.stars.begin(), rec.stars.end());
    report.certificate.cuts.insert(report.certificate.cuts.end(), rec.internal_cuts.begin(), rec.internal_cuts.end());
    report.iterations.push_back(std::move(it));
  }
  std::sort(report.selected.begin(), report.selected.end());
  report.cost = static_cast<int>(report.selected.size());
  report.advisor = advisor.stats();
  report.feasible = check_feasible(s, StarSolution{report.selected});
  if (!verify_certificate(s, report.certificate).feasible) throw std::logic_error("certificate is not dual feasible");
  finalize_report(report, lower_bounds(s, report.certificate));
  return report;
}

}  // namespace dualcut
