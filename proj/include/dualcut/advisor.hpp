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

// Resolution of the constructions' free choices ("any arc", "a star
// containing e", ...). Every choice point presents a canonically ordered
// candidate list; the advisor returns an index into it. Choice points with
// a single candidate are resolved without consulting the advisor, so
// scripts only contain real decisions.

#ifndef DUALCUT_ADVISOR_HPP_
#define DUALCUT_ADVISOR_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace dualcut {

enum class ChoicePoint {
  kStartArc,        // first arc of a path construction
  kExtendPath,      // next vertex when growing a path
  kRotate,          // off-path vertex taken after a rotation
  kFirstEdge,       // first edge of the 2ECS path construction
  kStarForArc,      // which star represents a given arc
  kStar,            // star picked among several qualifying stars
  kLeaf,            // leaf picked among several qualifying leaves
  kSink,            // sink picked among several qualifying sinks
  kCycleDirection,  // traversal direction around a cycle
  kAugmentSink,     // which uncovered sink the augmentation resolves next
  kAugmentStep,     // depth-first search child order in the augmentation
};

std::string_view to_string(ChoicePoint point);

struct AdviceScript {
  std::vector<std::size_t> choices;
};

struct AdvisorStats {
  int decisions = 0;  // choice points with more than one candidate
  int consumed = 0;   // script entries used
  int fallbacks = 0;  // out-of-range or exhausted script entries
};

class Advisor {
 public:
  virtual ~Advisor() = default;

  // Index in [0, candidates). Throws std::logic_error when candidates == 0.
  std::size_t choose(ChoicePoint point, std::size_t candidates);

  const AdvisorStats& stats() const { return stats_; }
  // Index returned at every decision, in order; replaying it as a script
  // reproduces the run.
  const std::vector<std::size_t>& history() const { return history_; }

 protected:
  virtual std::size_t pick(ChoicePoint point, std::size_t candidates) = 0;
  AdvisorStats stats_;

 private:
  std::vector<std::size_t> history_;
};

// Always the first candidate (smallest id).
class DefaultAdvisor final : public Advisor {
 protected:
  std::size_t pick(ChoicePoint, std::size_t) override { return 0; }
};

class ScriptedAdvisor final : public Advisor {
 public:
  explicit ScriptedAdvisor(AdviceScript script) : script_(std::move(script)) {}

 protected:
  std::size_t pick(ChoicePoint point, std::size_t candidates) override;

 private:
  AdviceScript script_;
  std::size_t next_ = 0;
};

// Uniform choices from a seeded mt19937_64.
class RandomAdvisor final : public Advisor {
 public:
  explicit RandomAdvisor(std::uint64_t seed) : rng_(seed) {}

 protected:
  std::size_t pick(ChoicePoint point, std::size_t candidates) override;

 private:
  std::mt19937_64 rng_;
};

// Uniform integer in [0, bound) by rejection sampling on mt19937_64 output,
// so sequences are reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace dualcut

#endif  // DUALCUT_ADVISOR_HPP_
