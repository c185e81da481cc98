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

#include "dualcut/advisor.hpp"

#include <limits>
#include <string>
#include <stdexcept>

namespace dualcut {

std::string_view to_string(ChoicePoint point) {
  switch (point) {
    case ChoicePoint::kStartArc:
      return "start-arc";
    case ChoicePoint::kExtendPath:
      return "extend-path";
    case ChoicePoint::kRotate:
      return "rotate";
    case ChoicePoint::kFirstEdge:
      return "first-edge";
    case ChoicePoint::kStarForArc:
      return "star-for-arc";
    case ChoicePoint::kStar:
      return "star";
    case ChoicePoint::kLeaf:
      return "leaf";
    case ChoicePoint::kSink:
      return "sink";
    case ChoicePoint::kCycleDirection:
      return "cycle-direction";
    case ChoicePoint::kAugmentSink:
      return "augment-sink";
    case ChoicePoint::kAugmentStep:
      return "augment-step";
  }
  return "?";
}

std::size_t Advisor::choose(ChoicePoint point, std::size_t candidates) {
  if (candidates == 0) throw std::logic_error("Advisor: no candidates at " + std::string(to_string(point)));
  if (candidates == 1) return 0;
  ++stats_.decisions;
  std::size_t i = pick(point, candidates);
  if (i >= candidates) i = 0;
  history_.push_back(i);
  return i;
}

std::size_t ScriptedAdvisor::pick(ChoicePoint, std::size_t candidates) {
  if (next_ >= script_.choices.size()) {
    ++stats_.fallbacks;
    return 0;
  }
  ++stats_.consumed;
  std::size_t i = script_.choices[next_++];
  if (i >= candidates) {
    ++stats_.fallbacks;
    return 0;
  }
  return i;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::size_t RandomAdvisor::pick(ChoicePoint, std::size_t candidates) {
  return static_cast<std::size_t>(uniform_below(rng_, candidates));
}

}  // namespace dualcut
