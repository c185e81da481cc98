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

#ifndef DUALCUT_GRAPH_INL_HPP_
#define DUALCUT_GRAPH_INL_HPP_

#include <stdexcept>
#include <vector>

namespace dualcut {

template <class ArcFilter>
std::vector<VertexId> reachable_avoiding(const Digraph& g, VertexId start, ArcFilter&& forbidden) {
  if (start < 0 || start >= g.vertex_count()) throw std::out_of_range("reachable_avoiding: bad start vertex");
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexId> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.out_arcs(v)) {
      if (forbidden(a)) continue;
      VertexId h = g.arc(a).head;
      if (!seen[static_cast<std::size_t>(h)]) {
        seen[static_cast<std::size_t>(h)] = 1;
        stack.push_back(h);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

}  // namespace dualcut

#endif  // DUALCUT_GRAPH_INL_HPP_
