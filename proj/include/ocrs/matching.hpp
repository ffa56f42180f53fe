// Copyright 2026 The Authors.
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

#ifndef OCRS_MATCHING_HPP
#define OCRS_MATCHING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ocrs/element_set.hpp"

namespace ocrs {

struct MatchingResult {
  int size = 0;
  std::vector<int> left_to_right;  // -1 when unmatched
  std::vector<int> right_to_left;  // -1 when unmatched
};

// Maximum bipartite matching restricted to the left vertices in `lefts` and
// to edges accepted by `edge_ok(u, v)`. Augmenting-path search proceeds in
// index order, so the result is deterministic for a given input.
template <typename EdgeOk>
MatchingResult max_matching_if(int left_count, int right_count,
                               const std::vector<std::vector<int>>& adjacency,
                               const ElementSet& lefts, EdgeOk&& edge_ok) {
  MatchingResult m;
  m.left_to_right.assign(left_count, -1);
  m.right_to_left.assign(right_count, -1);
  std::vector<char> visited(right_count, 0);

  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : adjacency[u]) {
      if (visited[v] || !edge_ok(u, v)) continue;
      visited[v] = 1;
      if (m.right_to_left[v] < 0 || self(self, m.right_to_left[v])) {
        m.right_to_left[v] = u;
        m.left_to_right[u] = v;
        return true;
      }
    }
    return false;
  };

  lefts.for_each([&](int u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, u)) ++m.size;
  });
  return m;
}

inline MatchingResult max_matching(
    int left_count, int right_count,
    const std::vector<std::vector<int>>& adjacency) {
  ElementSet all(left_count);
  for (int u = 0; u < left_count; ++u) all.set(u);
  return max_matching_if(left_count, right_count, adjacency, all,
                         [](int, int) { return true; });
}

// Matching size when each left vertex is given as a bitmask over at most 32
// right vertices. Tight loop used by the exhaustive enumeration paths.
inline int mask_matching_size(std::span<const std::uint32_t> left_masks) {
  int owner[32];
  for (int v = 0; v < 32; ++v) owner[v] = -1;

  auto augment = [&](auto&& self, int u, std::uint32_t& visited) -> bool {
    while (true) {
      std::uint32_t candidates = left_masks[u] & ~visited;
      if (!candidates) return false;
      int v = std::countr_zero(candidates);
      visited |= std::uint32_t{1} << v;
      if (owner[v] < 0 || self(self, owner[v], visited)) {
        owner[v] = u;
        return true;
      }
    }
  };

  int size = 0;
  for (std::size_t u = 0; u < left_masks.size(); ++u) {
    std::uint32_t visited = 0;
    if (augment(augment, static_cast<int>(u), visited)) ++size;
  }
  return size;
}

}  // namespace ocrs

#endif  // OCRS_MATCHING_HPP
