// Copyright 2023 The Authors.
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

#include "matching.hpp"

#include <algorithm>

#include "error.hpp"

namespace fairdiv {
namespace {

bool try_augment(int u, const std::vector<std::vector<int>>& adjacency,
                 std::vector<int>& left_match, std::vector<int>& right_match,
                 std::vector<char>& visited) {
  for (int v : adjacency[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (right_match[v] == -1 ||
        try_augment(right_match[v], adjacency, left_match, right_match,
                    visited)) {
      left_match[u] = v;
      right_match[v] = u;
      return true;
    }
  }
  return false;
}

MatchingResult run(int left_size, int right_size,
                   const std::vector<std::vector<int>>& adjacency,
                   const std::vector<int>& order) {
  if (static_cast<int>(adjacency.size()) != left_size) {
    throw_invalid("adjacency size does not match left side");
  }
  for (const auto& row : adjacency) {
    for (int v : row) {
      if (v < 0 || v >= right_size) throw_invalid("right vertex out of range");
    }
    if (!std::is_sorted(row.begin(), row.end())) {
      throw_invalid("adjacency rows must be sorted ascending");
    }
  }
  MatchingResult result;
  result.left_match.assign(left_size, -1);
  result.right_match.assign(right_size, -1);
  std::vector<char> visited(right_size, 0);
  for (int u : order) {
    std::fill(visited.begin(), visited.end(), 0);
    if (try_augment(u, adjacency, result.left_match, result.right_match,
                    visited)) {
      ++result.size;
    }
  }
  return result;
}

}  // namespace

MatchingResult max_matching(int left_size, int right_size,
                            const std::vector<std::vector<int>>& adjacency) {
  std::vector<int> order(left_size);
  for (int i = 0; i < left_size; ++i) order[i] = i;
  return run(left_size, right_size, adjacency, order);
}

MatchingResult priority_matching(int left_size, int right_size,
                                 const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != left_size) {
    throw_invalid("priority order must cover the whole left side");
  }
  std::vector<char> seen(left_size, 0);
  for (int u : sigma) {
    if (u < 0 || u >= left_size || seen[u]) {
      throw_invalid("priority order must be a permutation of the left side");
    }
    seen[u] = 1;
  }
  MatchingResult result = run(left_size, right_size, adjacency, sigma);
  // Certificate that the priority matching is also maximum-cardinality:
  // no unmatched left vertex may admit an augmenting path.
  std::vector<char> visited(right_size, 0);
  for (int u = 0; u < left_size; ++u) {
    if (result.left_match[u] != -1) continue;
    std::fill(visited.begin(), visited.end(), 0);
    std::vector<int> lm = result.left_match;
    std::vector<int> rm = result.right_match;
    if (try_augment(u, adjacency, lm, rm, visited)) {
      throw_internal("priority matching is not maximum-cardinality");
    }
  }
  return result;
}

}  // namespace fairdiv
