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

#ifndef FAIRDIV_SRC_MATCHING_HPP_
#define FAIRDIV_SRC_MATCHING_HPP_

#include <vector>

namespace fairdiv {

struct MatchingResult {
  std::vector<int> left_match;   // left id -> right id or -1
  std::vector<int> right_match;  // right id -> left id or -1
  int size = 0;
};

// Maximum-cardinality bipartite matching by augmenting paths. Left
// vertices are processed in ascending id order, and each augmenting
// search scans neighbours in ascending right id, so the result is
// deterministic. adjacency[u] lists the right neighbours of left u.
MatchingResult max_matching(int left_size, int right_size,
                            const std::vector<std::vector<int>>& adjacency);

// Priority matching: left vertices are offered augmenting paths in
// sigma order, and augmentation never unmatches a previously matched
// left vertex, which yields the lexicographically maximal saturation
// vector with respect to sigma. sigma must be a permutation of the
// left side. The result is also maximum-cardinality; this is verified
// before returning.
MatchingResult priority_matching(int left_size, int right_size,
                                 const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<int>& sigma);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_MATCHING_HPP_
