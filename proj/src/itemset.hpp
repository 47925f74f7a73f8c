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

#ifndef FAIRDIV_SRC_ITEMSET_HPP_
#define FAIRDIV_SRC_ITEMSET_HPP_

#include <algorithm>
#include <vector>

namespace fairdiv {

// Item sets are sorted ascending with no duplicates.
using ItemSet = std::vector<int>;

inline bool set_contains(const ItemSet& s, int item) {
  return std::binary_search(s.begin(), s.end(), item);
}

inline void set_insert(ItemSet& s, int item) {
  auto it = std::lower_bound(s.begin(), s.end(), item);
  if (it == s.end() || *it != item) s.insert(it, item);
}

inline void set_erase(ItemSet& s, int item) {
  auto it = std::lower_bound(s.begin(), s.end(), item);
  if (it != s.end() && *it == item) s.erase(it);
}

inline ItemSet set_with(const ItemSet& s, int item) {
  ItemSet out = s;
  set_insert(out, item);
  return out;
}

inline ItemSet set_without(const ItemSet& s, int item) {
  ItemSet out = s;
  set_erase(out, item);
  return out;
}

inline bool is_valid_set(const ItemSet& s, int ground_size) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= ground_size) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_ITEMSET_HPP_
