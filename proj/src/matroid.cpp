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

#include "matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "error.hpp"
#include "matching.hpp"

namespace fairdiv {

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw_invalid("negative ground set size");
}

void Matroid::check_set(const ItemSet& s) const {
  if (!is_valid_set(s, ground_size_)) {
    throw_invalid("item set must be sorted, unique and inside the ground set");
  }
}

UniformMatroid::UniformMatroid(int ground_size, long long capacity)
    : Matroid(ground_size), capacity_(capacity) {
  if (capacity < 0) throw_invalid("negative capacity");
}

bool UniformMatroid::is_independent(const ItemSet& s) const {
  check_set(s);
  return static_cast<long long>(s.size()) <= capacity_;
}

PartitionMatroid::PartitionMatroid(int ground_size,
                                   std::vector<ItemSet> categories,
                                   std::vector<long long> capacities)
    : Matroid(ground_size),
      categories_(std::move(categories)),
      capacities_(std::move(capacities)) {
  if (categories_.size() != capacities_.size()) {
    throw_invalid("category and capacity counts differ");
  }
  item_category_.assign(ground_size, -1);
  for (size_t c = 0; c < categories_.size(); ++c) {
    if (capacities_[c] < 0) throw_invalid("negative capacity");
    if (!is_valid_set(categories_[c], ground_size)) {
      throw_invalid("category is not a valid item set");
    }
    for (int item : categories_[c]) {
      if (item_category_[item] != -1) {
        throw_invalid("item appears in two categories");
      }
      item_category_[item] = static_cast<int>(c);
    }
  }
  for (int item = 0; item < ground_size; ++item) {
    if (item_category_[item] == -1) {
      throw_invalid("item belongs to no category");
    }
  }
}

bool PartitionMatroid::is_independent(const ItemSet& s) const {
  check_set(s);
  std::vector<long long> used(categories_.size(), 0);
  for (int item : s) {
    int c = item_category_[item];
    if (++used[c] > capacities_[c]) return false;
  }
  return true;
}

LaminarMatroid::LaminarMatroid(int ground_size, std::vector<ItemSet> sets,
                               std::vector<long long> capacities)
    : Matroid(ground_size),
      sets_(std::move(sets)),
      capacities_(std::move(capacities)) {
  if (sets_.size() != capacities_.size()) {
    throw_invalid("set and capacity counts differ");
  }
  for (size_t i = 0; i < sets_.size(); ++i) {
    if (capacities_[i] < 0) throw_invalid("negative capacity");
    if (!is_valid_set(sets_[i], ground_size)) {
      throw_invalid("laminar set is not a valid item set");
    }
  }
  for (size_t a = 0; a < sets_.size(); ++a) {
    for (size_t b = a + 1; b < sets_.size(); ++b) {
      ItemSet common;
      std::set_intersection(sets_[a].begin(), sets_[a].end(), sets_[b].begin(),
                            sets_[b].end(), std::back_inserter(common));
      if (common.empty()) continue;
      if (common.size() != sets_[a].size() &&
          common.size() != sets_[b].size()) {
        throw_invalid("set family is not laminar");
      }
    }
  }
}

bool LaminarMatroid::is_independent(const ItemSet& s) const {
  check_set(s);
  for (size_t i = 0; i < sets_.size(); ++i) {
    long long used = 0;
    for (int item : s) {
      if (set_contains(sets_[i], item)) ++used;
    }
    if (used > capacities_[i]) return false;
  }
  return true;
}

TransversalMatroid::TransversalMatroid(int ground_size, int right_size,
                                       std::vector<ItemSet> adjacency)
    : Matroid(ground_size),
      right_size_(right_size),
      adjacency_(std::move(adjacency)) {
  if (right_size < 0) throw_invalid("negative right side");
  if (static_cast<int>(adjacency_.size()) != ground_size) {
    throw_invalid("adjacency must list every item");
  }
  for (const ItemSet& row : adjacency_) {
    if (!is_valid_set(row, right_size)) {
      throw_invalid("adjacency row is not a valid vertex set");
    }
  }
}

bool TransversalMatroid::is_independent(const ItemSet& s) const {
  check_set(s);
  std::vector<std::vector<int>> rows;
  rows.reserve(s.size());
  for (int item : s) rows.push_back(adjacency_[item]);
  MatchingResult m =
      max_matching(static_cast<int>(rows.size()), right_size_, rows);
  return m.size == static_cast<int>(s.size());
}

GraphicMatroid::GraphicMatroid(int vertex_count,
                               std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  if (vertex_count < 0) throw_invalid("negative vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw_invalid("edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::is_independent(const ItemSet& s) const {
  check_set(s);
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int e : s) {
    auto [u, v] = edges_[e];
    int ru = find(u);
    int rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

FreeExtensionMatroid::FreeExtensionMatroid(std::shared_ptr<const Matroid> base,
                                           int count)
    : Matroid(base ? base->ground_size() + count : 0),
      base_(std::move(base)),
      count_(count) {
  if (!base_) throw_invalid("null base matroid");
  if (count < 0) throw_invalid("negative extension count");
  base_rank_ = full_rank(*base_);
}

bool FreeExtensionMatroid::is_independent(const ItemSet& s) const {
  check_set(s);
  ItemSet original;
  original.reserve(s.size());
  int extras = 0;
  for (int item : s) {
    if (is_extension_item(item)) {
      ++extras;
    } else {
      original.push_back(item);
    }
  }
  if (!base_->is_independent(original)) return false;
  if (extras == 0) return true;
  return static_cast<int>(s.size()) <= base_rank_;
}

CustomMatroid::CustomMatroid(int ground_size,
                             std::function<bool(const ItemSet&)> oracle)
    : Matroid(ground_size), oracle_(std::move(oracle)) {
  if (!oracle_) throw_invalid("null independence oracle");
}

bool CustomMatroid::is_independent(const ItemSet& s) const {
  check_set(s);
  return oracle_(s);
}

int rank(const Matroid& m, const ItemSet& s) {
  if (!is_valid_set(s, m.ground_size())) {
    throw_invalid("item set must be sorted, unique and inside the ground set");
  }
  ItemSet picked;
  for (int item : s) {
    picked.push_back(item);
    if (!m.is_independent(picked)) picked.pop_back();
  }
  return static_cast<int>(picked.size());
}

int full_rank(const Matroid& m) {
  ItemSet all(m.ground_size());
  std::iota(all.begin(), all.end(), 0);
  return rank(m, all);
}

int augment(const Matroid& m, const ItemSet& s, const ItemSet& t) {
  if (!m.is_independent(s) || !m.is_independent(t)) {
    throw_invalid("augment requires two independent sets");
  }
  if (s.size() >= t.size()) {
    throw_invalid("augment requires the first set to be smaller");
  }
  for (int item : t) {
    if (set_contains(s, item)) continue;
    if (m.is_independent(set_with(s, item))) return item;
  }
  throw_internal("exchange property violated: no augmenting item found");
}

bool is_base(const Matroid& m, const ItemSet& s) {
  if (!m.is_independent(s)) return false;
  return static_cast<int>(s.size()) == full_rank(m);
}

std::vector<ItemSet> enumerate_bases(const Matroid& m) {
  int g = m.ground_size();
  if (g > 16) {
    throw_capability("base enumeration is limited to 16 items; got " +
                     std::to_string(g));
  }
  int r = full_rank(m);
  std::vector<ItemSet> bases;
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    if (std::popcount(mask) != r) continue;
    ItemSet s;
    for (int i = 0; i < g; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    if (m.is_independent(s)) bases.push_back(s);
  }
  return bases;
}

std::optional<ExchangeBijection> feasible_exchange_bijection(
    const Matroid& m, const ItemSet& base_i, const ItemSet& base_j) {
  if (!is_base(m, base_i) || !is_base(m, base_j)) {
    throw_invalid("feasible-exchange bijection requires two bases");
  }
  int r = static_cast<int>(base_i.size());
  std::vector<std::vector<int>> swap_graph(r);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      int x = base_i[a];
      int y = base_j[b];
      if (x == y) {
        swap_graph[a].push_back(b);
        continue;
      }
      if (m.is_independent(set_with(set_without(base_i, x), y)) &&
          m.is_independent(set_with(set_without(base_j, y), x))) {
        swap_graph[a].push_back(b);
      }
    }
  }
  MatchingResult matching = max_matching(r, r, swap_graph);
  if (matching.size < r) return std::nullopt;
  ExchangeBijection out;
  out.reserve(r);
  for (int a = 0; a < r; ++a) {
    out.emplace_back(base_i[a], base_j[matching.left_match[a]]);
  }
  for (const auto& [x, y] : out) {
    if (x == y) continue;
    if (!m.is_independent(set_with(set_without(base_i, x), y)) ||
        !m.is_independent(set_with(set_without(base_j, y), x))) {
      throw_internal("exchange bijection fails its swap condition");
    }
  }
  return out;
}

std::shared_ptr<const Matroid> free_extend(std::shared_ptr<const Matroid> m,
                                           int count) {
  if (!m) throw_invalid("null base matroid");
  if (count < 0) throw_invalid("negative extension count");
  if (count == 0) return m;
  if (const auto* fe = dynamic_cast<const FreeExtensionMatroid*>(m.get())) {
    return std::make_shared<FreeExtensionMatroid>(
        fe->base(), fe->extension_count() + count);
  }
  return std::make_shared<FreeExtensionMatroid>(std::move(m), count);
}

bool is_base_orderable(const Matroid& m) {
  if (m.ground_size() > 12) {
    throw_capability(
        "base-orderability check is limited to 12 items by the bases "
        "enumeration guard; got " +
        std::to_string(m.ground_size()));
  }
  std::vector<ItemSet> bases = enumerate_bases(m);
  for (size_t a = 0; a < bases.size(); ++a) {
    for (size_t b = a + 1; b < bases.size(); ++b) {
      if (!feasible_exchange_bijection(m, bases[a], bases[b]).has_value()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace fairdiv
