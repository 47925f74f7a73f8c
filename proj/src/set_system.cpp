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

#include "set_system.hpp"

#include "error.hpp"

namespace fairdiv {

SetSystem::SetSystem(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw_invalid("negative ground set size");
}

void SetSystem::check_set(const ItemSet& s) const {
  if (!is_valid_set(s, ground_size_)) {
    throw_invalid("item set must be sorted, unique and inside the ground set");
  }
}

BudgetSystem::BudgetSystem(int ground_size, std::vector<Rational> costs,
                           Rational budget)
    : SetSystem(ground_size), costs_(std::move(costs)), budget_(budget) {
  if (static_cast<int>(costs_.size()) != ground_size) {
    throw_invalid("cost list must cover every item");
  }
  for (const Rational& c : costs_) {
    if (c.is_negative()) throw_invalid("negative item cost");
  }
  if (budget_.is_negative()) throw_invalid("negative budget");
}

bool BudgetSystem::is_feasible(const ItemSet& s) const {
  check_set(s);
  Rational total;
  for (int item : s) total += costs_[item];
  return total <= budget_;
}

ConflictGraphSystem::ConflictGraphSystem(
    int ground_size, std::vector<std::pair<int, int>> conflicts)
    : SetSystem(ground_size), conflicts_(std::move(conflicts)) {
  for (const auto& [a, b] : conflicts_) {
    if (a < 0 || a >= ground_size || b < 0 || b >= ground_size || a == b) {
      throw_invalid("bad conflict edge");
    }
  }
}

bool ConflictGraphSystem::is_feasible(const ItemSet& s) const {
  check_set(s);
  for (const auto& [a, b] : conflicts_) {
    if (set_contains(s, a) && set_contains(s, b)) return false;
  }
  return true;
}

MatroidIntersectionSystem::MatroidIntersectionSystem(
    std::vector<std::shared_ptr<const Matroid>> matroids)
    : SetSystem(matroids.empty() || !matroids.front()
                    ? -1
                    : matroids.front()->ground_size()),
      matroids_(std::move(matroids)) {
  for (const auto& m : matroids_) {
    if (!m) throw_invalid("null matroid in intersection");
    if (m->ground_size() != ground_size_) {
      throw_invalid("intersection matroids must share a ground set");
    }
  }
}

bool MatroidIntersectionSystem::is_feasible(const ItemSet& s) const {
  check_set(s);
  for (const auto& m : matroids_) {
    if (!m->is_independent(s)) return false;
  }
  return true;
}

BipartiteMatchingSystem::BipartiteMatchingSystem(
    int left_size, int right_size, std::vector<std::pair<int, int>> endpoints)
    : SetSystem(static_cast<int>(endpoints.size())),
      left_size_(left_size),
      right_size_(right_size),
      endpoints_(std::move(endpoints)) {
  if (left_size < 0 || right_size < 0) throw_invalid("negative vertex count");
  for (const auto& [l, r] : endpoints_) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size) {
      throw_invalid("edge endpoint out of range");
    }
  }
}

bool BipartiteMatchingSystem::is_feasible(const ItemSet& s) const {
  check_set(s);
  std::vector<char> left_used(left_size_, 0);
  std::vector<char> right_used(right_size_, 0);
  for (int e : s) {
    auto [l, r] = endpoints_[e];
    if (left_used[l] || right_used[r]) return false;
    left_used[l] = 1;
    right_used[r] = 1;
  }
  return true;
}

CustomSystem::CustomSystem(int ground_size,
                           std::function<bool(const ItemSet&)> oracle,
                           bool downward_closed)
    : SetSystem(ground_size),
      oracle_(std::move(oracle)),
      downward_closed_(downward_closed) {
  if (!oracle_) throw_invalid("null feasibility oracle");
}

bool CustomSystem::is_feasible(const ItemSet& s) const {
  check_set(s);
  return oracle_(s);
}

}  // namespace fairdiv
