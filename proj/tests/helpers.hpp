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

// Instance builders for the tests. The worked counterexamples are
// reconstructed here from their literal tables on purpose, independent
// of the registry in src/fixtures.cpp, so a typo in either copy shows
// up as a disagreement.

#ifndef FAIRDIV_TESTS_HELPERS_HPP_
#define FAIRDIV_TESTS_HELPERS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "constraints.hpp"
#include "instance.hpp"

namespace fairdiv_test {

using fairdiv::Constraint;
using fairdiv::ConstraintSpec;
using fairdiv::Instance;
using fairdiv::ItemSet;
using fairdiv::Rational;

inline std::vector<std::vector<Rational>> rows(
    const std::vector<std::vector<long long>>& values) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : values) {
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

inline ConstraintSpec partition_spec(std::vector<ItemSet> sets,
                                     std::vector<long long> capacities) {
  ConstraintSpec spec;
  spec.kind = "partition";
  spec.sets = std::move(sets);
  spec.capacities = std::move(capacities);
  return spec;
}

inline ConstraintSpec uniform_spec(long long capacity) {
  ConstraintSpec spec;
  spec.kind = "uniform";
  spec.capacity = capacity;
  return spec;
}

// Shared category structure, one capacity row per agent.
inline Instance partition_instance(
    const std::vector<std::vector<long long>>& values,
    std::vector<ItemSet> categories,
    const std::vector<std::vector<long long>>& capacities,
    std::string id = "") {
  int items = 0;
  for (const ItemSet& c : categories) items += static_cast<int>(c.size());
  std::vector<Constraint> constraints;
  for (const auto& caps : capacities) {
    constraints.push_back(
        fairdiv::build_constraint(partition_spec(categories, caps), items));
  }
  bool shared = true;
  for (const auto& caps : capacities) {
    if (caps != capacities.front()) shared = false;
  }
  return Instance(rows(values), std::move(constraints), shared, std::move(id));
}

inline Instance uniform_instance(
    const std::vector<std::vector<long long>>& values, long long capacity,
    std::string id = "") {
  int items = static_cast<int>(values.front().size());
  return Instance::with_shared_constraint(
      rows(values), fairdiv::build_constraint(uniform_spec(capacity), items),
      std::move(id));
}

// Two agents, ten items in categories {0..3} and {4..9} with capacities
// (2, 3); the second agent values the first pair plus the whole second
// category.
inline Instance make_table2() {
  return partition_instance({{1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                             {1, 1, 0, 0, 1, 1, 1, 1, 1, 1}},
                            {{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}},
                            {{2, 3}, {2, 3}}, "table2-mnw");
}

// Two agents over four items with clashing personal category systems;
// only one complete allocation survives both.
inline Instance make_ex32() {
  std::vector<Constraint> constraints;
  constraints.push_back(fairdiv::build_constraint(
      partition_spec({{0, 2}, {1, 3}}, {1, 1}), 4));
  constraints.push_back(fairdiv::build_constraint(
      partition_spec({{0}, {1}, {2, 3}}, {1, 1, 0}), 4));
  return Instance(rows({{1, 1, 0, 0}, {1, 1, 0, 0}}), std::move(constraints),
                  false, "ex3.2-heterogeneous-categories");
}

}  // namespace fairdiv_test

#endif  // FAIRDIV_TESTS_HELPERS_HPP_
