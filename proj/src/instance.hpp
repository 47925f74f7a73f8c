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

#ifndef FAIRDIV_SRC_INSTANCE_HPP_
#define FAIRDIV_SRC_INSTANCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "constraints.hpp"
#include "rational.hpp"

namespace fairdiv {

// Present when every agent's constraint normalizes to a partition
// matroid over one common category list (uniform counts as a single
// category covering everything). The per-category algorithms run on
// this view.
struct SharedCategories {
  std::vector<ItemSet> categories;
  std::vector<std::vector<long long>> capacities;  // [agent][category]
  std::vector<int> item_category;
};

// Agents 0..n-1 with additive valuations over items 0..m-1, one
// constraint per agent. Construction verifies that a complete feasible
// allocation exists (exactly for matroid constraints, within a search
// budget otherwise). Instances are immutable while shared across
// threads; set_value exists so harnesses can reuse one instance.
class Instance {
 public:
  Instance(std::vector<std::vector<Rational>> valuations,
           std::vector<Constraint> constraints, bool shared_constraint,
           std::string id = "");

  static Instance with_shared_constraint(
      std::vector<std::vector<Rational>> valuations, Constraint constraint,
      std::string id = "");

  const std::string& id() const { return id_; }
  int num_agents() const { return num_agents_; }
  int num_items() const { return num_items_; }

  const Rational& value(int agent, int item) const {
    return valuations_[agent][item];
  }
  Rational value(int agent, const ItemSet& bundle) const;
  void set_value(int agent, int item, const Rational& v);
  const std::vector<std::vector<Rational>>& valuations() const {
    return valuations_;
  }

  const Constraint& constraint(int agent) const { return constraints_[agent]; }
  bool constraints_shared() const { return shared_constraint_; }
  bool identical_constraints() const;
  bool all_matroid_constraints() const;
  const std::optional<SharedCategories>& shared_categories() const {
    return shared_categories_;
  }

  bool identical_valuations() const;
  bool binary_valuations() const;

  // False when set-system constraints made the load-time existence
  // search run out of budget; the instance is still usable.
  bool completeness_verified() const { return completeness_verified_; }

 private:
  void validate_and_finish();

  std::string id_;
  int num_agents_ = 0;
  int num_items_ = 0;
  std::vector<std::vector<Rational>> valuations_;
  std::vector<Constraint> constraints_;
  bool shared_constraint_ = false;
  bool completeness_verified_ = false;
  std::optional<SharedCategories> shared_categories_;
};

using Allocation = std::vector<ItemSet>;

struct FeasibilityReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// Complete feasible allocation check: every item allocated exactly once
// and every bundle feasible for its agent. Violations are reported in
// the result, not thrown.
FeasibilityReport check_feasible(const Instance& instance,
                                 const Allocation& allocation);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_INSTANCE_HPP_
