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

#include "instance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "error.hpp"
#include "intersection.hpp"

namespace fairdiv {
namespace {

constexpr long long kExistenceSearchBudget = 1'000'000;

// Normalized category view of one constraint, when it has one.
std::optional<std::pair<std::vector<ItemSet>, std::vector<long long>>>
category_view(const Constraint& c, int num_items) {
  if (const auto* u = dynamic_cast<const UniformMatroid*>(c.matroid.get())) {
    ItemSet all(num_items);
    std::iota(all.begin(), all.end(), 0);
    return std::make_pair(std::vector<ItemSet>{all},
                          std::vector<long long>{u->capacity()});
  }
  if (const auto* p = dynamic_cast<const PartitionMatroid*>(c.matroid.get())) {
    return std::make_pair(p->categories(), p->capacities());
  }
  return std::nullopt;
}

// Bounded DFS for a complete feasible allocation when some constraint
// is a general set system. Returns true/false when decided, nullopt
// when the budget ran out.
std::optional<bool> complete_exists_search(
    const std::vector<Constraint>& constraints, int num_items,
    long long budget) {
  int n = static_cast<int>(constraints.size());
  std::vector<ItemSet> bundles(n);
  std::vector<char> closed(n);
  for (int i = 0; i < n; ++i) {
    closed[i] = constraints[i].is_matroid()
                    ? 1
                    : constraints[i].system->downward_closed();
  }
  long long visited = 0;
  std::function<std::optional<bool>(int)> go =
      [&](int item) -> std::optional<bool> {
    if (++visited > budget) return std::nullopt;
    if (item == num_items) {
      for (int i = 0; i < n; ++i) {
        if (!closed[i] && !constraints[i].is_feasible(bundles[i])) {
          return false;
        }
      }
      return true;
    }
    for (int agent = 0; agent < n; ++agent) {
      bundles[agent].push_back(item);
      bool prune = closed[agent] && !constraints[agent].is_feasible(
                                        bundles[agent]);
      if (!prune) {
        std::optional<bool> sub = go(item + 1);
        if (!sub.has_value() || *sub) {
          bundles[agent].pop_back();
          return sub;
        }
      }
      bundles[agent].pop_back();
    }
    return false;
  };
  return go(0);
}

}  // namespace

Instance::Instance(std::vector<std::vector<Rational>> valuations,
                   std::vector<Constraint> constraints, bool shared_constraint,
                   std::string id)
    : id_(std::move(id)),
      valuations_(std::move(valuations)),
      constraints_(std::move(constraints)),
      shared_constraint_(shared_constraint) {
  validate_and_finish();
}

Instance Instance::with_shared_constraint(
    std::vector<std::vector<Rational>> valuations, Constraint constraint,
    std::string id) {
  size_t n = valuations.size();
  std::vector<Constraint> constraints(n, constraint);
  return Instance(std::move(valuations), std::move(constraints), true,
                  std::move(id));
}

void Instance::validate_and_finish() {
  num_agents_ = static_cast<int>(valuations_.size());
  if (num_agents_ == 0) throw_invalid("at least one agent required");
  num_items_ = static_cast<int>(valuations_[0].size());
  for (const auto& row : valuations_) {
    if (static_cast<int>(row.size()) != num_items_) {
      throw_invalid("valuation rows must have equal length");
    }
    for (const Rational& v : row) {
      if (v.is_negative()) throw_invalid("item values must be non-negative");
    }
  }
  if (static_cast<int>(constraints_.size()) != num_agents_) {
    throw_invalid("one constraint per agent required");
  }
  for (const Constraint& c : constraints_) {
    if (!c.matroid && !c.system) throw_invalid("empty constraint");
    if (c.matroid && c.system) throw_invalid("ambiguous constraint");
    if (c.ground_size() != num_items_) {
      throw_invalid("constraint ground size does not match the item count");
    }
  }

  // Shared category view, used by the per-category algorithms.
  std::vector<std::vector<long long>> caps;
  std::optional<std::vector<ItemSet>> cats;
  bool same = true;
  for (const Constraint& c : constraints_) {
    auto view = category_view(c, num_items_);
    if (!view.has_value()) {
      same = false;
      break;
    }
    if (!cats.has_value()) {
      cats = view->first;
    } else if (*cats != view->first) {
      same = false;
      break;
    }
    caps.push_back(view->second);
  }
  if (same && cats.has_value()) {
    SharedCategories sc;
    sc.categories = *cats;
    sc.capacities = std::move(caps);
    sc.item_category.assign(num_items_, -1);
    for (size_t c = 0; c < sc.categories.size(); ++c) {
      for (int item : sc.categories[c]) {
        sc.item_category[item] = static_cast<int>(c);
      }
    }
    shared_categories_ = std::move(sc);
  }

  // A complete feasible allocation must exist. With a shared category
  // view the capacity sums decide it; with matroids the intersection
  // decides it; general set systems get a bounded search.
  if (shared_categories_.has_value()) {
    const SharedCategories& sc = *shared_categories_;
    for (size_t c = 0; c < sc.categories.size(); ++c) {
      long long total = 0;
      for (int i = 0; i < num_agents_; ++i) total += sc.capacities[i][c];
      if (total < static_cast<long long>(sc.categories[c].size())) {
        throw_invalid(
            "no complete feasible allocation exists: capacities of category " +
            std::to_string(c) + " sum below its size");
      }
    }
    completeness_verified_ = true;
  } else if (all_matroid_constraints()) {
    std::vector<std::shared_ptr<const Matroid>> ms;
    for (const Constraint& c : constraints_) ms.push_back(c.matroid);
    if (!complete_allocation_exists(ms, num_items_)) {
      throw_invalid("no complete feasible allocation exists");
    }
    completeness_verified_ = true;
  } else {
    std::optional<bool> exists = complete_exists_search(
        constraints_, num_items_, kExistenceSearchBudget);
    if (exists.has_value() && !*exists) {
      throw_invalid("no complete feasible allocation exists");
    }
    completeness_verified_ = exists.has_value();
  }
}

Rational Instance::value(int agent, const ItemSet& bundle) const {
  if (agent < 0 || agent >= num_agents_) throw_invalid("agent out of range");
  if (!is_valid_set(bundle, num_items_)) {
    throw_invalid("bundle must be sorted, unique and inside the item range");
  }
  Rational total;
  for (int item : bundle) total += valuations_[agent][item];
  return total;
}

void Instance::set_value(int agent, int item, const Rational& v) {
  if (agent < 0 || agent >= num_agents_) throw_invalid("agent out of range");
  if (item < 0 || item >= num_items_) throw_invalid("item out of range");
  if (v.is_negative()) throw_invalid("item values must be non-negative");
  valuations_[agent][item] = v;
}

bool Instance::identical_constraints() const {
  if (shared_constraint_) return true;
  const Constraint& first = constraints_[0];
  for (int i = 1; i < num_agents_; ++i) {
    const Constraint& c = constraints_[i];
    if (c.matroid == first.matroid && c.system == first.system) continue;
    if (!c.spec.has_value() || !first.spec.has_value() ||
        !(*c.spec == *first.spec)) {
      return false;
    }
  }
  return true;
}

bool Instance::all_matroid_constraints() const {
  for (const Constraint& c : constraints_) {
    if (!c.is_matroid()) return false;
  }
  return true;
}

bool Instance::identical_valuations() const {
  for (int i = 1; i < num_agents_; ++i) {
    if (valuations_[i] != valuations_[0]) return false;
  }
  return true;
}

bool Instance::binary_valuations() const {
  for (const auto& row : valuations_) {
    for (const Rational& v : row) {
      if (!v.is_zero() && v != Rational(1)) return false;
    }
  }
  return true;
}

FeasibilityReport check_feasible(const Instance& instance,
                                 const Allocation& allocation) {
  if (static_cast<int>(allocation.size()) != instance.num_agents()) {
    throw_invalid("allocation must have one bundle per agent");
  }
  FeasibilityReport report;
  std::vector<int> owner(instance.num_items(), -1);
  for (int i = 0; i < instance.num_agents(); ++i) {
    const ItemSet& bundle = allocation[i];
    if (!is_valid_set(bundle, instance.num_items())) {
      throw_invalid("bundle of agent " + std::to_string(i) +
                    " is not a valid item set");
    }
    for (int item : bundle) {
      if (owner[item] != -1) {
        report.violations.push_back(
            "item " + std::to_string(item) + " allocated to both agent " +
            std::to_string(owner[item]) + " and agent " + std::to_string(i));
      } else {
        owner[item] = i;
      }
    }
    if (!instance.constraint(i).is_feasible(bundle)) {
      report.violations.push_back("bundle of agent " + std::to_string(i) +
                                  " violates its constraint");
    }
  }
  for (int item = 0; item < instance.num_items(); ++item) {
    if (owner[item] == -1) {
      report.violations.push_back("item " + std::to_string(item) +
                                  " is unallocated");
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace fairdiv
