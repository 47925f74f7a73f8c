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

#include "fairness.hpp"

#include <algorithm>

#include "error.hpp"
#include "intersection.hpp"
#include "oracle.hpp"

namespace fairdiv {
namespace {

constexpr int kSubsetScanLimit = 20;

// Items of `from` ordered by descending value for `agent`, ties to the
// lowest item id.
std::vector<int> by_desc_value(const Instance& instance, int agent,
                               const ItemSet& from) {
  std::vector<int> order(from);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.value(agent, b) < instance.value(agent, a);
  });
  return order;
}

ItemSet greedy_matroid_subset(const Instance& instance, int agent,
                              const ItemSet& from, const Matroid& matroid) {
  // Category counters beat the generic oracle for the two common kinds.
  if (const auto* partition = dynamic_cast<const PartitionMatroid*>(&matroid)) {
    std::vector<long long> used(partition->capacities().size(), 0);
    ItemSet picked;
    picked.reserve(from.size());
    for (int item : by_desc_value(instance, agent, from)) {
      int category = partition->category_of(item);
      if (used[category] < partition->capacities()[category]) {
        ++used[category];
        picked.push_back(item);
      }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }
  if (const auto* uniform = dynamic_cast<const UniformMatroid*>(&matroid)) {
    std::vector<int> order = by_desc_value(instance, agent, from);
    if (static_cast<long long>(order.size()) > uniform->capacity()) {
      order.resize(static_cast<size_t>(uniform->capacity()));
    }
    std::sort(order.begin(), order.end());
    return order;
  }
  ItemSet picked;
  for (int item : by_desc_value(instance, agent, from)) {
    ItemSet candidate = set_with(picked, item);
    if (matroid.is_independent(candidate)) {
      picked = std::move(candidate);
    }
  }
  return picked;
}

ItemSet scan_system_subset(const Instance& instance, int agent,
                           const ItemSet& from, const SetSystem& system) {
  if (static_cast<int>(from.size()) > kSubsetScanLimit) {
    throw_capability("best feasible subset over a set system scans all " +
                     std::to_string(from.size()) +
                     "-item subsets; the scan is limited to " +
                     std::to_string(kSubsetScanLimit) + " items");
  }
  const int k = static_cast<int>(from.size());
  Rational best_value = 0;
  ItemSet best;
  bool found = false;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    ItemSet subset;
    Rational total = 0;
    for (int pos = 0; pos < k; ++pos) {
      if (mask & (1u << pos)) {
        subset.push_back(from[pos]);
        total = total + instance.value(agent, from[pos]);
      }
    }
    if (!system.is_feasible(subset)) continue;
    if (!found || best_value < total) {
      best_value = total;
      best = std::move(subset);
      found = true;
    }
  }
  // A system with no feasible subset of `from` (not even the empty set)
  // contributes nothing the agent could take.
  return best;
}

void check_shape(const Instance& instance, const Allocation& allocation) {
  if (static_cast<int>(allocation.size()) != instance.num_agents()) {
    throw_invalid("allocation has " + std::to_string(allocation.size()) +
                  " bundles for " + std::to_string(instance.num_agents()) +
                  " agents");
  }
  for (const ItemSet& bundle : allocation) {
    if (!is_valid_set(bundle, instance.num_items())) {
      throw_invalid("bundles must be sorted, unique and within item range");
    }
  }
}

// The verifiers below take feasibility of the allocation as a
// precondition, so a violation is the caller's error.
void require_feasible(const Instance& instance, const Allocation& allocation) {
  FeasibilityReport report = check_feasible(instance, allocation);
  if (!report.ok) {
    throw_invalid("allocation is not feasible: " + report.violations.front());
  }
}

// F_i(X_i) for every agent; this is the "own side" of every feasible
// envy comparison (equal to v_i(X_i) whenever X_i is feasible).
std::vector<Rational> own_feasible_values(const Instance& instance,
                                          const Allocation& allocation) {
  std::vector<Rational> own(instance.num_agents());
  for (int i = 0; i < instance.num_agents(); ++i) {
    own[i] = feasible_value(instance, i, allocation[i]);
  }
  return own;
}

bool pair_fef1(const Instance& instance, const Allocation& allocation,
               const Rational& own, int i, int j) {
  if (!(own < feasible_value(instance, i, allocation[j]))) return true;
  for (int removed : allocation[j]) {
    ItemSet reduced = set_without(allocation[j], removed);
    if (!(own < feasible_value(instance, i, reduced))) return true;
  }
  return false;
}

std::optional<Fef1Witness> fef1_violation_impl(const Instance& instance,
                                               const Allocation& allocation) {
  const int n = instance.num_agents();
  std::vector<Rational> own = own_feasible_values(instance, allocation);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!pair_fef1(instance, allocation, own[i], i, j)) {
        return Fef1Witness{i, j};
      }
    }
  }
  return std::nullopt;
}

bool is_fef_impl(const Instance& instance, const Allocation& allocation) {
  const int n = instance.num_agents();
  std::vector<Rational> own = own_feasible_values(instance, allocation);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (own[i] < feasible_value(instance, i, allocation[j])) return false;
    }
  }
  return true;
}

bool is_weak_fef1_impl(const Instance& instance, const Allocation& allocation) {
  const int n = instance.num_agents();
  std::vector<Rational> own = own_feasible_values(instance, allocation);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ItemSet best = best_feasible_subset(instance, i, allocation[j]);
      Rational target = instance.value(i, best);
      if (!(own[i] < target)) continue;
      Rational largest = 0;
      for (int item : best) {
        largest = max(largest, instance.value(i, item));
      }
      if (own[i] < target - largest) return false;
    }
  }
  return true;
}

bool is_efx_impl(const Instance& instance, const Allocation& allocation) {
  const int n = instance.num_agents();
  const bool identical = instance.identical_constraints();
  std::vector<Rational> own(n);
  for (int i = 0; i < n; ++i) {
    own[i] = identical ? instance.value(i, allocation[i])
                       : feasible_value(instance, i, allocation[i]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || allocation[j].empty()) continue;
      for (int removed : allocation[j]) {
        Rational reduced =
            identical
                ? instance.value(i, allocation[j]) - instance.value(i, removed)
                : feasible_value(instance, i,
                                 set_without(allocation[j], removed));
        if (own[i] < reduced) return false;
      }
    }
  }
  return true;
}

bool is_ef1_plain_impl(const Instance& instance, const Allocation& allocation) {
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    Rational own = instance.value(i, allocation[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational other = instance.value(i, allocation[j]);
      if (!(own < other)) continue;
      bool fixed = false;
      for (int removed : allocation[j]) {
        if (!(own < other - instance.value(i, removed))) {
          fixed = true;
          break;
        }
      }
      if (!fixed) return false;
    }
  }
  return true;
}

}  // namespace

ItemSet best_feasible_subset(const Instance& instance, int agent,
                             const ItemSet& from) {
  if (agent < 0 || agent >= instance.num_agents()) {
    throw_invalid("agent id " + std::to_string(agent) + " out of range");
  }
  if (!is_valid_set(from, instance.num_items())) {
    throw_invalid("item set must be sorted, unique and within range");
  }
  const Constraint& constraint = instance.constraint(agent);
  if (constraint.is_matroid()) {
    return greedy_matroid_subset(instance, agent, from, *constraint.matroid);
  }
  return scan_system_subset(instance, agent, from, *constraint.system);
}

Rational feasible_value(const Instance& instance, int agent,
                        const ItemSet& from) {
  return instance.value(agent, best_feasible_subset(instance, agent, from));
}

Rational positive_feasible_envy(const Instance& instance,
                                const Allocation& allocation, int i, int j) {
  check_shape(instance, allocation);
  Rational envy = feasible_value(instance, i, allocation[j]) -
                  feasible_value(instance, i, allocation[i]);
  return envy < Rational(0) ? Rational(0) : envy;
}

EnvyGraph envy_graph(const Instance& instance, const Allocation& allocation,
                     bool feasible) {
  check_shape(instance, allocation);
  const int n = instance.num_agents();
  EnvyGraph graph;
  graph.n = n;
  graph.edge.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    Rational own = feasible ? feasible_value(instance, i, allocation[i])
                            : instance.value(i, allocation[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational other = feasible ? feasible_value(instance, i, allocation[j])
                                : instance.value(i, allocation[j]);
      graph.edge[i][j] = own < other ? 1 : 0;
    }
  }
  return graph;
}

TopoResult topological_order(const EnvyGraph& graph) {
  const int n = graph.n;
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (graph.edge[i][j]) ++indegree[j];
    }
  }
  TopoResult result;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int next = -1;
    for (int candidate = 0; candidate < n; ++candidate) {
      if (!placed[candidate] && indegree[candidate] == 0) {
        next = candidate;
        break;
      }
    }
    if (next < 0) break;
    placed[next] = 1;
    result.order.push_back(next);
    for (int j = 0; j < n; ++j) {
      if (graph.edge[next][j]) --indegree[j];
    }
  }
  if (static_cast<int>(result.order.size()) == n) {
    result.acyclic = true;
    return result;
  }
  result.order.clear();
  // Walk forward along envy edges from the lowest leftover agent until a
  // node repeats, then cut the walk down to the loop it closed.
  int start = 0;
  while (placed[start]) ++start;
  std::vector<int> walk;
  std::vector<int> seen_at(n, -1);
  int current = start;
  while (seen_at[current] < 0) {
    seen_at[current] = static_cast<int>(walk.size());
    walk.push_back(current);
    int next = -1;
    for (int j = 0; j < n; ++j) {
      if (!placed[j] && graph.edge[current][j]) {
        next = j;
        break;
      }
    }
    if (next < 0) {
      throw_internal("leftover node without outgoing edge in a cyclic graph");
    }
    current = next;
  }
  result.cycle.assign(walk.begin() + seen_at[current], walk.end());
  int lowest = static_cast<int>(
      std::min_element(result.cycle.begin(), result.cycle.end()) -
      result.cycle.begin());
  std::rotate(result.cycle.begin(), result.cycle.begin() + lowest,
              result.cycle.end());
  return result;
}

bool is_fef(const Instance& instance, const Allocation& allocation) {
  check_shape(instance, allocation);
  require_feasible(instance, allocation);
  return is_fef_impl(instance, allocation);
}

std::optional<Fef1Witness> fef1_violation(const Instance& instance,
                                          const Allocation& allocation) {
  check_shape(instance, allocation);
  require_feasible(instance, allocation);
  return fef1_violation_impl(instance, allocation);
}

bool is_fef1(const Instance& instance, const Allocation& allocation) {
  return !fef1_violation(instance, allocation).has_value();
}

bool is_weak_fef1(const Instance& instance, const Allocation& allocation) {
  check_shape(instance, allocation);
  require_feasible(instance, allocation);
  return is_weak_fef1_impl(instance, allocation);
}

bool is_efx(const Instance& instance, const Allocation& allocation) {
  check_shape(instance, allocation);
  require_feasible(instance, allocation);
  return is_efx_impl(instance, allocation);
}

bool is_ef1_plain(const Instance& instance, const Allocation& allocation) {
  check_shape(instance, allocation);
  require_feasible(instance, allocation);
  return is_ef1_plain_impl(instance, allocation);
}

Rational nash_welfare(const Instance& instance, const Allocation& allocation) {
  check_shape(instance, allocation);
  Rational product = 1;
  for (int i = 0; i < instance.num_agents(); ++i) {
    product = product * instance.value(i, allocation[i]);
  }
  return product;
}

PeResult is_pareto_efficient(const Instance& instance,
                             const Allocation& allocation, long long bound) {
  check_shape(instance, allocation);
  const int n = instance.num_agents();
  FeasibilityReport feasibility = check_feasible(instance, allocation);
  if (instance.identical_valuations() && feasibility.ok) {
    // Everyone agrees on every bundle's worth, so any reshuffle that
    // raises one agent lowers another agent by the same shared measure.
    return PeResult{PeVerdict::kYes, "identical-valuations"};
  }
  if (assignments_within_bound(n, instance.num_items(), bound)) {
    std::vector<Rational> current(n);
    for (int i = 0; i < n; ++i) current[i] = instance.value(i, allocation[i]);
    bool dominated = false;
    enumerate_feasible(instance, bound, [&](const Allocation& other) {
      bool weakly_better = true;
      bool strictly = false;
      for (int i = 0; i < n && weakly_better; ++i) {
        Rational worth = instance.value(i, other[i]);
        if (worth < current[i]) weakly_better = false;
        if (current[i] < worth) strictly = true;
      }
      if (weakly_better && strictly) {
        dominated = true;
        return false;
      }
      return true;
    });
    return PeResult{dominated ? PeVerdict::kNo : PeVerdict::kYes,
                    "enumeration"};
  }
  if (feasibility.ok && instance.all_matroid_constraints()) {
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      total = total + instance.value(i, allocation[i]);
    }
    SwmAllocation best = max_weight_swm(instance);
    if (!(total < best.welfare)) {
      // Welfare maximality certifies efficiency; falling short of it
      // proves nothing, hence no kNo on this path.
      return PeResult{PeVerdict::kYes, "welfare-maximal"};
    }
  }
  return PeResult{PeVerdict::kUnknown, "guard-exceeded"};
}

std::string fairness_notion_name(FairnessNotion notion) {
  switch (notion) {
    case FairnessNotion::kFef:
      return "F-EF";
    case FairnessNotion::kFef1:
      return "F-EF1";
    case FairnessNotion::kWeakFef1:
      return "weak-F-EF1";
    case FairnessNotion::kEfx:
      return "EFX";
    case FairnessNotion::kEf1Plain:
      return "EF1";
  }
  throw_internal("unknown fairness notion");
}

bool check_notion(const Instance& instance, const Allocation& allocation,
                  FairnessNotion notion) {
  switch (notion) {
    case FairnessNotion::kFef:
      return is_fef_impl(instance, allocation);
    case FairnessNotion::kFef1:
      return !fef1_violation_impl(instance, allocation).has_value();
    case FairnessNotion::kWeakFef1:
      return is_weak_fef1_impl(instance, allocation);
    case FairnessNotion::kEfx:
      return is_efx_impl(instance, allocation);
    case FairnessNotion::kEf1Plain:
      return is_ef1_plain_impl(instance, allocation);
  }
  throw_internal("unknown fairness notion");
}

FairnessReport build_fairness_report(const Instance& instance,
                                     const Allocation& allocation,
                                     long long bound) {
  check_shape(instance, allocation);
  const int n = instance.num_agents();
  FairnessReport report;
  report.feasibility = check_feasible(instance, allocation);
  report.envy.assign(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> own = own_feasible_values(instance, allocation);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational envy = feasible_value(instance, i, allocation[j]) - own[i];
      report.envy[i][j] = envy < Rational(0) ? Rational(0) : envy;
    }
  }
  report.values.resize(n);
  for (int i = 0; i < n; ++i) {
    report.values[i] = instance.value(i, allocation[i]);
  }
  report.nash = nash_welfare(instance, allocation);
  if (report.feasibility.ok) {
    report.fef = is_fef_impl(instance, allocation);
    report.fef1_witness = fef1_violation_impl(instance, allocation);
    report.fef1 = !report.fef1_witness.has_value();
    report.weak_fef1 = is_weak_fef1_impl(instance, allocation);
    report.efx = is_efx_impl(instance, allocation);
    report.ef1_plain = is_ef1_plain_impl(instance, allocation);
    report.pareto = is_pareto_efficient(instance, allocation, bound);
  } else {
    // Feasibility failed: the envy matrix and totals above are still
    // defined, the envy-notion verdicts are not evaluated.
    report.pareto = PeResult{PeVerdict::kUnknown, "infeasible-allocation"};
  }
  return report;
}

}  // namespace fairdiv
