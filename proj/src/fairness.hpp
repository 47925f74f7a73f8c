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

#ifndef FAIRDIV_SRC_FAIRNESS_HPP_
#define FAIRDIV_SRC_FAIRNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace fairdiv {

// Most-valuable subset of `from` that is feasible for the agent:
// matroid greedy (descending value, ties to the lowest id) for matroid
// constraints, exhaustive scan for set systems (limited to 20 items).
ItemSet best_feasible_subset(const Instance& instance, int agent,
                             const ItemSet& from);

// Value of the best feasible subset; the "feasible valuation".
Rational feasible_value(const Instance& instance, int agent,
                        const ItemSet& from);

// max(0, feasible_value(i, x_j) - feasible_value(i, x_i)).
Rational positive_feasible_envy(const Instance& instance,
                                const Allocation& allocation, int i, int j);

struct EnvyGraph {
  int n = 0;
  std::vector<std::vector<char>> edge;  // edge[i][j]: i envies j
};

// Feasible variant compares feasible values on both sides; the plain
// variant uses raw bundle values on both sides.
EnvyGraph envy_graph(const Instance& instance, const Allocation& allocation,
                     bool feasible = true);

// Orders agents so every envy edge points forward: an envious agent
// precedes every agent it envies. Ties pick the lowest agent id. When
// the graph has a cycle, `order` is empty and `cycle` holds one.
struct TopoResult {
  bool acyclic = false;
  std::vector<int> order;
  std::vector<int> cycle;
};
TopoResult topological_order(const EnvyGraph& graph);

struct Fef1Witness {
  int envious = -1;
  int envied = -1;
};

// Envy-freeness up to one item under feasible valuations: for every
// pair there is a removal set Y, |Y| <= 1, with
// feasible_value(i, x_i) >= feasible_value(i, x_j \ Y).
bool is_fef1(const Instance& instance, const Allocation& allocation);
std::optional<Fef1Witness> fef1_violation(const Instance& instance,
                                          const Allocation& allocation);

// No positive feasible envy anywhere.
bool is_fef(const Instance& instance, const Allocation& allocation);

// Weak variant: first reduce the envied bundle to the agent's best
// feasible subset, then remove at most one item from that subset.
bool is_weak_fef1(const Instance& instance, const Allocation& allocation);

// Envy-freeness up to any item. Identical-constraint instances use raw
// values; heterogeneous instances use feasible valuations of the
// reduced bundles.
bool is_efx(const Instance& instance, const Allocation& allocation);

// Plain EF1 that ignores feasibility of the other agent's bundle.
bool is_ef1_plain(const Instance& instance, const Allocation& allocation);

// Product of bundle values.
Rational nash_welfare(const Instance& instance, const Allocation& allocation);

enum class PeVerdict { kYes, kNo, kUnknown };

struct PeResult {
  PeVerdict verdict = PeVerdict::kUnknown;
  // "identical-valuations", "enumeration", "welfare-maximal" or
  // "guard-exceeded"; says what decided (or failed to decide) the
  // verdict.
  std::string basis;
};

// Exact within the enumeration bound; outside it the check can still
// certify efficiency (identical valuations, or welfare maximality) but
// never refute it, hence the three-valued verdict.
PeResult is_pareto_efficient(const Instance& instance,
                             const Allocation& allocation, long long bound);

enum class FairnessNotion { kFef, kFef1, kWeakFef1, kEfx, kEf1Plain };

std::string fairness_notion_name(FairnessNotion notion);
bool check_notion(const Instance& instance, const Allocation& allocation,
                  FairnessNotion notion);

struct FairnessReport {
  FeasibilityReport feasibility;
  std::vector<std::vector<Rational>> envy;  // positive feasible envy
  bool fef = false;
  bool fef1 = false;
  std::optional<Fef1Witness> fef1_witness;
  bool weak_fef1 = false;
  bool efx = false;
  bool ef1_plain = false;
  std::vector<Rational> values;
  Rational nash;
  PeResult pareto;
};

FairnessReport build_fairness_report(const Instance& instance,
                                     const Allocation& allocation,
                                     long long bound);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_FAIRNESS_HPP_
