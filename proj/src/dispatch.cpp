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

#include <string>

#include "algorithms.hpp"
#include "error.hpp"
#include "matroid.hpp"

namespace fairdiv {
namespace {

[[noreturn]] void refuse_set_system(const std::string& kind) {
  if (kind == "budget") {
    throw_capability(
        "budget constraints fall outside every shipped algorithm: a complete "
        "EF1 allocation can fail to exist under them (fixture ex3.5-budget "
        "reproduces the counterexample)");
  }
  if (kind == "conflict_graph") {
    throw_capability(
        "conflict-graph constraints fall outside every shipped algorithm: a "
        "complete EF1 allocation can fail to exist under them (fixture "
        "ex3.4-conflict reproduces the counterexample)");
  }
  if (kind == "bipartite_matching" || kind == "matroid_intersection") {
    throw_capability(
        "matching and matroid-intersection constraints fall outside every "
        "shipped algorithm: a complete EF1 allocation can fail to exist under "
        "them (fixture ex3.3-matching reproduces the counterexample)");
  }
  throw_capability(
      "no allocation algorithm ships for general set-system constraints; use "
      "the oracle to search small instances exhaustively");
}

bool identical_capacities(const SharedCategories& shared) {
  for (size_t i = 1; i < shared.capacities.size(); ++i) {
    if (shared.capacities[i] != shared.capacities[0]) return false;
  }
  return true;
}

}  // namespace

SolveResult dispatch_solve(const Instance& instance,
                           const SolveOptions& options) {
  const int n = instance.num_agents();
  if (!instance.all_matroid_constraints()) {
    for (int i = 0; i < n; ++i) {
      if (!instance.constraint(i).matroid) {
        refuse_set_system(instance.constraint(i).kind());
      }
    }
  }
  if (instance.shared_categories()) {
    const SharedCategories& shared = *instance.shared_categories();
    if (instance.identical_valuations()) {
      return per_category_crr(instance, options);
    }
    if (instance.binary_valuations()) {
      return iterated_priority_matching(instance, options);
    }
    if (n == 2) return rr_squared(instance, options);
    if (shared.categories.size() == 1) return crr(instance, options);
    if (shared.categories.size() == 2) {
      return back_and_forth_crr(instance, options);
    }
    if (identical_capacities(shared)) return per_category_rr(instance, options);
    throw_capability(
        "no known procedure guarantees F-EF1 for three or more agents over "
        "three or more categories with heterogeneous capacities and general "
        "valuations; that case is open");
  }
  if (instance.identical_constraints()) {
    const Matroid& matroid = *instance.constraint(0).matroid;
    if (n > 1 && matroid.ground_size() <= 12 && !is_base_orderable(matroid)) {
      throw_capability(
          "the shared matroid is not base-orderable, so the swap algorithms "
          "do not apply (fixture k4-graphic is the canonical example)");
    }
    if ((instance.binary_valuations() && n == 3) ||
        instance.identical_valuations()) {
      return iterated_swaps(instance, options);
    }
    if (n == 2) return cut_and_choose_two_agents(instance, options);
    throw_capability(
        "no known procedure covers a shared matroid with heterogeneous "
        "non-binary valuations and three or more agents; that case is open");
  }
  throw_capability(
      "heterogeneous matroid constraints admit no F-EF1 guarantee in general "
      "(fixture ex3.2-heterogeneous-categories is a two-agent "
      "counterexample); no algorithm ships for this setting");
}

}  // namespace fairdiv
