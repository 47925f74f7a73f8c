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

#ifndef FAIRDIV_SRC_INTERSECTION_HPP_
#define FAIRDIV_SRC_INTERSECTION_HPP_

#include <memory>
#include <vector>

#include "matroid.hpp"
#include "rational.hpp"

namespace fairdiv {

// Maximum-weight assignment of items to agents over the intersection of
// two matroids on agent-item pairs: the direct sum of the per-agent
// constraints, and the unit-capacity partition matroid that lets each
// item go to one agent. Augmenting paths in the exchange graph are
// selected minimum-length first, fewest arcs second, which keeps every
// intermediate set maximum-weight for its size; pair weights are
// value_offset + values[agent][item], so a large offset makes
// cardinality dominate value. Returns item -> agent (-1 unassigned).
std::vector<int> weighted_intersection_assignment(
    const std::vector<std::shared_ptr<const Matroid>>& agent_matroids,
    int num_items, const std::vector<std::vector<Rational>>& values,
    const Rational& value_offset);

// Whether every item can be assigned simultaneously, i.e. the
// intersection above has a common independent set of full size.
bool complete_allocation_exists(
    const std::vector<std::shared_ptr<const Matroid>>& agent_matroids,
    int num_items);

class Instance;
struct SwmAllocation {
  std::vector<ItemSet> bundles;
  Rational welfare;
};

// Complete feasible allocation maximizing total value. Requires matroid
// constraints for every agent; the weight offset forces all items to be
// allocated first, maximum value second.
SwmAllocation max_weight_swm(const Instance& instance);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_INTERSECTION_HPP_
