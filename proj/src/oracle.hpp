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

#ifndef FAIRDIV_SRC_ORACLE_HPP_
#define FAIRDIV_SRC_ORACLE_HPP_

#include <functional>
#include <vector>

#include "fairness.hpp"
#include "instance.hpp"

namespace fairdiv {

// 10^7 assignments unless FAIRDIV_ORACLE_BOUND overrides it.
long long default_oracle_bound();

// True when n^m assignments fit under the bound.
bool assignments_within_bound(int n, int m, long long bound);

// Visits every complete feasible allocation in lexicographic order of
// the item -> agent assignment vector. The visitor returns false to
// stop early. Instances beyond the bound are refused up front.
void enumerate_feasible(const Instance& instance, long long bound,
                        const std::function<bool(const Allocation&)>& visit);

long long count_feasible(const Instance& instance,
                         long long bound = default_oracle_bound());

// Does any complete feasible allocation satisfy the notion? The
// witness is the first satisfying allocation in enumeration order.
struct ExistsFairResult {
  bool exists = false;
  Allocation witness;
};
ExistsFairResult exists_fair(const Instance& instance, FairnessNotion notion,
                             long long bound = default_oracle_bound());

// All maximizers of Nash welfare. Products of zero are broken by first
// maximizing how many agents receive positive value, then the product
// over just those agents.
std::vector<Allocation> max_nash_welfare(
    const Instance& instance, long long bound = default_oracle_bound());

struct SwmOracleResult {
  Rational welfare;
  Allocation allocation;  // first maximizer in enumeration order
};

SwmOracleResult swm_oracle(const Instance& instance,
                           long long bound = default_oracle_bound());

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_ORACLE_HPP_
