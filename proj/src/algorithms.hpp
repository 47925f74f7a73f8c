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

#ifndef FAIRDIV_SRC_ALGORITHMS_HPP_
#define FAIRDIV_SRC_ALGORITHMS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "instance.hpp"

namespace fairdiv {

struct SolveOptions {
  // Turns on the mid-run assertions (envy-graph shape, welfare and
  // potential accounting). Violations raise internal errors.
  bool check_invariants = false;
  // Chooser seat for rr_squared.
  int first_agent = 0;
  // Agent order for crr / back_and_forth_crr; empty means 0..n-1.
  std::vector<int> order;
};

struct SolveResult {
  Allocation allocation;
  std::string algorithm;
  // What the output provably satisfies, e.g. "F-EF1 (one category,
  // capped round-robin)".
  std::string guarantee;
  // Main-loop count; its meaning is per algorithm (round-robin passes,
  // matching rounds, swaps).
  long long iterations = 0;
};

// Capped round-robin for a single category.
SolveResult crr(const Instance& instance, const SolveOptions& options = {});

// Two categories: the order runs forward in the first category and
// backward in the second.
SolveResult back_and_forth_crr(const Instance& instance,
                               const SolveOptions& options = {});

// Identical valuations, any category structure; reorders agents
// between categories by the feasible envy graph.
SolveResult per_category_crr(const Instance& instance,
                             const SolveOptions& options = {});

// Baseline for identical capacities: round-robin per category with
// envy-cycle bundle rotation between categories.
SolveResult per_category_rr(const Instance& instance,
                            const SolveOptions& options = {});

// Binary valuations over shared categories; repeated priority
// matchings, envious agents first.
SolveResult iterated_priority_matching(const Instance& instance,
                                       const SolveOptions& options = {});

// Two agents over shared categories: each agent ranks categories by
// surplus, then the agents alternate picking the category to run.
SolveResult rr_squared(const Instance& instance,
                       const SolveOptions& options = {});

// Identical base-orderable constraint: pad with zero-value fillers to
// bases, start from a welfare-maximal allocation and trade pairwise
// until EF1. Handles identical valuations (any count of agents) and
// binary valuations (up to three agents).
SolveResult iterated_swaps(const Instance& instance,
                           const SolveOptions& options = {});

// Two agents, identical constraint: agent 0's valuation drives an
// identical-valuation split; agent 1 picks the bundle it prefers.
SolveResult cut_and_choose_two_agents(const Instance& instance,
                                      const SolveOptions& options = {});

// Picks the strongest applicable algorithm, or raises a capability
// error explaining why none applies.
SolveResult dispatch_solve(const Instance& instance,
                           const SolveOptions& options = {});

std::vector<std::string> algorithm_names();

// name is one of algorithm_names() or "auto".
SolveResult solve_with(const std::string& name, const Instance& instance,
                       const SolveOptions& options = {});

// -- Two-agent category helpers (exposed for property tests). --

// Round-robin over one category whose items 0..k-1 are valued by the
// two played vectors (k = play_first.size()); `leader` picks first.
// Returns the two local-id bundles.
std::pair<ItemSet, ItemSet> crr_single_category(
    const std::vector<Rational>& play_first,
    const std::vector<Rational>& play_second, long long cap_first,
    long long cap_second, int leader);

// How much better the agent did than its opponent inside one category:
// feasible value of its own category slice minus the feasible value of
// the opponent's slice.
Rational surplus(const Instance& instance, const Allocation& allocation,
                 int agent, int category);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_ALGORITHMS_HPP_
