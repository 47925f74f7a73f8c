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

#include "algorithms.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <utility>

#include "error.hpp"
#include "fairness.hpp"
#include "intersection.hpp"
#include "matching.hpp"
#include "matroid.hpp"

namespace fairdiv {
namespace {

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> resolve_order(const Instance& instance,
                               const SolveOptions& options) {
  const int n = instance.num_agents();
  if (options.order.empty()) return identity_order(n);
  if (static_cast<int>(options.order.size()) != n) {
    throw_invalid("agent order must list every agent exactly once");
  }
  std::vector<char> seen(n, 0);
  for (int agent : options.order) {
    if (agent < 0 || agent >= n || seen[agent]) {
      throw_invalid("agent order must be a permutation of 0.." +
                    std::to_string(n - 1));
    }
    seen[agent] = 1;
  }
  return options.order;
}

const SharedCategories& require_shared(const Instance& instance,
                                       const std::string& algorithm) {
  if (!instance.shared_categories()) {
    throw_capability(algorithm +
                     " needs every agent constrained by the same categories");
  }
  return *instance.shared_categories();
}

std::vector<long long> category_caps(const SharedCategories& shared,
                                     int category) {
  std::vector<long long> caps(shared.capacities.size());
  for (size_t i = 0; i < caps.size(); ++i) {
    caps[i] = shared.capacities[i][category];
  }
  return caps;
}

// Round-robin over local item ids 0..k-1: cycle through sigma until
// everything is taken, skipping capacity-exhausted agents; the picker
// takes its highest-value remaining item, ties to the lowest id.
// Returns the number of passes over sigma; bundles come back in pick
// order, unsorted.
template <typename ValueFn>
long long rr_core(int k, int num_agents, ValueFn&& value,
                  const std::vector<long long>& caps,
                  const std::vector<int>& sigma,
                  std::vector<std::vector<int>>& local_bundles) {
  std::vector<char> taken(k, 0);
  std::vector<long long> count(num_agents, 0);
  int remaining = k;
  long long passes = 0;
  local_bundles.assign(num_agents, {});
  while (remaining > 0) {
    ++passes;
    bool progressed = false;
    for (int agent : sigma) {
      if (remaining == 0) break;
      if (count[agent] >= caps[agent]) continue;
      int best = -1;
      for (int t = 0; t < k; ++t) {
        if (taken[t]) continue;
        if (best < 0 || value(agent, best) < value(agent, t)) best = t;
      }
      taken[best] = 1;
      --remaining;
      ++count[agent];
      local_bundles[agent].push_back(best);
      progressed = true;
    }
    if (!progressed) {
      throw_internal("round-robin pass allocated nothing with items left");
    }
  }
  return passes;
}

long long run_crr_category(const Instance& instance, const ItemSet& items,
                           const std::vector<long long>& caps,
                           const std::vector<int>& sigma,
                           Allocation& bundles) {
  std::vector<std::vector<int>> local;
  long long passes = rr_core(
      static_cast<int>(items.size()), instance.num_agents(),
      [&](int agent, int t) -> const Rational& {
        return instance.value(agent, items[t]);
      },
      caps, sigma, local);
  for (int agent = 0; agent < instance.num_agents(); ++agent) {
    for (int t : local[agent]) {
      set_insert(bundles[agent], items[t]);
    }
  }
  return passes;
}

Rational total_welfare(const Instance& instance, const Allocation& bundles) {
  Rational total = 0;
  for (int i = 0; i < instance.num_agents(); ++i) {
    total = total + instance.value(i, bundles[i]);
  }
  return total;
}

// Sum of positive pairwise envy under raw bundle values.
Rational envy_potential(const Instance& instance, const Allocation& bundles) {
  Rational total = 0;
  for (int i = 0; i < instance.num_agents(); ++i) {
    Rational own = instance.value(i, bundles[i]);
    for (int j = 0; j < instance.num_agents(); ++j) {
      if (i == j) continue;
      Rational gap = instance.value(i, bundles[j]) - own;
      if (Rational(0) < gap) total = total + gap;
    }
  }
  return total;
}

const char* const kNotBaseOrderable =
    "the shared constraint is not base-orderable: two bundles admit no "
    "feasible-exchange bijection (the k4-graphic fixture is the smallest "
    "such matroid)";

struct PaddedSetup {
  std::unique_ptr<Instance> instance;
  std::shared_ptr<const Matroid> matroid;
  int real_items = 0;
  int padded_items = 0;
  int rank = 0;
};

// Extend the shared matroid with zero-value filler items until every
// agent can hold a base; n bases then cover the padded item set
// exactly, so swap arguments can assume bases throughout.
PaddedSetup make_padded(const Instance& instance) {
  PaddedSetup setup;
  std::shared_ptr<const Matroid> base = instance.constraint(0).matroid;
  const int n = instance.num_agents();
  setup.rank = full_rank(*base);
  setup.real_items = instance.num_items();
  long long target = static_cast<long long>(setup.rank) * n;
  if (target < setup.real_items || target > 1'000'000) {
    throw_internal("padding target out of range for this instance");
  }
  setup.padded_items = static_cast<int>(target);
  setup.matroid = free_extend(base, setup.padded_items - setup.real_items);
  std::vector<std::vector<Rational>> values(n);
  for (int i = 0; i < n; ++i) {
    values[i] = instance.valuations()[i];
    values[i].resize(setup.padded_items, Rational(0));
  }
  setup.instance = std::make_unique<Instance>(Instance::with_shared_constraint(
      std::move(values), matroid_constraint(setup.matroid), instance.id()));
  return setup;
}

Allocation strip_padding(const Allocation& padded, int real_items) {
  Allocation out(padded.size());
  for (size_t i = 0; i < padded.size(); ++i) {
    for (int item : padded[i]) {
      if (item < real_items) out[i].push_back(item);
    }
  }
  return out;
}

Allocation swm_base_start(const Instance& padded, int rank) {
  Allocation bundles = max_weight_swm(padded).bundles;
  for (const ItemSet& bundle : bundles) {
    if (static_cast<int>(bundle.size()) != rank) {
      throw_internal("welfare-maximal start did not hand every agent a base");
    }
  }
  return bundles;
}

void apply_swap(Allocation& bundles, int i, int j, int give, int get) {
  bundles[i] = set_with(set_without(bundles[i], give), get);
  bundles[j] = set_with(set_without(bundles[j], get), give);
}

SolveResult run_binary_swaps(const Instance& instance,
                             const SolveOptions& options) {
  PaddedSetup setup = make_padded(instance);
  const Instance& padded = *setup.instance;
  const int n = padded.num_agents();
  Allocation bundles = swm_base_start(padded, setup.rank);
  long long swaps = 0;
  for (;;) {
    int vi = -1;
    int vj = -1;
    for (int i = 0; i < n && vi < 0; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational gap = padded.value(i, bundles[j]) - padded.value(i, bundles[i]);
        if (!(gap < Rational(2))) {
          vi = i;
          vj = j;
          break;
        }
      }
    }
    if (vi < 0) break;
    Rational welfare_before;
    Rational phi_before;
    if (options.check_invariants) {
      welfare_before = total_welfare(padded, bundles);
      phi_before = envy_potential(padded, bundles);
    }
    auto bijection =
        feasible_exchange_bijection(*setup.matroid, bundles[vi], bundles[vj]);
    if (!bijection) throw_capability(kNotBaseOrderable);
    int give = -1;
    int get = -1;
    for (const auto& [x, y] : *bijection) {
      if (padded.value(vi, x) == Rational(0) &&
          padded.value(vi, y) == Rational(1)) {
        give = x;
        get = y;
        break;
      }
    }
    if (give < 0) {
      throw_internal("no improving swap pair despite an envy gap of two");
    }
    if (options.check_invariants &&
        !(padded.value(vj, get) == Rational(1) &&
          padded.value(vj, give) == Rational(0))) {
      throw_internal("swap pair is not value-neutral for the envied agent");
    }
    apply_swap(bundles, vi, vj, give, get);
    ++swaps;
    if (swaps > setup.padded_items) {
      throw_internal("swap count exceeded the item bound");
    }
    if (options.check_invariants) {
      if (!(total_welfare(padded, bundles) == welfare_before)) {
        throw_internal("total welfare changed across a swap");
      }
      if (!(envy_potential(padded, bundles) < phi_before)) {
        throw_internal("envy potential failed to decrease across a swap");
      }
    }
  }
  SolveResult result;
  result.allocation = strip_padding(bundles, setup.real_items);
  result.algorithm = "iterated_swaps";
  result.guarantee =
      "EF1 and maximum welfare (three agents, binary valuations, "
      "base-orderable constraint)";
  result.iterations = swaps;
  return result;
}

SolveResult run_identical_swaps(const Instance& instance,
                                const SolveOptions& options) {
  PaddedSetup setup = make_padded(instance);
  const Instance& padded = *setup.instance;
  const int n = padded.num_agents();
  const long long mq = setup.padded_items;
  Allocation bundles = swm_base_start(padded, setup.rank);
  long long swaps = 0;
  for (;;) {
    // Everyone shares agent 0's valuation.
    std::vector<Rational> worth(n);
    std::vector<Rational> top(n);
    for (int i = 0; i < n; ++i) {
      worth[i] = padded.value(0, bundles[i]);
      top[i] = 0;
      for (int item : bundles[i]) {
        top[i] = max(top[i], padded.value(0, item));
      }
    }
    auto beyond_one = [&](int i, int j) {
      return worth[i] < worth[j] - top[j];
    };
    int vi = -1;
    for (int i = 0; i < n; ++i) {
      bool envious = false;
      for (int j = 0; j < n && !envious; ++j) {
        if (i != j && beyond_one(i, j)) envious = true;
      }
      if (envious && (vi < 0 || worth[i] < worth[vi])) vi = i;
    }
    if (vi < 0) break;
    int vj = -1;
    for (int j = 0; j < n; ++j) {
      if (j != vi && beyond_one(vi, j) && (vj < 0 || worth[vj] < worth[j])) {
        vj = j;
      }
    }
    auto bijection =
        feasible_exchange_bijection(*setup.matroid, bundles[vi], bundles[vj]);
    if (!bijection) throw_capability(kNotBaseOrderable);
    int give = -1;
    int get = -1;
    Rational best_gain = 0;
    for (const auto& [x, y] : *bijection) {
      Rational gain = padded.value(0, y) - padded.value(0, x);
      if (give < 0 || best_gain < gain) {
        give = x;
        get = y;
        best_gain = gain;
      }
    }
    // The envied bundle funds a gain of at least worth[vj] / mq^2; the
    // termination argument rests on that floor.
    if (best_gain * Rational(mq * mq) < worth[vj]) {
      throw_internal("best swap gain fell below the guaranteed floor");
    }
    Rational squares_before;
    if (options.check_invariants) {
      Rational welfare_before = total_welfare(padded, bundles);
      squares_before = 0;
      for (int i = 0; i < n; ++i) {
        squares_before = squares_before + worth[i] * worth[i];
      }
      apply_swap(bundles, vi, vj, give, get);
      if (!(total_welfare(padded, bundles) == welfare_before)) {
        throw_internal("total welfare changed across a swap");
      }
      Rational squares_after = 0;
      for (int i = 0; i < n; ++i) {
        Rational w = padded.value(0, bundles[i]);
        squares_after = squares_after + w * w;
      }
      if (!(squares_after < squares_before)) {
        throw_internal("sum of squared bundle values failed to decrease");
      }
    } else {
      apply_swap(bundles, vi, vj, give, get);
    }
    ++swaps;
    if (swaps > 1'000'000) {
      throw_internal("swap loop exceeded its runaway guard");
    }
  }
  SolveResult result;
  result.allocation = strip_padding(bundles, setup.real_items);
  result.algorithm = "iterated_swaps";
  result.guarantee = "EF1 (identical valuations, base-orderable constraint)";
  result.iterations = swaps;
  return result;
}

}  // namespace

SolveResult crr(const Instance& instance, const SolveOptions& options) {
  const SharedCategories& shared = require_shared(instance, "crr");
  if (shared.categories.size() != 1) {
    throw_capability("crr handles exactly one category; this instance has " +
                     std::to_string(shared.categories.size()));
  }
  std::vector<int> sigma = resolve_order(instance, options);
  Allocation bundles(instance.num_agents());
  SolveResult result;
  result.iterations = run_crr_category(instance, shared.categories[0],
                                       category_caps(shared, 0), sigma,
                                       bundles);
  if (options.check_invariants) {
    // An earlier agent never feasibly envies a later one, not even up
    // to an item.
    const int n = instance.num_agents();
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (feasible_value(instance, sigma[p], bundles[sigma[p]]) <
            feasible_value(instance, sigma[p], bundles[sigma[q]])) {
          throw_internal("an earlier agent envies a later one after crr");
        }
      }
    }
  }
  result.allocation = std::move(bundles);
  result.algorithm = "crr";
  result.guarantee = "F-EF1 (one category, capped round-robin)";
  return result;
}

SolveResult back_and_forth_crr(const Instance& instance,
                               const SolveOptions& options) {
  const SharedCategories& shared = require_shared(instance, "back_and_forth_crr");
  if (shared.categories.size() > 2) {
    throw_capability(
        "back_and_forth_crr handles at most two categories; this instance "
        "has " +
        std::to_string(shared.categories.size()));
  }
  std::vector<int> sigma = resolve_order(instance, options);
  Allocation bundles(instance.num_agents());
  long long passes = 0;
  for (size_t h = 0; h < shared.categories.size(); ++h) {
    std::vector<int> order = sigma;
    if (h == 1) std::reverse(order.begin(), order.end());
    passes += run_crr_category(instance, shared.categories[h],
                               category_caps(shared, static_cast<int>(h)),
                               order, bundles);
  }
  SolveResult result;
  result.allocation = std::move(bundles);
  result.algorithm = "back_and_forth_crr";
  result.guarantee = "F-EF1 (two categories, back-and-forth round-robin)";
  result.iterations = passes;
  return result;
}

SolveResult per_category_crr(const Instance& instance,
                             const SolveOptions& options) {
  const SharedCategories& shared = require_shared(instance, "per_category_crr");
  if (!instance.identical_valuations()) {
    throw_capability("per_category_crr needs identical valuations");
  }
  const int categories = static_cast<int>(shared.categories.size());
  Allocation bundles(instance.num_agents());
  for (int h = 0; h < categories; ++h) {
    TopoResult topo =
        topological_order(envy_graph(instance, bundles, /*feasible=*/true));
    if (!topo.acyclic) {
      throw_internal(
          "feasible envy graph grew a cycle under identical valuations");
    }
    run_crr_category(instance, shared.categories[h], category_caps(shared, h),
                     topo.order, bundles);
  }
  if (options.check_invariants &&
      !topological_order(envy_graph(instance, bundles, true)).acyclic) {
    throw_internal("feasible envy graph has a cycle after the final category");
  }
  SolveResult result;
  result.allocation = std::move(bundles);
  result.algorithm = "per_category_crr";
  result.guarantee =
      "F-EF1 and Pareto-efficient (identical valuations, per-category "
      "round-robin)";
  result.iterations = categories;
  return result;
}

SolveResult per_category_rr(const Instance& instance,
                            const SolveOptions& options) {
  const SharedCategories& shared = require_shared(instance, "per_category_rr");
  const int n = instance.num_agents();
  const int categories = static_cast<int>(shared.categories.size());
  for (int h = 0; h < categories; ++h) {
    for (int i = 1; i < n; ++i) {
      if (shared.capacities[i][h] != shared.capacities[0][h]) {
        throw_capability(
            "per_category_rr needs identical capacities: bundle rotation "
            "breaks feasibility when agents " +
            std::to_string(0) + " and " + std::to_string(i) +
            " disagree on category " + std::to_string(h));
      }
    }
  }
  Allocation bundles(n);
  long long rotations = 0;
  for (int h = 0; h < categories; ++h) {
    std::vector<int> sigma;
    for (;;) {
      // Identical capacities make bundles interchangeable, so raw
      // bundle values are the right envy measure here.
      TopoResult topo =
          topological_order(envy_graph(instance, bundles, /*feasible=*/false));
      if (topo.acyclic) {
        sigma = topo.order;
        break;
      }
      // Everyone on the cycle takes the bundle of the agent it envies.
      ItemSet first = std::move(bundles[topo.cycle.front()]);
      for (size_t t = 0; t + 1 < topo.cycle.size(); ++t) {
        bundles[topo.cycle[t]] = std::move(bundles[topo.cycle[t + 1]]);
      }
      bundles[topo.cycle.back()] = std::move(first);
      ++rotations;
      if (rotations > 1'000'000) {
        throw_internal("envy-cycle rotation failed to settle");
      }
    }
    run_crr_category(instance, shared.categories[h], category_caps(shared, h),
                     sigma, bundles);
  }
  SolveResult result;
  result.allocation = std::move(bundles);
  result.algorithm = "per_category_rr";
  result.guarantee =
      "EF1 (identical capacities, per-category round-robin with envy-cycle "
      "rotation)";
  result.iterations = categories;
  return result;
}

SolveResult iterated_priority_matching(const Instance& instance,
                                       const SolveOptions& options) {
  const SharedCategories& shared =
      require_shared(instance, "iterated_priority_matching");
  if (!instance.binary_valuations()) {
    throw_capability("iterated_priority_matching needs binary valuations");
  }
  const int n = instance.num_agents();
  const int categories = static_cast<int>(shared.categories.size());
  Allocation bundles(n);
  long long rounds = 0;
  for (int h = 0; h < categories; ++h) {
    const ItemSet& items = shared.categories[h];
    const int k = static_cast<int>(items.size());
    std::vector<char> taken(k, 0);
    std::vector<long long> count(n, 0);
    long long max_cap = 0;
    for (int i = 0; i < n; ++i) {
      max_cap = std::max(max_cap, shared.capacities[i][h]);
    }
    for (long long round = 0; round < max_cap; ++round) {
      TopoResult topo =
          topological_order(envy_graph(instance, bundles, /*feasible=*/true));
      if (!topo.acyclic) {
        throw_internal("feasible envy graph grew a cycle between rounds");
      }
      std::vector<int> rank(n);
      for (int pos = 0; pos < n; ++pos) rank[topo.order[pos]] = pos;
      std::vector<int> active;
      for (int i = 0; i < n; ++i) {
        if (count[i] < shared.capacities[i][h]) active.push_back(i);
      }
      // Envious agents match first: priority follows the topological
      // positions, which are unique, so this order is total.
      std::vector<int> priority(active.size());
      std::iota(priority.begin(), priority.end(), 0);
      std::sort(priority.begin(), priority.end(), [&](int a, int b) {
        return rank[active[a]] < rank[active[b]];
      });
      std::vector<std::vector<int>> adjacency(active.size());
      for (size_t a = 0; a < active.size(); ++a) {
        for (int t = 0; t < k; ++t) {
          if (!taken[t] &&
              instance.value(active[a], items[t]) == Rational(1)) {
            adjacency[a].push_back(t);
          }
        }
      }
      MatchingResult match = priority_matching(static_cast<int>(active.size()),
                                               k, adjacency, priority);
      if (match.size == 0) break;
      for (size_t a = 0; a < active.size(); ++a) {
        int t = match.left_match[a];
        if (t < 0) continue;
        taken[t] = 1;
        ++count[active[a]];
        set_insert(bundles[active[a]], items[t]);
      }
      ++rounds;
      if (options.check_invariants) {
        if (!topological_order(envy_graph(instance, bundles, true)).acyclic) {
          throw_internal("envy graph grew a cycle after a matching round");
        }
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i != j && Rational(1) < positive_feasible_envy(instance,
                                                               bundles, i, j)) {
              throw_internal("pairwise envy exceeded 1 after a matching round");
            }
          }
        }
      }
    }
    // Nobody with remaining capacity wants what is left; hand the rest
    // out by id.
    for (int t = 0; t < k; ++t) {
      if (taken[t]) continue;
      int target = -1;
      for (int i = 0; i < n; ++i) {
        if (count[i] < shared.capacities[i][h]) {
          target = i;
          break;
        }
      }
      if (target < 0) {
        throw_internal("leftover item with no remaining capacity");
      }
      taken[t] = 1;
      ++count[target];
      set_insert(bundles[target], items[t]);
    }
  }
  bool binary_caps = true;
  for (int i = 0; i < n && binary_caps; ++i) {
    for (int h = 0; h < categories; ++h) {
      if (shared.capacities[i][h] > 1) {
        binary_caps = false;
        break;
      }
    }
  }
  SolveResult result;
  result.allocation = std::move(bundles);
  result.algorithm = "iterated_priority_matching";
  result.guarantee =
      binary_caps
          ? "F-EF1 and maximum welfare (binary valuations and capacities, "
            "iterated priority matching)"
          : "F-EF1 (binary valuations, iterated priority matching)";
  result.iterations = rounds;
  return result;
}

SolveResult rr_squared(const Instance& instance, const SolveOptions& options) {
  if (instance.num_agents() != 2) {
    throw_capability("rr_squared is a two-agent algorithm");
  }
  const SharedCategories& shared = require_shared(instance, "rr_squared");
  if (options.first_agent != 0 && options.first_agent != 1) {
    throw_invalid("the first agent must be 0 or 1");
  }
  const int categories = static_cast<int>(shared.categories.size());
  // First-mover surplus of each category, simulated with both agents
  // playing their true valuations.
  std::vector<std::vector<Rational>> surplus_of(2,
                                                std::vector<Rational>(categories));
  for (int agent = 0; agent < 2; ++agent) {
    for (int h = 0; h < categories; ++h) {
      Allocation sim(2);
      run_crr_category(instance, shared.categories[h], category_caps(shared, h),
                       {agent, 1 - agent}, sim);
      surplus_of[agent][h] = feasible_value(instance, agent, sim[agent]) -
                             feasible_value(instance, agent, sim[1 - agent]);
    }
  }
  std::vector<std::vector<int>> preference(2, identity_order(categories));
  for (int agent = 0; agent < 2; ++agent) {
    std::stable_sort(preference[agent].begin(), preference[agent].end(),
                     [&](int a, int b) {
                       return surplus_of[agent][b] < surplus_of[agent][a];
                     });
  }
  Allocation bundles(2);
  std::vector<char> used(categories, 0);
  int active = options.first_agent;
  for (int step = 0; step < categories; ++step) {
    int chosen = -1;
    for (int h : preference[active]) {
      if (!used[h]) {
        chosen = h;
        break;
      }
    }
    used[chosen] = 1;
    run_crr_category(instance, shared.categories[chosen],
                     category_caps(shared, chosen), {active, 1 - active},
                     bundles);
    active = 1 - active;
  }
  if (options.check_invariants &&
      Rational(0) < positive_feasible_envy(instance, bundles,
                                           options.first_agent,
                                           1 - options.first_agent)) {
    throw_internal("the first-picking agent ended up with positive envy");
  }
  SolveResult result;
  result.allocation = std::move(bundles);
  result.algorithm = "rr_squared";
  result.guarantee = "F-EF1 (two agents, surplus-ordered category round-robin)";
  result.iterations = categories;
  return result;
}

SolveResult iterated_swaps(const Instance& instance,
                           const SolveOptions& options) {
  if (!instance.all_matroid_constraints() || !instance.identical_constraints()) {
    throw_capability(
        "iterated_swaps needs one matroid constraint shared by every agent");
  }
  if (instance.binary_valuations() && instance.num_agents() == 3) {
    return run_binary_swaps(instance, options);
  }
  if (instance.identical_valuations()) {
    return run_identical_swaps(instance, options);
  }
  throw_capability(
      "iterated_swaps serves identical valuations (any number of agents) or "
      "exactly three agents with binary valuations; two-agent additive "
      "instances go through cut_and_choose_two_agents");
}

SolveResult cut_and_choose_two_agents(const Instance& instance,
                                      const SolveOptions& options) {
  if (instance.num_agents() != 2) {
    throw_capability("cut_and_choose_two_agents needs exactly two agents");
  }
  if (!instance.all_matroid_constraints() || !instance.identical_constraints()) {
    throw_capability(
        "cut_and_choose_two_agents needs one matroid constraint shared by "
        "both agents");
  }
  // The divider splits as if both seats used agent 0's valuation.
  std::vector<std::vector<Rational>> values = {instance.valuations()[0],
                                               instance.valuations()[0]};
  Instance divider = Instance::with_shared_constraint(
      std::move(values), instance.constraint(0), instance.id());
  SolveResult split = iterated_swaps(divider, options);
  const ItemSet& b0 = split.allocation[0];
  const ItemSet& b1 = split.allocation[1];
  Rational w0 = instance.value(1, b0);
  Rational w1 = instance.value(1, b1);
  bool chooser_takes_first;
  if (w0 == w1) {
    // Tie: the chooser takes the bundle with the lower smallest item id.
    long long key0 = b0.empty() ? std::numeric_limits<long long>::max()
                                : b0.front();
    long long key1 = b1.empty() ? std::numeric_limits<long long>::max()
                                : b1.front();
    chooser_takes_first = key0 < key1;
  } else {
    chooser_takes_first = w1 < w0;
  }
  SolveResult result;
  result.allocation =
      chooser_takes_first ? Allocation{b1, b0} : Allocation{b0, b1};
  result.algorithm = "cut_and_choose_two_agents";
  result.guarantee =
      "EF1 (two agents, divide-and-choose; the chooser is envy-free)";
  result.iterations = split.iterations;
  return result;
}

std::vector<std::string> algorithm_names() {
  return {"crr",
          "back_and_forth_crr",
          "per_category_crr",
          "per_category_rr",
          "iterated_priority_matching",
          "rr_squared",
          "iterated_swaps",
          "cut_and_choose_two_agents"};
}

SolveResult solve_with(const std::string& name, const Instance& instance,
                       const SolveOptions& options) {
  if (name.empty() || name == "auto") return dispatch_solve(instance, options);
  if (name == "crr") return crr(instance, options);
  if (name == "back_and_forth_crr") return back_and_forth_crr(instance, options);
  if (name == "per_category_crr") return per_category_crr(instance, options);
  if (name == "per_category_rr") return per_category_rr(instance, options);
  if (name == "iterated_priority_matching") {
    return iterated_priority_matching(instance, options);
  }
  if (name == "rr_squared") return rr_squared(instance, options);
  if (name == "iterated_swaps") return iterated_swaps(instance, options);
  if (name == "cut_and_choose_two_agents") {
    return cut_and_choose_two_agents(instance, options);
  }
  throw_invalid("unknown algorithm '" + name + "'");
}

std::pair<ItemSet, ItemSet> crr_single_category(
    const std::vector<Rational>& play_first,
    const std::vector<Rational>& play_second, long long cap_first,
    long long cap_second, int leader) {
  if (play_first.size() != play_second.size()) {
    throw_invalid("the two played valuations must cover the same items");
  }
  if (cap_first < 0 || cap_second < 0) {
    throw_invalid("capacities must be non-negative");
  }
  if (leader != 0 && leader != 1) throw_invalid("leader must be 0 or 1");
  const int k = static_cast<int>(play_first.size());
  if (cap_first + cap_second < k) {
    throw_invalid("capacities sum below the category size");
  }
  std::vector<int> sigma =
      leader == 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
  std::vector<std::vector<int>> local;
  rr_core(
      k, 2,
      [&](int agent, int t) -> const Rational& {
        return agent == 0 ? play_first[t] : play_second[t];
      },
      {cap_first, cap_second}, sigma, local);
  std::sort(local[0].begin(), local[0].end());
  std::sort(local[1].begin(), local[1].end());
  return {std::move(local[0]), std::move(local[1])};
}

Rational surplus(const Instance& instance, const Allocation& allocation,
                 int agent, int category) {
  if (instance.num_agents() != 2) {
    throw_invalid("surplus is defined for two-agent instances");
  }
  const SharedCategories& shared = require_shared(instance, "surplus");
  if (agent != 0 && agent != 1) throw_invalid("agent must be 0 or 1");
  if (category < 0 ||
      category >= static_cast<int>(shared.categories.size())) {
    throw_invalid("category id out of range");
  }
  if (allocation.size() != 2) {
    throw_invalid("surplus needs a two-bundle allocation");
  }
  const ItemSet& items = shared.categories[category];
  ItemSet own;
  ItemSet other;
  std::set_intersection(allocation[agent].begin(), allocation[agent].end(),
                        items.begin(), items.end(), std::back_inserter(own));
  std::set_intersection(allocation[1 - agent].begin(),
                        allocation[1 - agent].end(), items.begin(), items.end(),
                        std::back_inserter(other));
  return feasible_value(instance, agent, own) -
         feasible_value(instance, agent, other);
}

}  // namespace fairdiv
