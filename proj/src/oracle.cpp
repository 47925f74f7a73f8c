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

#include "oracle.hpp"

#include <cstdlib>
#include <string>

#include "error.hpp"

namespace fairdiv {
namespace {

constexpr long long kDefaultBound = 10'000'000;

// Assigns items 0..m-1 in order, one running bundle per agent. Bundles
// under downward-closed constraints are pruned as they grow; the rest
// are checked once complete.
struct Enumerator {
  const Instance& instance;
  const std::function<bool(const Allocation&)>& visit;
  Allocation bundles;
  std::vector<char> closed;
  bool stopped = false;

  Enumerator(const Instance& inst,
             const std::function<bool(const Allocation&)>& v)
      : instance(inst), visit(v) {
    bundles.assign(inst.num_agents(), {});
    closed.resize(inst.num_agents());
    for (int i = 0; i < inst.num_agents(); ++i) {
      const Constraint& constraint = inst.constraint(i);
      closed[i] = constraint.is_matroid() || constraint.system->downward_closed()
                      ? 1
                      : 0;
    }
  }

  void run(int item) {
    if (stopped) return;
    if (item == instance.num_items()) {
      bool all_ok = true;
      for (int i = 0; i < instance.num_agents() && all_ok; ++i) {
        if (!closed[i] && !instance.constraint(i).is_feasible(bundles[i])) {
          all_ok = false;
        }
      }
      if (all_ok && !visit(bundles)) stopped = true;
      return;
    }
    for (int agent = 0; agent < instance.num_agents(); ++agent) {
      bundles[agent].push_back(item);
      bool viable = true;
      if (closed[agent] &&
          !instance.constraint(agent).is_feasible(bundles[agent])) {
        viable = false;
      }
      if (viable) run(item + 1);
      bundles[agent].pop_back();
      if (stopped) return;
    }
  }
};

void require_within_bound(const Instance& instance, long long bound) {
  if (!assignments_within_bound(instance.num_agents(), instance.num_items(),
                                bound)) {
    throw_capability(
        "exhaustive search over " + std::to_string(instance.num_agents()) +
        "^" + std::to_string(instance.num_items()) +
        " assignments exceeds the oracle bound of " + std::to_string(bound) +
        " (set FAIRDIV_ORACLE_BOUND or pass --bound to raise it)");
  }
}

}  // namespace

long long default_oracle_bound() {
  if (const char* env = std::getenv("FAIRDIV_ORACLE_BOUND")) {
    char* end = nullptr;
    long long parsed = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return kDefaultBound;
}

bool assignments_within_bound(int n, int m, long long bound) {
  long long total = 1;
  for (int step = 0; step < m; ++step) {
    if (total > bound / n) return false;
    total *= n;
  }
  return total <= bound;
}

void enumerate_feasible(const Instance& instance, long long bound,
                        const std::function<bool(const Allocation&)>& visit) {
  require_within_bound(instance, bound);
  Enumerator enumerator(instance, visit);
  enumerator.run(0);
}

long long count_feasible(const Instance& instance, long long bound) {
  long long count = 0;
  enumerate_feasible(instance, bound, [&count](const Allocation&) {
    ++count;
    return true;
  });
  return count;
}

ExistsFairResult exists_fair(const Instance& instance, FairnessNotion notion,
                             long long bound) {
  ExistsFairResult result;
  enumerate_feasible(instance, bound, [&](const Allocation& allocation) {
    if (check_notion(instance, allocation, notion)) {
      result.exists = true;
      result.witness = allocation;
      return false;
    }
    return true;
  });
  return result;
}

std::vector<Allocation> max_nash_welfare(const Instance& instance,
                                         long long bound) {
  // Guards the stored tie set, not the search: a degenerate instance
  // (say, all-zero valuations) ties every allocation.
  constexpr long long kMaxStoredTies = 200'000;
  const int n = instance.num_agents();
  std::vector<Allocation> best;
  int best_positive = -1;
  Rational best_product = 0;
  enumerate_feasible(instance, bound, [&](const Allocation& allocation) {
    int positive = 0;
    Rational product = 1;
    for (int i = 0; i < n; ++i) {
      Rational worth = instance.value(i, allocation[i]);
      if (Rational(0) < worth) {
        ++positive;
        product = product * worth;
      }
    }
    if (positive > best_positive ||
        (positive == best_positive && best_product < product)) {
      best_positive = positive;
      best_product = product;
      best.clear();
    }
    if (positive == best_positive && !(product < best_product)) {
      if (static_cast<long long>(best.size()) >= kMaxStoredTies) {
        throw_capability("more than " + std::to_string(kMaxStoredTies) +
                         " allocations tie for maximum Nash welfare");
      }
      best.push_back(allocation);
    }
    return true;
  });
  return best;
}

SwmOracleResult swm_oracle(const Instance& instance, long long bound) {
  const int n = instance.num_agents();
  SwmOracleResult result;
  result.welfare = 0;
  bool found = false;
  enumerate_feasible(instance, bound, [&](const Allocation& allocation) {
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      total = total + instance.value(i, allocation[i]);
    }
    if (!found || result.welfare < total) {
      found = true;
      result.welfare = total;
      result.allocation = allocation;
    }
    return true;
  });
  if (!found) {
    throw_internal("no complete feasible allocation despite the load check");
  }
  return result;
}

}  // namespace fairdiv
