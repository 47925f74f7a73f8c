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

#include "intersection.hpp"

#include <algorithm>

#include "error.hpp"
#include "instance.hpp"

namespace fairdiv {
namespace {

struct PathState {
  bool reached = false;
  Rational length;
  long long arcs = 0;
  int parent = -1;
};

bool better(const Rational& length, long long arcs, const PathState& s) {
  if (!s.reached) return true;
  if (length != s.length) return length < s.length;
  return arcs < s.arcs;
}

}  // namespace

std::vector<int> weighted_intersection_assignment(
    const std::vector<std::shared_ptr<const Matroid>>& agent_matroids,
    int num_items, const std::vector<std::vector<Rational>>& values,
    const Rational& value_offset) {
  int n = static_cast<int>(agent_matroids.size());
  if (n == 0) throw_invalid("at least one agent required");
  for (const auto& m : agent_matroids) {
    if (!m) throw_invalid("null matroid");
    if (m->ground_size() != num_items) {
      throw_invalid("matroid ground size does not match the item count");
    }
  }
  if (static_cast<int>(values.size()) != n) {
    throw_invalid("one value row per agent required");
  }
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != num_items) {
      throw_invalid("value rows must cover every item");
    }
  }

  int z = n * num_items;  // pair id = agent * num_items + item
  std::vector<char> in_set(z, 0);
  std::vector<ItemSet> slices(n);           // per-agent selected items
  std::vector<int> item_owner(num_items, -1);
  auto weight = [&](int pair) {
    return value_offset + values[pair / num_items][pair % num_items];
  };

  while (true) {
    // Exchange graph search: sources are pairs addable on the direct-sum
    // side, sinks are pairs whose item is free. Node lengths are -w for
    // pairs entering the set and +w for pairs leaving it.
    std::vector<PathState> state(z);
    for (int p = 0; p < z; ++p) {
      if (in_set[p]) continue;
      int agent = p / num_items;
      int item = p % num_items;
      if (agent_matroids[agent]->is_independent(
              set_with(slices[agent], item))) {
        Rational len = -weight(p);
        if (better(len, 0, state[p])) {
          state[p].reached = true;
          state[p].length = len;
          state[p].arcs = 0;
          state[p].parent = -1;
        }
      }
    }

    // Arc construction is interleaved with Bellman-Ford relaxation;
    // arcs are rebuilt once and relaxed to a fixpoint.
    struct Arc {
      int from;
      int to;
    };
    std::vector<Arc> arcs;
    for (int y = 0; y < z; ++y) {
      if (!in_set[y]) continue;
      int agent_y = y / num_items;
      int item_y = y % num_items;
      for (int x = 0; x < z; ++x) {
        if (in_set[x]) continue;
        int agent_x = x / num_items;
        int item_x = x % num_items;
        // y -> x when removing y and adding x keeps the direct sum
        // independent.
        bool ok;
        if (agent_x == agent_y) {
          ok = agent_matroids[agent_x]->is_independent(
              set_with(set_without(slices[agent_x], item_y), item_x));
        } else {
          ok = agent_matroids[agent_x]->is_independent(
              set_with(slices[agent_x], item_x));
        }
        if (ok) arcs.push_back({y, x});
        // x -> y when the item freed by y is the item x needs.
        if (item_x == item_y) arcs.push_back({x, y});
      }
    }

    bool changed = true;
    int passes = 0;
    while (changed) {
      changed = false;
      if (++passes > z + 2) {
        throw_internal("negative cycle in matroid intersection search");
      }
      for (const Arc& a : arcs) {
        if (!state[a.from].reached) continue;
        Rational len = state[a.from].length +
                       (in_set[a.to] ? weight(a.to) : -weight(a.to));
        long long cnt = state[a.from].arcs + 1;
        if (better(len, cnt, state[a.to])) {
          state[a.to].reached = true;
          state[a.to].length = len;
          state[a.to].arcs = cnt;
          state[a.to].parent = a.from;
          changed = true;
        }
      }
    }

    int best_sink = -1;
    for (int p = 0; p < z; ++p) {
      if (in_set[p] || !state[p].reached) continue;
      if (item_owner[p % num_items] != -1) continue;
      if (best_sink == -1 ||
          better(state[p].length, state[p].arcs, state[best_sink])) {
        best_sink = p;
      }
    }
    if (best_sink == -1) break;

    for (int node = best_sink; node != -1; node = state[node].parent) {
      int agent = node / num_items;
      int item = node % num_items;
      if (in_set[node]) {
        in_set[node] = 0;
        set_erase(slices[agent], item);
        if (item_owner[item] == agent) item_owner[item] = -1;
      } else {
        in_set[node] = 1;
        set_insert(slices[agent], item);
        item_owner[item] = agent;
      }
    }
  }

  std::vector<int> assignment(num_items, -1);
  for (int item = 0; item < num_items; ++item) {
    assignment[item] = item_owner[item];
  }
  return assignment;
}

bool complete_allocation_exists(
    const std::vector<std::shared_ptr<const Matroid>>& agent_matroids,
    int num_items) {
  std::vector<std::vector<Rational>> zero(
      agent_matroids.size(), std::vector<Rational>(num_items, Rational(0)));
  std::vector<int> assignment = weighted_intersection_assignment(
      agent_matroids, num_items, zero, Rational(1));
  for (int owner : assignment) {
    if (owner == -1) return false;
  }
  return true;
}

SwmAllocation max_weight_swm(const Instance& instance) {
  int n = instance.num_agents();
  int m = instance.num_items();
  std::vector<std::shared_ptr<const Matroid>> matroids;
  matroids.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Constraint& c = instance.constraint(i);
    if (!c.is_matroid()) {
      throw_capability(
          "welfare maximization requires matroid constraints; agent " +
          std::to_string(i) + " has a " + c.kind() + " constraint");
    }
    matroids.push_back(c.matroid);
  }
  Rational max_value(0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      max_value = max(max_value, instance.value(i, j));
    }
  }
  Rational offset = max_value.is_zero() ? Rational(1) : max_value * m;
  std::vector<std::vector<Rational>> values(n);
  for (int i = 0; i < n; ++i) {
    values[i].reserve(m);
    for (int j = 0; j < m; ++j) values[i].push_back(instance.value(i, j));
  }
  std::vector<int> assignment =
      weighted_intersection_assignment(matroids, m, values, offset);
  SwmAllocation out;
  out.bundles.assign(n, {});
  for (int j = 0; j < m; ++j) {
    if (assignment[j] == -1) {
      throw_invalid(
          "no complete feasible allocation exists for this instance");
    }
    out.bundles[assignment[j]].push_back(j);
  }
  out.welfare = Rational(0);
  for (int i = 0; i < n; ++i) {
    out.welfare += instance.value(i, out.bundles[i]);
  }
  return out;
}

}  // namespace fairdiv
