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

#include "constraints.hpp"

#include <algorithm>

#include "error.hpp"
#include "instance.hpp"

namespace fairdiv {

bool spec_is_matroid_kind(const std::string& kind) {
  return kind == "uniform" || kind == "partition" || kind == "laminar" ||
         kind == "transversal" || kind == "graphic" ||
         kind == "free_extension";
}

std::shared_ptr<const Matroid> build_matroid(const ConstraintSpec& spec,
                                             int ground_size) {
  if (spec.kind == "uniform") {
    return std::make_shared<UniformMatroid>(ground_size, spec.capacity);
  }
  if (spec.kind == "partition") {
    return std::make_shared<PartitionMatroid>(ground_size, spec.sets,
                                              spec.capacities);
  }
  if (spec.kind == "laminar") {
    return std::make_shared<LaminarMatroid>(ground_size, spec.sets,
                                            spec.capacities);
  }
  if (spec.kind == "transversal") {
    return std::make_shared<TransversalMatroid>(ground_size, spec.vertex_count,
                                                spec.sets);
  }
  if (spec.kind == "graphic") {
    auto m = std::make_shared<GraphicMatroid>(spec.vertex_count, spec.edges);
    if (m->ground_size() != ground_size) {
      throw_invalid("graphic constraint must have one edge per item");
    }
    return m;
  }
  if (spec.kind == "free_extension") {
    if (spec.parts.size() != 1) {
      throw_invalid("free extension needs exactly one base constraint");
    }
    return free_extend(
        build_matroid(spec.parts[0], ground_size - spec.extension_count),
        spec.extension_count);
  }
  throw_invalid("unknown matroid kind: " + spec.kind);
}

std::shared_ptr<const SetSystem> build_set_system(const ConstraintSpec& spec,
                                                  int ground_size) {
  if (spec.kind == "budget") {
    return std::make_shared<BudgetSystem>(ground_size, spec.costs,
                                          spec.budget);
  }
  if (spec.kind == "conflict_graph") {
    return std::make_shared<ConflictGraphSystem>(ground_size, spec.edges);
  }
  if (spec.kind == "bipartite_matching") {
    auto s = std::make_shared<BipartiteMatchingSystem>(
        spec.vertex_count, spec.right_count, spec.edges);
    if (s->ground_size() != ground_size) {
      throw_invalid("matching constraint must have one edge per item");
    }
    return s;
  }
  if (spec.kind == "matroid_intersection") {
    if (spec.parts.size() < 2) {
      throw_invalid("matroid intersection needs at least two matroids");
    }
    std::vector<std::shared_ptr<const Matroid>> ms;
    ms.reserve(spec.parts.size());
    for (const ConstraintSpec& part : spec.parts) {
      ms.push_back(build_matroid(part, ground_size));
    }
    return std::make_shared<MatroidIntersectionSystem>(std::move(ms));
  }
  throw_invalid("unknown set-system kind: " + spec.kind);
}

Constraint build_constraint(const ConstraintSpec& spec, int ground_size) {
  Constraint c;
  c.spec = spec;
  if (spec_is_matroid_kind(spec.kind)) {
    c.matroid = build_matroid(spec, ground_size);
  } else {
    c.system = build_set_system(spec, ground_size);
  }
  return c;
}

Constraint matroid_constraint(std::shared_ptr<const Matroid> m) {
  Constraint c;
  c.matroid = std::move(m);
  return c;
}

Constraint system_constraint(std::shared_ptr<const SetSystem> s) {
  Constraint c;
  c.system = std::move(s);
  return c;
}

namespace {

ComplementaryPairsResult complementary_pairs_impl(
    int m, const std::function<bool(const ItemSet&)>& feasible) {
  if (m > 20) {
    throw_capability(
        "complementary-pair detection is limited to 20 items by the "
        "2-partition scan guard; got " +
        std::to_string(m));
  }
  ComplementaryPairsResult result;
  if (m == 0) return result;
  std::vector<std::vector<char>> together(m, std::vector<char>(m, 1));
  // Item 0 is pinned to side one; sides are unordered.
  unsigned long long limit = 1ull << (m - 1);
  ItemSet side1, side2;
  for (unsigned long long mask = 0; mask < limit; ++mask) {
    side1.clear();
    side2.clear();
    side1.push_back(0);
    for (int item = 1; item < m; ++item) {
      if (mask & (1ull << (item - 1))) {
        side1.push_back(item);
      } else {
        side2.push_back(item);
      }
    }
    if (!feasible(side1) || !feasible(side2)) continue;
    result.has_feasible_partition = true;
    for (size_t a = 0; a < side1.size(); ++a) {
      for (int y : side2) {
        together[side1[a]][y] = 0;
        together[y][side1[a]] = 0;
      }
    }
  }
  if (!result.has_feasible_partition) return result;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (together[x][y]) result.pairs.emplace_back(x, y);
    }
  }
  return result;
}

}  // namespace

ComplementaryPairsResult complementary_pairs(const SetSystem& s) {
  return complementary_pairs_impl(
      s.ground_size(), [&](const ItemSet& t) { return s.is_feasible(t); });
}

ComplementaryPairsResult complementary_pairs(const Constraint& c) {
  return complementary_pairs_impl(
      c.ground_size(), [&](const ItemSet& t) { return c.is_feasible(t); });
}

Instance no_ef1_witness(const Constraint& c, std::pair<int, int> pair) {
  int m = c.ground_size();
  if (pair.first < 0 || pair.first >= m || pair.second < 0 ||
      pair.second >= m || pair.first == pair.second) {
    throw_invalid("witness pair out of range");
  }
  if (pair.first > pair.second) std::swap(pair.first, pair.second);
  ComplementaryPairsResult pairs = complementary_pairs(c);
  if (!pairs.has_feasible_partition) {
    throw_invalid(
        "the constraint admits no feasible 2-partition, so complementarity "
        "is vacuous");
  }
  if (std::find(pairs.pairs.begin(), pairs.pairs.end(), pair) ==
      pairs.pairs.end()) {
    throw_invalid("items " + std::to_string(pair.first) + " and " +
                  std::to_string(pair.second) + " are not complementary");
  }
  std::vector<std::vector<Rational>> valuations(
      2, std::vector<Rational>(m, Rational(0)));
  for (int agent = 0; agent < 2; ++agent) {
    valuations[agent][pair.first] = Rational(1);
    valuations[agent][pair.second] = Rational(1);
  }
  return Instance::with_shared_constraint(std::move(valuations), c,
                                          "no-ef1-witness");
}

}  // namespace fairdiv
