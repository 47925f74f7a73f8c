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

#include <doctest.h>

#include "constraints.hpp"
#include "error.hpp"
#include "fairness.hpp"
#include "oracle.hpp"
#include "set_system.hpp"

using namespace fairdiv;

namespace {

ConstraintSpec budget_spec() {
  ConstraintSpec spec;
  spec.kind = "budget";
  spec.costs = {10, 10, 20};
  spec.budget = 20;
  return spec;
}

ConstraintSpec conflict_square_spec() {
  ConstraintSpec spec;
  spec.kind = "conflict_graph";
  spec.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return spec;
}

ConstraintSpec matching_spec() {
  ConstraintSpec spec;
  spec.kind = "bipartite_matching";
  spec.vertex_count = 2;
  spec.right_count = 2;
  spec.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return spec;
}

}  // namespace

TEST_CASE("matroid kinds versus set-system kinds") {
  for (const char* kind : {"uniform", "partition", "laminar", "transversal",
                           "graphic", "free_extension"}) {
    CHECK(spec_is_matroid_kind(kind));
  }
  for (const char* kind : {"budget", "conflict_graph", "bipartite_matching",
                           "matroid_intersection"}) {
    CHECK_FALSE(spec_is_matroid_kind(kind));
  }
}

TEST_CASE("build_constraint covers every kind") {
  ConstraintSpec uniform;
  uniform.kind = "uniform";
  uniform.capacity = 2;
  Constraint u = build_constraint(uniform, 4);
  CHECK(u.is_matroid());
  CHECK(u.kind() == "uniform");
  CHECK(u.is_feasible({0, 3}));
  CHECK_FALSE(u.is_feasible({0, 1, 2}));
  CHECK(u.spec == uniform);

  ConstraintSpec partition;
  partition.kind = "partition";
  partition.sets = {{0, 1}, {2, 3}};
  partition.capacities = {1, 1};
  Constraint p = build_constraint(partition, 4);
  CHECK(p.is_feasible({1, 2}));
  CHECK_FALSE(p.is_feasible({0, 1}));

  ConstraintSpec laminar;
  laminar.kind = "laminar";
  laminar.sets = {{0, 1}, {0, 1, 2}};
  laminar.capacities = {1, 2};
  Constraint l = build_constraint(laminar, 3);
  CHECK(l.is_feasible({0, 2}));
  CHECK_FALSE(l.is_feasible({0, 1}));

  ConstraintSpec transversal;
  transversal.kind = "transversal";
  transversal.vertex_count = 2;
  transversal.sets = {{0}, {0}, {1}};
  Constraint t = build_constraint(transversal, 3);
  CHECK(t.is_feasible({1, 2}));
  CHECK_FALSE(t.is_feasible({0, 1}));

  ConstraintSpec graphic;
  graphic.kind = "graphic";
  graphic.vertex_count = 3;
  graphic.edges = {{0, 1}, {1, 2}, {0, 2}};
  Constraint g = build_constraint(graphic, 3);
  CHECK(g.is_feasible({0, 1}));
  CHECK_FALSE(g.is_feasible({0, 1, 2}));

  ConstraintSpec extension;
  extension.kind = "free_extension";
  extension.parts = {uniform};
  extension.extension_count = 2;
  Constraint e = build_constraint(extension, 6);
  CHECK(e.is_matroid());
  CHECK(e.is_feasible({4, 5}));
  CHECK_FALSE(e.is_feasible({0, 4, 5}));

  Constraint b = build_constraint(budget_spec(), 3);
  CHECK_FALSE(b.is_matroid());
  CHECK(b.is_feasible({0, 1}));
  CHECK(b.is_feasible({2}));
  CHECK_FALSE(b.is_feasible({0, 2}));

  Constraint c = build_constraint(conflict_square_spec(), 4);
  CHECK(c.is_feasible({0, 2}));
  CHECK_FALSE(c.is_feasible({0, 1}));

  Constraint m = build_constraint(matching_spec(), 4);
  CHECK(m.is_feasible({0, 3}));
  CHECK(m.is_feasible({1, 2}));
  CHECK_FALSE(m.is_feasible({0, 1}));

  ConstraintSpec intersection;
  intersection.kind = "matroid_intersection";
  ConstraintSpec u3;
  u3.kind = "uniform";
  u3.capacity = 3;
  intersection.parts = {partition, u3};
  Constraint x = build_constraint(intersection, 4);
  CHECK_FALSE(x.is_matroid());
  CHECK(x.is_feasible({1, 2}));
  CHECK_FALSE(x.is_feasible({0, 1}));

  ConstraintSpec unknown;
  unknown.kind = "mystery";
  CHECK_THROWS_AS(build_constraint(unknown, 2), Error);
}

TEST_CASE("set systems stay downward closed") {
  BudgetSystem budget(3, {Rational(10), Rational(10), Rational(20)},
                      Rational(20));
  CHECK(budget.downward_closed());
  CHECK(budget.is_feasible({}));
  CHECK_THROWS_AS(BudgetSystem(2, {Rational(-1), Rational(0)}, Rational(5)),
                  Error);

  ConflictGraphSystem conflict(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(conflict.is_feasible({1, 3}));
  CHECK_FALSE(conflict.is_feasible({2, 3}));

  BipartiteMatchingSystem matching(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(matching.is_feasible({1, 2}));
  CHECK_FALSE(matching.is_feasible({0, 2}));  // both edges use right 0
}

TEST_CASE("complementary pairs of the three refusal systems") {
  // Matching on K22: the two perfect matchings are the only feasible
  // 2-partition, so diagonal partners are locked together.
  auto matching = complementary_pairs(build_constraint(matching_spec(), 4));
  CHECK(matching.has_feasible_partition);
  CHECK(matching.pairs ==
        std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});

  // Four-cycle conflict graph: the only split is even versus odd.
  auto conflict =
      complementary_pairs(build_constraint(conflict_square_spec(), 4));
  CHECK(conflict.has_feasible_partition);
  CHECK(conflict.pairs == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  // Costs (10, 10, 20) under budget 20: {0,1} versus {2}.
  auto budget = complementary_pairs(build_constraint(budget_spec(), 3));
  CHECK(budget.has_feasible_partition);
  CHECK(budget.pairs == std::vector<std::pair<int, int>>{{0, 1}});

  // A system with no feasible 2-partition at all reports that fact
  // instead of an empty pair list.
  ConstraintSpec tight;
  tight.kind = "budget";
  tight.costs = {10, 10, 10};
  tight.budget = 10;
  auto none = complementary_pairs(build_constraint(tight, 3));
  CHECK_FALSE(none.has_feasible_partition);
  CHECK(none.pairs.empty());

  // Matroids never produce complementary pairs: both sides can always
  // trade one item of the pair.
  ConstraintSpec uniform;
  uniform.kind = "uniform";
  uniform.capacity = 2;
  auto free_pairs = complementary_pairs(build_constraint(uniform, 4));
  CHECK(free_pairs.has_feasible_partition);
  CHECK(free_pairs.pairs.empty());
}

TEST_CASE("complementary pairs guard large ground sets") {
  ConstraintSpec big;
  big.kind = "uniform";
  big.capacity = 11;
  try {
    complementary_pairs(build_constraint(big, 21));
    FAIL("expected a capability error");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::kCapability);
  }
}

TEST_CASE("a complementary pair defeats EF1 end to end") {
  Constraint c = build_constraint(budget_spec(), 3);
  Instance witness = no_ef1_witness(c, {0, 1});
  CHECK(witness.num_agents() == 2);
  CHECK(witness.num_items() == 3);
  CHECK(witness.value(0, 0) == Rational(1));
  CHECK(witness.value(1, 1) == Rational(1));
  CHECK(witness.value(0, 2) == Rational(0));
  CHECK_FALSE(exists_fair(witness, FairnessNotion::kEf1Plain).exists);
  // A pair that is not complementary is rejected.
  CHECK_THROWS_AS(no_ef1_witness(c, {0, 2}), Error);
}
