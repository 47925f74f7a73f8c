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

#include <string>
#include <vector>

#include "error.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "instance.hpp"
#include "instance_io.hpp"

using namespace fairdiv;
using fairdiv_test::make_ex32;
using fairdiv_test::make_table2;
using fairdiv_test::partition_instance;
using fairdiv_test::rows;
using fairdiv_test::uniform_instance;

TEST_CASE("instance construction rejects malformed inputs") {
  Constraint u2 = build_constraint(fairdiv_test::uniform_spec(2), 2);

  CHECK_THROWS_AS(Instance({}, {}, true), Error);
  // Ragged valuation rows.
  CHECK_THROWS_AS(
      Instance(rows({{1, 2}, {1}}), {u2, u2}, true), Error);
  // Negative values.
  CHECK_THROWS_AS(
      Instance({{Rational(-1), Rational(0)}}, {u2}, true), Error);
  // One constraint per agent.
  CHECK_THROWS_AS(Instance(rows({{1, 2}, {3, 4}}), {u2}, false), Error);
  // Ground size must match the item count.
  Constraint wide = build_constraint(fairdiv_test::uniform_spec(2), 3);
  CHECK_THROWS_AS(Instance(rows({{1, 2}}), {wide}, true), Error);
}

TEST_CASE("construction requires a complete feasible allocation") {
  // Categories summing below their size are caught by the cheap path.
  CHECK_THROWS_AS(
      partition_instance({{1, 1, 1}, {1, 1, 1}}, {{0, 1, 2}}, {{1}, {1}}),
      Error);
  // Matroid constraints go through the intersection decision.
  Constraint u1 = build_constraint(fairdiv_test::uniform_spec(1), 3);
  CHECK_THROWS_AS(Instance(rows({{1, 1, 1}, {1, 1, 1}}), {u1, u1}, true),
                  Error);
  Constraint u2 = build_constraint(fairdiv_test::uniform_spec(2), 3);
  Instance ok(rows({{1, 1, 1}, {1, 1, 1}}), {u2, u2}, true);
  CHECK(ok.completeness_verified());

  // Set systems get a bounded search.
  ConstraintSpec tight;
  tight.kind = "budget";
  tight.costs = {2, 2};
  tight.budget = 1;
  Constraint b = build_constraint(tight, 2);
  CHECK_THROWS_AS(Instance(rows({{1, 1}, {1, 1}}), {b, b}, true), Error);
}

TEST_CASE("instance flags and accessors") {
  Instance t2 = make_table2();
  CHECK(t2.num_agents() == 2);
  CHECK(t2.num_items() == 10);
  CHECK(t2.id() == "table2-mnw");
  CHECK(t2.constraints_shared());
  CHECK(t2.identical_constraints());
  CHECK_FALSE(t2.identical_valuations());
  CHECK(t2.binary_valuations());
  CHECK(t2.all_matroid_constraints());
  REQUIRE(t2.shared_categories().has_value());
  CHECK(t2.shared_categories()->categories.size() == 2);
  CHECK(t2.shared_categories()->capacities[0] ==
        std::vector<long long>{2, 3});
  CHECK(t2.shared_categories()->item_category[7] == 1);
  CHECK(t2.value(1, ItemSet{0, 1, 4}) == Rational(3));

  // A shared uniform constraint presents as one big category.
  Instance u = uniform_instance({{1, 2}, {2, 1}}, 1);
  REQUIRE(u.shared_categories().has_value());
  CHECK(u.shared_categories()->categories ==
        std::vector<ItemSet>{{0, 1}});

  // Same category sets with different capacities still share the view.
  Instance caps = partition_instance({{1, 1, 1}, {1, 1, 1}},
                                     {{0, 1}, {2}}, {{2, 0}, {1, 1}});
  CHECK_FALSE(caps.constraints_shared());
  REQUIRE(caps.shared_categories().has_value());
  CHECK(caps.shared_categories()->capacities[1] ==
        std::vector<long long>{1, 1});

  // Clashing personal category systems have no shared view.
  Instance ex32 = make_ex32();
  CHECK_FALSE(ex32.shared_categories().has_value());
  CHECK(ex32.identical_valuations());

  Instance halves(
      {{Rational(1, 2), Rational(1)}, {Rational(1, 2), Rational(1)}},
      {build_constraint(fairdiv_test::uniform_spec(1), 2),
       build_constraint(fairdiv_test::uniform_spec(1), 2)},
      true);
  CHECK(halves.identical_valuations());
  CHECK_FALSE(halves.binary_valuations());
}

TEST_CASE("set_value keeps the validation") {
  Instance u = uniform_instance({{1, 2}, {2, 1}}, 1);
  u.set_value(0, 0, Rational(5));
  CHECK(u.value(0, 0) == Rational(5));
  CHECK_THROWS_AS(u.set_value(0, 0, Rational(-1)), Error);
  CHECK_THROWS_AS(u.set_value(2, 0, Rational(1)), Error);
  CHECK_THROWS_AS(u.set_value(0, 9, Rational(1)), Error);
}

TEST_CASE("check_feasible reports precise violations") {
  Instance t2 = make_table2();
  FeasibilityReport ok = check_feasible(
      t2, Allocation{{0, 1, 4, 5, 6}, {2, 3, 7, 8, 9}});
  CHECK(ok.ok);
  CHECK(ok.violations.empty());

  // Over the first category's capacity for agent 0.
  FeasibilityReport over = check_feasible(
      t2, Allocation{{0, 1, 2, 4, 5}, {3, 6, 7, 8, 9}});
  CHECK_FALSE(over.ok);
  CHECK_FALSE(over.violations.empty());

  // Item 9 missing entirely.
  FeasibilityReport missing = check_feasible(
      t2, Allocation{{0, 1, 4, 5, 6}, {2, 3, 7, 8}});
  CHECK_FALSE(missing.ok);

  // Item 0 assigned twice.
  FeasibilityReport doubled = check_feasible(
      t2, Allocation{{0, 1, 4, 5, 6}, {0, 2, 3, 7, 8}});
  CHECK_FALSE(doubled.ok);

  CHECK_THROWS_AS(check_feasible(t2, Allocation{{0}}), Error);
}

TEST_CASE("instance json accepts both shorthands") {
  // Nested valuation rows plus the categories/capacities shorthand
  // with a single broadcast row.
  const std::string nested = R"({
    "agents": 2,
    "items": 4,
    "valuations": [[1, 2, 3, 4], [4, 3, 2, 1]],
    "categories": [[0, 1], [2, 3]],
    "capacities": [1, 1]
  })";
  Instance a = parse_instance_json(nested);
  CHECK(a.constraints_shared());
  CHECK(a.value(1, 0) == Rational(4));
  REQUIRE(a.shared_categories().has_value());
  CHECK(a.shared_categories()->capacities ==
        std::vector<std::vector<long long>>{{1, 1}, {1, 1}});

  // Same instance, flat valuations and explicit per-agent capacities.
  const std::string flat = R"({
    "agents": 2,
    "items": 4,
    "valuations": [1, 2, 3, 4, 4, 3, 2, 1],
    "categories": [[0, 1], [2, 3]],
    "capacities": [[1, 1], [1, 1]]
  })";
  CHECK(instance_to_json(parse_instance_json(flat)) == instance_to_json(a));

  // Rational literals ride in as "p/q" strings.
  const std::string rational = R"({
    "agents": 1,
    "items": 2,
    "valuations": ["1/2", 3],
    "constraints": {"shared": {"kind": "uniform", "capacity": 2}}
  })";
  Instance r = parse_instance_json(rational);
  CHECK(r.value(0, 0) == Rational(1, 2));
  CHECK(r.value(0, 1) == Rational(3));
}

TEST_CASE("instance json rejects malformed documents") {
  for (const char* bad : {
           "",
           "{",
           "[]",
           R"({"agents": 2, "items": 2})",
           R"({"agents": 0, "items": 1, "valuations": [],
               "constraints": {"shared": {"kind": "uniform", "capacity": 1}}})",
           R"({"agents": 1, "items": 2, "valuations": [1],
               "constraints": {"shared": {"kind": "uniform", "capacity": 2}}})",
           R"({"agents": 1, "items": 2, "valuations": [1, 2],
               "categories": [[0, 1]], "capacities": [2],
               "constraints": {"shared": {"kind": "uniform", "capacity": 2}}})",
           R"({"agents": 1, "items": 2, "valuations": [1, 2],
               "constraints": {"shared": {"kind": "mystery"}}})",
           R"({"agents": 1, "items": 2, "valuations": [1, 2],
               "constraints": {"per_agent": [
                 {"kind": "uniform", "capacity": 2},
                 {"kind": "uniform", "capacity": 2}]}})",
           R"({"agents": 1, "items": 2, "valuations": [1, "2/0"],
               "constraints": {"shared": {"kind": "uniform", "capacity": 2}}})",
       }) {
    CHECK_THROWS_AS(parse_instance_json(bad), Error);
  }
}

TEST_CASE("canonical serialization round-trips every fixture") {
  for (const std::string& id : fixture_ids()) {
    Instance original = fixture_instance(id);
    std::string emitted = instance_to_json(original);
    Instance reparsed = parse_instance_json(emitted);
    CHECK(instance_to_json(reparsed) == emitted);
    CHECK(reparsed.num_agents() == original.num_agents());
    CHECK(reparsed.num_items() == original.num_items());
    CHECK(reparsed.id() == original.id());
    CHECK(reparsed.valuations() == original.valuations());
    for (int i = 0; i < original.num_agents(); ++i) {
      CHECK(reparsed.constraint(i).spec == original.constraint(i).spec);
    }
  }
}

TEST_CASE("corpus files parse to the registry instances") {
  for (const std::string& id : fixture_ids()) {
    Instance from_file = load_instance(fixture_dir() + "/" + id + ".json");
    CHECK(instance_to_json(from_file) ==
          instance_to_json(fixture_instance(id)));
    if (auto pinned = fixture_allocation(id)) {
      Allocation loaded = load_allocation(
          fixture_dir() + "/" + id + ".alloc.json", from_file);
      CHECK(loaded == *pinned);
    }
  }
}

TEST_CASE("allocation json round-trip and validation") {
  Instance u = uniform_instance({{1, 2, 3}, {3, 2, 1}}, 2);
  Allocation alloc = {{2, 0}, {1}};
  std::string text = allocation_to_json(alloc);
  Allocation back = parse_allocation_json(text, u);
  // Bundles are sorted on the way in.
  CHECK(back == Allocation{{0, 2}, {1}});

  CHECK_THROWS_AS(parse_allocation_json("{}", u), Error);
  CHECK_THROWS_AS(parse_allocation_json(R"({"bundles": [[0]]})", u), Error);
  CHECK_THROWS_AS(
      parse_allocation_json(R"({"bundles": [[0, 3], [1]]})", u), Error);
  CHECK_THROWS_AS(
      parse_allocation_json(R"({"bundles": [[0, 0], [1]]})", u), Error);
  // Feasibility is not checked here: three items under capacity two
  // parse fine.
  CHECK(parse_allocation_json(R"({"bundles": [[0, 1, 2], []]})", u).size() ==
        2);
}

TEST_CASE("file io failures carry the io code") {
  try {
    read_text_file("/nonexistent/fairdiv-io-test");
    FAIL("expected an io error");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::kIo);
  }
  CHECK_THROWS_AS(load_instance("/nonexistent/fairdiv-io-test"), Error);
}
