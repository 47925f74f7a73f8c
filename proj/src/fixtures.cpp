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

#include "fixtures.hpp"

#include <algorithm>
#include <utility>

#include "error.hpp"
#include "fairness.hpp"
#include "matroid.hpp"
#include "oracle.hpp"

#ifndef FAIRDIV_FIXTURE_DIR
#define FAIRDIV_FIXTURE_DIR "fixtures"
#endif

namespace fairdiv {
namespace {

std::vector<std::vector<Rational>> rows(
    std::vector<std::vector<long long>> values) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : values) {
    std::vector<Rational> r(row.begin(), row.end());
    out.push_back(std::move(r));
  }
  return out;
}

ConstraintSpec partition_spec(std::vector<ItemSet> sets,
                              std::vector<long long> capacities) {
  ConstraintSpec spec;
  spec.kind = "partition";
  spec.sets = std::move(sets);
  spec.capacities = std::move(capacities);
  return spec;
}

ConstraintSpec uniform_spec(long long capacity) {
  ConstraintSpec spec;
  spec.kind = "uniform";
  spec.capacity = capacity;
  return spec;
}

// Two categories of four and six items; both agents may hold two of the
// first and three of the second. Only the first two items mean anything
// to agent 0; agent 1 also wants the whole second category.
Instance make_table2() {
  Instance instance = Instance::with_shared_constraint(
      rows({{1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 1, 1, 1, 1}}),
      build_constraint(
          partition_spec({{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}}, {2, 3}), 10),
      "table2-mnw");
  return instance;
}

// Four items, two worth 1 to both agents. The two category structures
// disagree, and the capacities leave exactly one complete allocation.
Instance make_ex32() {
  std::vector<Constraint> constraints;
  constraints.push_back(
      build_constraint(partition_spec({{0, 2}, {1, 3}}, {1, 1}), 4));
  constraints.push_back(
      build_constraint(partition_spec({{0}, {1}, {2, 3}}, {1, 1, 0}), 4));
  return Instance(rows({{1, 1, 0, 0}, {1, 1, 0, 0}}), std::move(constraints),
                  /*shared_constraint=*/false, "ex3.2-heterogeneous-categories");
}

// Items are the edges of K_{2,2}; bundles must be matchings. Items 0
// and 3 form a perfect matching, as do 1 and 2.
Instance make_ex33() {
  ConstraintSpec spec;
  spec.kind = "bipartite_matching";
  spec.vertex_count = 2;
  spec.right_count = 2;
  spec.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return Instance::with_shared_constraint(rows({{1, 0, 0, 1}, {1, 0, 0, 1}}),
                                          build_constraint(spec, 4),
                                          "ex3.3-matching");
}

// Items are the vertices of a 4-cycle; bundles must be independent in
// the conflict graph, so each agent gets one diagonal.
Instance make_ex34() {
  ConstraintSpec spec;
  spec.kind = "conflict_graph";
  spec.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return Instance::with_shared_constraint(rows({{1, 0, 1, 0}, {1, 0, 1, 0}}),
                                          build_constraint(spec, 4),
                                          "ex3.4-conflict");
}

// Two cheap items and one expensive one under a shared budget; the only
// complete split puts both cheap items together.
Instance make_ex35() {
  ConstraintSpec spec;
  spec.kind = "budget";
  spec.costs = {Rational(10), Rational(10), Rational(20)};
  spec.budget = Rational(20);
  return Instance::with_shared_constraint(rows({{1, 1, 0}, {1, 1, 0}}),
                                          build_constraint(spec, 3),
                                          "ex3.5-budget");
}

// Four items, one valuable, capacity two each: whoever misses the
// valuable item envies beyond any single removal.
Instance make_efx() {
  return Instance::with_shared_constraint(rows({{0, 0, 0, 1}, {0, 0, 0, 1}}),
                                          build_constraint(uniform_spec(2), 4),
                                          "efx-uniform");
}

// Items are the edges of the four-vertex clique; bundles must be
// forests. The two spanning trees {0,1,2} and {3,4,5} admit no
// feasible-exchange bijection.
Instance make_k4() {
  ConstraintSpec spec;
  spec.kind = "graphic";
  spec.vertex_count = 4;
  spec.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}};
  return Instance::with_shared_constraint(
      rows({{0, 1, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 1}}),
      build_constraint(spec, 6), "k4-graphic");
}

// Two unit-value items; agent 0 may hold one, agent 1 both.
Instance make_table3() {
  std::vector<Constraint> constraints;
  constraints.push_back(build_constraint(uniform_spec(1), 2));
  constraints.push_back(build_constraint(uniform_spec(2), 2));
  return Instance(rows({{1, 1}, {1, 1}}), std::move(constraints),
                  /*shared_constraint=*/false, "table3-weak-fef1");
}

// Four items under a shared capacity of two; the pinned allocation is
// fair but Pareto-dominated.
Instance make_sec61() {
  return Instance::with_shared_constraint(
      rows({{1, 0, 1, 1}, {1, 1, 0, 0}}), build_constraint(uniform_spec(2), 4),
      "sec6.1-non-pe");
}

struct Checker {
  FixtureResult result;
  void check(bool ok, const std::string& what) {
    result.checks.push_back((ok ? "ok " : "FAIL ") + what);
    if (!ok) result.passed = false;
  }
};

bool same_pairs(std::vector<std::pair<int, int>> got,
                std::vector<std::pair<int, int>> want) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

void run_table2(Checker& c) {
  Instance instance = make_table2();
  Allocation pinned = *fixture_allocation("table2-mnw");
  c.check(check_feasible(instance, pinned).ok, "pinned allocation feasible");
  c.check(nash_welfare(instance, pinned) == Rational(6),
          "pinned allocation has Nash product 6");
  std::vector<Allocation> mnw = max_nash_welfare(instance);
  c.check(!mnw.empty() && nash_welfare(instance, mnw.front()) == Rational(6),
          "maximum Nash product over all allocations is 6");
  c.check(!is_fef1(instance, pinned), "pinned allocation fails F-EF1");
  bool all_mnw_fail = true;
  for (const Allocation& a : mnw) {
    if (is_fef1(instance, a)) all_mnw_fail = false;
  }
  c.check(all_mnw_fail, "every maximum-Nash allocation fails F-EF1");
  Allocation alternative = {{0, 2, 4, 5, 6}, {1, 3, 7, 8, 9}};
  c.check(check_feasible(instance, alternative).ok &&
              nash_welfare(instance, alternative) == Rational(4),
          "the (1,4) alternative is feasible with Nash product 4");
  c.check(is_fef1(instance, alternative), "the (1,4) alternative is F-EF1");
  c.check(exists_fair(instance, FairnessNotion::kFef1).exists,
          "an F-EF1 allocation exists");
  c.check(swm_oracle(instance).welfare == Rational(5),
          "maximum social welfare is 5");
}

void run_ex32(Checker& c) {
  Instance instance = make_ex32();
  c.check(count_feasible(instance) == 1, "exactly one complete allocation");
  Allocation unique_allocation;
  enumerate_feasible(instance, default_oracle_bound(),
                     [&](const Allocation& a) {
                       unique_allocation = a;
                       return true;
                     });
  Allocation expected = {{2, 3}, {0, 1}};
  c.check(unique_allocation == expected,
          "agent 1 holds both valuable items, agent 0 the worthless ones");
  c.check(!is_fef1(instance, unique_allocation),
          "the unique allocation fails F-EF1");
  c.check(!exists_fair(instance, FairnessNotion::kFef1).exists,
          "no F-EF1 allocation exists");
  c.check(!exists_fair(instance, FairnessNotion::kWeakFef1).exists,
          "no weakly F-EF1 allocation exists");
}

void run_no_ef1(Checker& c, const Instance& instance,
                const std::vector<std::pair<int, int>>& expected_pairs) {
  ComplementaryPairsResult pairs =
      complementary_pairs(instance.constraint(0));
  c.check(pairs.has_feasible_partition,
          "a complete feasible 2-partition exists");
  c.check(same_pairs(pairs.pairs, expected_pairs),
          "complementary pairs match the construction");
  c.check(!exists_fair(instance, FairnessNotion::kEf1Plain).exists,
          "no complete EF1 allocation exists");
}

void run_efx(Checker& c) {
  Instance instance = make_efx();
  c.check(!exists_fair(instance, FairnessNotion::kEfx).exists,
          "no EFX allocation exists");
  c.check(exists_fair(instance, FairnessNotion::kEf1Plain).exists,
          "an EF1 allocation still exists");
}

void run_k4(Checker& c) {
  Instance instance = make_k4();
  std::shared_ptr<const Matroid> matroid = instance.constraint(0).matroid;
  c.check(!feasible_exchange_bijection(*matroid, {0, 1, 2}, {3, 4, 5})
               .has_value(),
          "the two spanning trees admit no feasible-exchange bijection");
  c.check(!is_base_orderable(*matroid), "the matroid is not base-orderable");
  c.check(!is_base_orderable(*free_extend(matroid, 1)),
          "the free extension is not base-orderable either");
  Allocation pinned = *fixture_allocation("k4-graphic");
  c.check(check_feasible(instance, pinned).ok,
          "the tree-per-agent allocation is feasible");
  c.check(exists_fair(instance, FairnessNotion::kEf1Plain).exists,
          "an EF1 allocation exists regardless");
}

void run_table3(Checker& c) {
  Instance instance = make_table3();
  Allocation pinned = *fixture_allocation("table3-weak-fef1");
  c.check(check_feasible(instance, pinned).ok, "pinned allocation feasible");
  c.check(is_weak_fef1(instance, pinned), "pinned allocation is weakly F-EF1");
  c.check(!is_fef1(instance, pinned), "pinned allocation is not F-EF1");
}

void run_sec61(Checker& c) {
  Instance instance = make_sec61();
  Allocation pinned = *fixture_allocation("sec6.1-non-pe");
  c.check(check_feasible(instance, pinned).ok, "pinned allocation feasible");
  c.check(is_fef1(instance, pinned), "pinned allocation is F-EF1");
  PeResult pe = is_pareto_efficient(instance, pinned, default_oracle_bound());
  c.check(pe.verdict == PeVerdict::kNo && pe.basis == "enumeration",
          "enumeration refutes Pareto efficiency");
}

}  // namespace

std::vector<std::string> fixture_ids() {
  return {"table2-mnw",
          "ex3.2-heterogeneous-categories",
          "ex3.3-matching",
          "ex3.4-conflict",
          "ex3.5-budget",
          "efx-uniform",
          "k4-graphic",
          "table3-weak-fef1",
          "sec6.1-non-pe"};
}

Instance fixture_instance(const std::string& id) {
  if (id == "table2-mnw") return make_table2();
  if (id == "ex3.2-heterogeneous-categories") return make_ex32();
  if (id == "ex3.3-matching") return make_ex33();
  if (id == "ex3.4-conflict") return make_ex34();
  if (id == "ex3.5-budget") return make_ex35();
  if (id == "efx-uniform") return make_efx();
  if (id == "k4-graphic") return make_k4();
  if (id == "table3-weak-fef1") return make_table3();
  if (id == "sec6.1-non-pe") return make_sec61();
  throw_invalid("unknown fixture id '" + id + "'");
}

std::optional<Allocation> fixture_allocation(const std::string& id) {
  if (id == "table2-mnw") {
    return Allocation{{0, 1, 4, 5, 6}, {2, 3, 7, 8, 9}};
  }
  if (id == "ex3.2-heterogeneous-categories") {
    return Allocation{{2, 3}, {0, 1}};
  }
  if (id == "k4-graphic") return Allocation{{0, 1, 2}, {3, 4, 5}};
  if (id == "table3-weak-fef1") return Allocation{{}, {0, 1}};
  if (id == "sec6.1-non-pe") return Allocation{{0, 2}, {1, 3}};
  return std::nullopt;
}

FixtureResult run_fixture(const std::string& id) {
  Checker c;
  c.result.id = id;
  c.result.passed = true;
  try {
    if (id == "table2-mnw") {
      run_table2(c);
    } else if (id == "ex3.2-heterogeneous-categories") {
      run_ex32(c);
    } else if (id == "ex3.3-matching") {
      run_no_ef1(c, make_ex33(), {{0, 3}, {1, 2}});
    } else if (id == "ex3.4-conflict") {
      run_no_ef1(c, make_ex34(), {{0, 2}, {1, 3}});
    } else if (id == "ex3.5-budget") {
      run_no_ef1(c, make_ex35(), {{0, 1}});
    } else if (id == "efx-uniform") {
      run_efx(c);
    } else if (id == "k4-graphic") {
      run_k4(c);
    } else if (id == "table3-weak-fef1") {
      run_table3(c);
    } else if (id == "sec6.1-non-pe") {
      run_sec61(c);
    } else {
      throw_invalid("unknown fixture id '" + id + "'");
    }
  } catch (const Error& e) {
    c.check(false, std::string("fixture run aborted: ") + e.what());
  }
  return std::move(c.result);
}

std::vector<FixtureResult> run_all_fixtures() {
  std::vector<FixtureResult> results;
  for (const std::string& id : fixture_ids()) {
    results.push_back(run_fixture(id));
  }
  return results;
}

std::string fixture_dir() { return FAIRDIV_FIXTURE_DIR; }

}  // namespace fairdiv
