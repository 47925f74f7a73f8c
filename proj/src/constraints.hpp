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

#ifndef FAIRDIV_SRC_CONSTRAINTS_HPP_
#define FAIRDIV_SRC_CONSTRAINTS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid.hpp"
#include "rational.hpp"
#include "set_system.hpp"

namespace fairdiv {

// Serializable description of a constraint; the runtime oracle is built
// from it. Fields are interpreted per kind and ignored otherwise.
struct ConstraintSpec {
  std::string kind;  // uniform | partition | laminar | transversal | graphic |
                     // free_extension | budget | conflict_graph |
                     // matroid_intersection | bipartite_matching
  long long capacity = 0;                   // uniform
  std::vector<ItemSet> sets;                // partition/laminar; transversal
                                            // adjacency rows
  std::vector<long long> capacities;        // partition/laminar
  int vertex_count = 0;                     // graphic vertices, transversal
                                            // right side, matching left side
  int right_count = 0;                      // matching right side
  std::vector<std::pair<int, int>> edges;   // graphic/conflict/matching
  std::vector<Rational> costs;              // budget
  Rational budget;                          // budget
  std::vector<ConstraintSpec> parts;        // intersection members,
                                            // free_extension base (single)
  int extension_count = 0;                  // free_extension

  bool operator==(const ConstraintSpec&) const = default;
};

// Exactly one of the two oracles is set. Constraints built from a spec
// keep it, which makes structural identity checks possible.
struct Constraint {
  std::shared_ptr<const Matroid> matroid;
  std::shared_ptr<const SetSystem> system;
  std::optional<ConstraintSpec> spec;

  bool is_matroid() const { return matroid != nullptr; }
  int ground_size() const {
    return matroid ? matroid->ground_size() : system->ground_size();
  }
  bool is_feasible(const ItemSet& s) const {
    return matroid ? matroid->is_independent(s) : system->is_feasible(s);
  }
  std::string kind() const {
    return matroid ? matroid->kind() : system->kind();
  }
};

bool spec_is_matroid_kind(const std::string& kind);

std::shared_ptr<const Matroid> build_matroid(const ConstraintSpec& spec,
                                             int ground_size);
std::shared_ptr<const SetSystem> build_set_system(const ConstraintSpec& spec,
                                                  int ground_size);
Constraint build_constraint(const ConstraintSpec& spec, int ground_size);

Constraint matroid_constraint(std::shared_ptr<const Matroid> m);
Constraint system_constraint(std::shared_ptr<const SetSystem> s);

// Items x and y are complementary when every partition of the ground set
// into two feasible sets keeps them on the same side. Decided by
// exhaustive scan over 2-partitions; ground sets above 20 items are
// declined. When no feasible 2-partition exists at all the notion is
// vacuous, which is reported distinctly instead of as an empty list.
struct ComplementaryPairsResult {
  bool has_feasible_partition = false;
  std::vector<std::pair<int, int>> pairs;
};
ComplementaryPairsResult complementary_pairs(const SetSystem& s);
ComplementaryPairsResult complementary_pairs(const Constraint& c);

class Instance;

// Two agents sharing constraint c, both valuing the two items of the
// complementary pair at 1 and everything else at 0. No complete feasible
// allocation of such an instance is EF1; the pair must be complementary
// for c, otherwise the input is rejected.
Instance no_ef1_witness(const Constraint& c, std::pair<int, int> pair);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_CONSTRAINTS_HPP_
