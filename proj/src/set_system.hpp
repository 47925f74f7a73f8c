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

#ifndef FAIRDIV_SRC_SET_SYSTEM_HPP_
#define FAIRDIV_SRC_SET_SYSTEM_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "itemset.hpp"
#include "matroid.hpp"
#include "rational.hpp"

namespace fairdiv {

// General feasibility oracle for constraints that are not matroids.
// Downward-closedness is not assumed.
class SetSystem {
 public:
  explicit SetSystem(int ground_size);
  virtual ~SetSystem() = default;

  int ground_size() const { return ground_size_; }
  virtual bool is_feasible(const ItemSet& s) const = 0;
  virtual std::string kind() const = 0;
  // True for every shipped kind; pruning optimisations rely on it.
  virtual bool downward_closed() const { return true; }

 protected:
  void check_set(const ItemSet& s) const;

  int ground_size_;
};

// Feasible sets cost at most the budget. Costs must be non-negative,
// which keeps the system downward-closed.
class BudgetSystem : public SetSystem {
 public:
  BudgetSystem(int ground_size, std::vector<Rational> costs, Rational budget);
  bool is_feasible(const ItemSet& s) const override;
  std::string kind() const override { return "budget"; }

  const std::vector<Rational>& costs() const { return costs_; }
  const Rational& budget() const { return budget_; }

 private:
  std::vector<Rational> costs_;
  Rational budget_;
};

// Feasible sets are independent sets of an undirected conflict graph.
class ConflictGraphSystem : public SetSystem {
 public:
  ConflictGraphSystem(int ground_size,
                      std::vector<std::pair<int, int>> conflicts);
  bool is_feasible(const ItemSet& s) const override;
  std::string kind() const override { return "conflict_graph"; }

  const std::vector<std::pair<int, int>>& conflicts() const {
    return conflicts_;
  }

 private:
  std::vector<std::pair<int, int>> conflicts_;
};

// Feasible sets are common independent sets of two or more matroids.
class MatroidIntersectionSystem : public SetSystem {
 public:
  explicit MatroidIntersectionSystem(
      std::vector<std::shared_ptr<const Matroid>> matroids);
  bool is_feasible(const ItemSet& s) const override;
  std::string kind() const override { return "matroid_intersection"; }

  const std::vector<std::shared_ptr<const Matroid>>& matroids() const {
    return matroids_;
  }

 private:
  std::vector<std::shared_ptr<const Matroid>> matroids_;
};

// Items are edges of a bipartite graph; feasible sets are matchings.
class BipartiteMatchingSystem : public SetSystem {
 public:
  BipartiteMatchingSystem(int left_size, int right_size,
                          std::vector<std::pair<int, int>> endpoints);
  bool is_feasible(const ItemSet& s) const override;
  std::string kind() const override { return "bipartite_matching"; }

  int left_size() const { return left_size_; }
  int right_size() const { return right_size_; }
  const std::vector<std::pair<int, int>>& endpoints() const {
    return endpoints_;
  }

 private:
  int left_size_;
  int right_size_;
  std::vector<std::pair<int, int>> endpoints_;
};

class CustomSystem : public SetSystem {
 public:
  CustomSystem(int ground_size, std::function<bool(const ItemSet&)> oracle,
               bool downward_closed);
  bool is_feasible(const ItemSet& s) const override;
  std::string kind() const override { return "custom"; }
  bool downward_closed() const override { return downward_closed_; }

 private:
  std::function<bool(const ItemSet&)> oracle_;
  bool downward_closed_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_SET_SYSTEM_HPP_
