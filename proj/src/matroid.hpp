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

#ifndef FAIRDIV_SRC_MATROID_HPP_
#define FAIRDIV_SRC_MATROID_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itemset.hpp"

namespace fairdiv {

// Independence oracle over a ground set of dense item ids 0..ground-1.
class Matroid {
 public:
  explicit Matroid(int ground_size);
  virtual ~Matroid() = default;

  int ground_size() const { return ground_size_; }
  virtual bool is_independent(const ItemSet& s) const = 0;
  virtual std::string kind() const = 0;

 protected:
  void check_set(const ItemSet& s) const;

  int ground_size_;
};

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, long long capacity);
  bool is_independent(const ItemSet& s) const override;
  std::string kind() const override { return "uniform"; }
  long long capacity() const { return capacity_; }

 private:
  long long capacity_;
};

// Categories must partition the ground set exactly.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(int ground_size, std::vector<ItemSet> categories,
                   std::vector<long long> capacities);
  bool is_independent(const ItemSet& s) const override;
  std::string kind() const override { return "partition"; }

  const std::vector<ItemSet>& categories() const { return categories_; }
  const std::vector<long long>& capacities() const { return capacities_; }
  int category_of(int item) const { return item_category_[item]; }

 private:
  std::vector<ItemSet> categories_;
  std::vector<long long> capacities_;
  std::vector<int> item_category_;
};

// Every pair of sets in the family must be nested or disjoint. Items
// outside every set are unconstrained.
class LaminarMatroid : public Matroid {
 public:
  LaminarMatroid(int ground_size, std::vector<ItemSet> sets,
                 std::vector<long long> capacities);
  bool is_independent(const ItemSet& s) const override;
  std::string kind() const override { return "laminar"; }

  const std::vector<ItemSet>& sets() const { return sets_; }
  const std::vector<long long>& capacities() const { return capacities_; }

 private:
  std::vector<ItemSet> sets_;
  std::vector<long long> capacities_;
};

// Independent sets are the item sets matchable into the right side of a
// bipartite graph; adjacency[item] lists right vertices.
class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(int ground_size, int right_size,
                     std::vector<ItemSet> adjacency);
  bool is_independent(const ItemSet& s) const override;
  std::string kind() const override { return "transversal"; }

  int right_size() const { return right_size_; }
  const std::vector<ItemSet>& adjacency() const { return adjacency_; }

 private:
  int right_size_;
  std::vector<ItemSet> adjacency_;
};

// Items are edges of an undirected graph; independent sets are forests.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);
  bool is_independent(const ItemSet& s) const override;
  std::string kind() const override { return "graphic"; }

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Free extension: the base matroid plus extra items that are fully
// interchangeable with everything. A set holding any extra item is
// independent iff the original items form an independent set and the
// whole set fits inside the base rank; the rank is preserved.
class FreeExtensionMatroid : public Matroid {
 public:
  FreeExtensionMatroid(std::shared_ptr<const Matroid> base, int count);
  bool is_independent(const ItemSet& s) const override;
  std::string kind() const override { return "free_extension"; }

  const std::shared_ptr<const Matroid>& base() const { return base_; }
  int extension_count() const { return count_; }
  int base_ground_size() const { return base_->ground_size(); }
  bool is_extension_item(int item) const {
    return item >= base_->ground_size();
  }

 private:
  std::shared_ptr<const Matroid> base_;
  int count_;
  int base_rank_;
};

// Arbitrary user oracle. The caller is responsible for the matroid
// axioms; tests spot-check them exhaustively on small ground sets.
class CustomMatroid : public Matroid {
 public:
  CustomMatroid(int ground_size, std::function<bool(const ItemSet&)> oracle);
  bool is_independent(const ItemSet& s) const override;
  std::string kind() const override { return "custom"; }

 private:
  std::function<bool(const ItemSet&)> oracle_;
};

// Greedy rank of a subset of the ground set.
int rank(const Matroid& m, const ItemSet& s);

// Rank of the whole ground set.
int full_rank(const Matroid& m);

// Lowest-id item of t \ s whose addition keeps s independent. Requires
// both sets independent and |s| < |t|; existence is then guaranteed by
// the exchange property, so a failed scan is an internal error.
int augment(const Matroid& m, const ItemSet& s, const ItemSet& t);

bool is_base(const Matroid& m, const ItemSet& s);

// All bases, ascending lexicographically. Guarded to small ground sets.
std::vector<ItemSet> enumerate_bases(const Matroid& m);

// Bijection base_i -> base_j such that swapping any matched pair keeps
// both sides independent. Pairs are listed by ascending base_i item.
// Returns nullopt when no such bijection exists.
using ExchangeBijection = std::vector<std::pair<int, int>>;
std::optional<ExchangeBijection> feasible_exchange_bijection(
    const Matroid& m, const ItemSet& base_i, const ItemSet& base_j);

// count fresh items with ids starting at m->ground_size().
std::shared_ptr<const Matroid> free_extend(std::shared_ptr<const Matroid> m,
                                           int count);

// Every pair of bases admits a feasible-exchange bijection. Decided by
// enumeration; ground sets above 12 items are declined.
bool is_base_orderable(const Matroid& m);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_MATROID_HPP_
