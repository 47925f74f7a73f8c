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

#ifndef FAIRDIV_SRC_GENERATE_HPP_
#define FAIRDIV_SRC_GENERATE_HPP_

#include <random>
#include <string>
#include <vector>

#include "instance.hpp"

namespace fairdiv {

// Deterministic across platforms: raw mt19937_64 draws reduced by
// modulo, never the distribution templates (their output is
// implementation-defined).
class Rng {
 public:
  explicit Rng(unsigned long long seed) : engine_(seed) {}
  unsigned long long next() { return engine_(); }
  long long below(long long n) {
    return static_cast<long long>(next() % static_cast<unsigned long long>(n));
  }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

// Named instance families, one per algorithm setting plus oracle-sized
// families for the brute-force cross-checks. The same (setting, seed)
// pair always yields the same instance.
std::vector<std::string> generator_settings();
Instance generate_instance(const std::string& setting,
                           unsigned long long seed);

struct BipartiteCase {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adjacency;
};
BipartiteCase generate_bipartite(unsigned long long seed);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_GENERATE_HPP_
