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

#ifndef FAIRDIV_SRC_BENCH_HPP_
#define FAIRDIV_SRC_BENCH_HPP_

#include <string>
#include <vector>

#include "rational.hpp"

namespace fairdiv {

struct BenchOptions {
  std::string setting = "all";  // one generator setting, or "all"
  unsigned long long seed = 0;
  int count = 100;  // instances per setting
  bool timings = false;
};

struct BenchRow {
  std::string setting;
  std::string algorithm;
  int instances = 0;
  int fef1 = 0;
  int ef1 = 0;
  Rational max_envy;        // worst positive feasible envy seen
  Rational welfare_total;   // summed utilitarian welfare
  double wall_ms = 0;       // reported only when timings requested
};

// The algorithm a generator setting exercises; instance families made
// for the oracle ("identical-small", "swm-small") have none and return
// an empty string.
std::string bench_algorithm_for_setting(const std::string& setting);

// Solves `count` seeded instances per setting with the matching
// algorithm and tallies fairness and welfare. Deterministic for a
// fixed (setting, seed, count).
std::vector<BenchRow> run_bench(const BenchOptions& options);

std::string render_bench_text(const BenchOptions& options,
                              const std::vector<BenchRow>& rows);
std::string render_bench_json(const BenchOptions& options,
                              const std::vector<BenchRow>& rows,
                              int indent = 2);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_BENCH_HPP_
