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

#include "bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "algorithms.hpp"
#include "error.hpp"
#include "fairness.hpp"
#include "generate.hpp"

namespace fairdiv {
namespace {

using json = nlohmann::ordered_json;

const std::pair<const char*, const char*> kSettingAlgorithms[] = {
    {"one-category", "crr"},
    {"two-categories", "back_and_forth_crr"},
    {"identical-valuations", "per_category_crr"},
    {"binary-valuations", "iterated_priority_matching"},
    {"two-agent-partition", "rr_squared"},
    {"three-agent-binary-matroid", "iterated_swaps"},
    {"two-agent-matroid", "cut_and_choose_two_agents"},
};

BenchRow bench_setting(const std::string& setting,
                       const std::string& algorithm,
                       const BenchOptions& options) {
  BenchRow row;
  row.setting = setting;
  row.algorithm = algorithm;
  auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < options.count; ++k) {
    Instance instance =
        generate_instance(setting, options.seed * 1000003ULL + k);
    SolveResult solved = solve_with(algorithm, instance, {});
    ++row.instances;
    if (is_fef1(instance, solved.allocation)) ++row.fef1;
    if (is_ef1_plain(instance, solved.allocation)) ++row.ef1;
    for (int i = 0; i < instance.num_agents(); ++i) {
      row.welfare_total += instance.value(i, solved.allocation[i]);
      for (int j = 0; j < instance.num_agents(); ++j) {
        if (i != j) {
          row.max_envy = max(row.max_envy,
                             positive_feasible_envy(instance,
                                                    solved.allocation, i, j));
        }
      }
    }
  }
  auto stop = std::chrono::steady_clock::now();
  row.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

std::string format_ms(double ms) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
  return buffer;
}

}  // namespace

std::string bench_algorithm_for_setting(const std::string& setting) {
  for (const auto& [name, algorithm] : kSettingAlgorithms) {
    if (setting == name) return algorithm;
  }
  return "";
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  if (options.setting == "all") {
    for (const auto& [setting, algorithm] : kSettingAlgorithms) {
      rows.push_back(bench_setting(setting, algorithm, options));
    }
    return rows;
  }
  std::string algorithm = bench_algorithm_for_setting(options.setting);
  if (algorithm.empty()) {
    throw_invalid("setting '" + options.setting +
                  "' has no benchmark algorithm");
  }
  rows.push_back(bench_setting(options.setting, algorithm, options));
  return rows;
}

std::string render_bench_text(const BenchOptions& options,
                              const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "report_schema: 1\n";
  out << "bench_seed: " << options.seed << "\n";
  out << "bench_count: " << options.count << "\n";
  for (const BenchRow& row : rows) {
    out << "setting: " << row.setting << "\n";
    out << "algorithm: " << row.algorithm << "\n";
    out << "instances: " << row.instances << "\n";
    out << "fef1: " << row.fef1 << "\n";
    out << "ef1: " << row.ef1 << "\n";
    out << "max_envy: " << row.max_envy.to_string() << "\n";
    out << "welfare_total: " << row.welfare_total.to_string() << "\n";
    if (options.timings) {
      out << "wall_ms: " << format_ms(row.wall_ms) << "\n";
    }
  }
  return out.str();
}

std::string render_bench_json(const BenchOptions& options,
                              const std::vector<BenchRow>& rows, int indent) {
  json doc;
  doc["report_schema"] = 1;
  doc["bench_seed"] = options.seed;
  doc["bench_count"] = options.count;
  json list = json::array();
  for (const BenchRow& row : rows) {
    json entry;
    entry["setting"] = row.setting;
    entry["algorithm"] = row.algorithm;
    entry["instances"] = row.instances;
    entry["fef1"] = row.fef1;
    entry["ef1"] = row.ef1;
    entry["max_envy"] = row.max_envy.to_string();
    entry["welfare_total"] = row.welfare_total.to_string();
    if (options.timings) entry["wall_ms"] = row.wall_ms;
    list.push_back(std::move(entry));
  }
  doc["rows"] = std::move(list);
  return doc.dump(indent) + "\n";
}

}  // namespace fairdiv
