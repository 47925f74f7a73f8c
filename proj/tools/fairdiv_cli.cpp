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

// Command-line front end. Deliberately written against the public C
// API only; everything it knows about instances arrives as JSON text
// or leaves as rendered reports.

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairdiv/fairdiv.h"

namespace {

constexpr int kCheckFailed = 1;

struct StringDeleter {
  void operator()(char* text) const { fairdiv_string_free(text); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(fairdiv_instance* instance) const {
    fairdiv_instance_free(instance);
  }
};
using InstancePtr = std::unique_ptr<fairdiv_instance, InstanceDeleter>;

int api_failure() {
  std::fprintf(stderr, "error: %s\n", fairdiv_last_error());
  return fairdiv_last_error_code();
}

int check_failure(const std::string& what) {
  std::fprintf(stderr, "check failed: %s\n", what.c_str());
  return kCheckFailed;
}

InstancePtr load_instance(const std::string& path, int* status) {
  fairdiv_instance* raw = nullptr;
  *status = fairdiv_instance_load(path.c_str(), &raw);
  return InstancePtr(raw);
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

// Reports go to stdout; -o adds a file copy.
int emit_report(const char* report, const std::string& out_path) {
  std::fputs(report, stdout);
  if (out_path.empty()) return 0;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return FAIRDIV_ERR_IO;
  }
  out << report;
  return 0;
}

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--format", flags->format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", flags->out_path,
                  "Also write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fair division of indivisible items under matroid feasibility "
      "constraints"};
  app.set_version_flag("--version", fairdiv_version());
  app.require_subcommand(1);

  // solve
  auto* solve_cmd =
      app.add_subcommand("solve", "Allocate an instance and report the result");
  std::string solve_path;
  solve_cmd->add_option("instance", solve_path, "Instance JSON file")
      ->required();
  std::string algorithm = "auto";
  solve_cmd
      ->add_option("--algorithm", algorithm,
                   "Algorithm name; auto picks by instance shape")
      ->capture_default_str();
  std::vector<int> order;
  solve_cmd->add_option("--order", order,
                        "Agent pick order for the round-robin algorithms");
  int first_agent = 0;
  solve_cmd->add_option("--first-agent", first_agent,
                        "Chooser seat for rr_squared");
  bool solve_verify = false;
  solve_cmd->add_flag("--verify", solve_verify,
                      "Append a fairness report and require the promised "
                      "guarantee to hold");
  bool check_invariants = false;
  solve_cmd->add_flag("--check-invariants", check_invariants,
                      "Run the mid-run correctness assertions");
  long long solve_bound = 0;
  solve_cmd->add_option("--bound", solve_bound,
                        "Enumeration guard for verification");
  bool solve_timings = false;
  solve_cmd->add_flag("--timings", solve_timings,
                      "Include wall-clock time in the report");
  CommonFlags solve_flags;
  add_common(solve_cmd, &solve_flags);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Evaluate a proposed allocation against an instance");
  std::string verify_path;
  verify_cmd->add_option("instance", verify_path, "Instance JSON file")
      ->required();
  std::string alloc_path;
  verify_cmd
      ->add_option("allocation", alloc_path,
                   "Allocation JSON file ({\"bundles\": [[...], ...]})")
      ->required();
  std::string expect;
  verify_cmd
      ->add_option("--expect", expect,
                   "Fairness notion that must hold for exit code 0")
      ->check(CLI::IsMember({"fef", "fef1", "weak-fef1", "efx", "ef1"}));
  long long verify_bound = 0;
  verify_cmd->add_option("--bound", verify_bound, "Enumeration guard");
  bool verify_timings = false;
  verify_cmd->add_flag("--timings", verify_timings,
                       "Include wall-clock time in the report");
  CommonFlags verify_flags;
  add_common(verify_cmd, &verify_flags);

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Brute-force questions over all feasible allocations");
  std::string oracle_path;
  oracle_cmd->add_option("instance", oracle_path, "Instance JSON file")
      ->required();
  std::string question;
  oracle_cmd
      ->add_option("--question", question,
                   "count, exists-fef, exists-fef1, exists-weak-fef1, "
                   "exists-efx, exists-ef1, mnw or swm")
      ->required();
  long long oracle_bound = 0;
  oracle_cmd->add_option("--bound", oracle_bound, "Enumeration guard");
  CommonFlags oracle_flags;
  add_common(oracle_cmd, &oracle_flags);

  // demo
  auto* demo_cmd = app.add_subcommand(
      "demo", "Sweep the bundled counterexample fixtures end to end");
  std::string fixtures_dir;
  demo_cmd->add_option("--fixtures", fixtures_dir,
                       "Fixture corpus directory to cross-check");
  CommonFlags demo_flags;
  add_common(demo_cmd, &demo_flags);

  // bench
  auto* bench_cmd =
      app.add_subcommand("bench", "Solve seeded random instances and tabulate");
  std::string setting = "all";
  bench_cmd
      ->add_option("--setting", setting,
                   "Generator setting name, or all")
      ->capture_default_str();
  unsigned long long seed = 0;
  bench_cmd->add_option("--seed", seed, "Generator seed")
      ->capture_default_str();
  int count = 100;
  bench_cmd->add_option("--count", count, "Instances per setting")
      ->capture_default_str();
  bool bench_timings = false;
  bench_cmd->add_flag("--timings", bench_timings,
                      "Include wall-clock time per row");
  CommonFlags bench_flags;
  add_common(bench_cmd, &bench_flags);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(solve_cmd)) {
    int status = 0;
    InstancePtr instance = load_instance(solve_path, &status);
    if (status != FAIRDIV_OK) return api_failure();

    fairdiv_solve_params params;
    fairdiv_solve_params_init(&params);
    params.algorithm = algorithm.c_str();
    if (!order.empty()) {
      params.order = order.data();
      params.order_len = static_cast<int>(order.size());
    }
    params.first_agent = first_agent;
    params.check_invariants = check_invariants ? 1 : 0;
    params.verify = solve_verify ? 1 : 0;
    params.bound = solve_bound;
    params.json_format = solve_flags.format == "json" ? 1 : 0;
    params.timings = solve_timings ? 1 : 0;

    char* report = nullptr;
    int verified = -1;
    status = fairdiv_solve(instance.get(), &params, &report, &verified);
    if (status != FAIRDIV_OK) return api_failure();
    ApiString owned(report);
    status = emit_report(report, solve_flags.out_path);
    if (status != 0) return status;
    if (solve_verify && verified != 1) {
      return check_failure("the allocation does not satisfy the guarantee");
    }
    return 0;
  }

  if (app.got_subcommand(verify_cmd)) {
    int status = 0;
    InstancePtr instance = load_instance(verify_path, &status);
    if (status != FAIRDIV_OK) return api_failure();
    std::string allocation_json;
    if (!read_file(alloc_path, &allocation_json)) {
      std::fprintf(stderr, "error: cannot read %s\n", alloc_path.c_str());
      return FAIRDIV_ERR_IO;
    }

    char* report = nullptr;
    int feasible = 0;
    status = fairdiv_verify(instance.get(), allocation_json.c_str(),
                            verify_bound,
                            verify_flags.format == "json" ? 1 : 0,
                            verify_timings ? 1 : 0, &report, &feasible);
    if (status != FAIRDIV_OK) return api_failure();
    ApiString owned(report);
    status = emit_report(report, verify_flags.out_path);
    if (status != 0) return status;
    if (feasible != 1) return check_failure("the allocation is not feasible");
    if (!expect.empty()) {
      int holds = 0;
      status = fairdiv_check_notion(instance.get(), allocation_json.c_str(),
                                    expect.c_str(), &holds);
      if (status != FAIRDIV_OK) return api_failure();
      if (holds != 1) {
        return check_failure("the allocation is not " + expect);
      }
    }
    return 0;
  }

  if (app.got_subcommand(oracle_cmd)) {
    int status = 0;
    InstancePtr instance = load_instance(oracle_path, &status);
    if (status != FAIRDIV_OK) return api_failure();
    char* report = nullptr;
    status = fairdiv_oracle(instance.get(), question.c_str(), oracle_bound,
                            oracle_flags.format == "json" ? 1 : 0, &report);
    if (status != FAIRDIV_OK) return api_failure();
    ApiString owned(report);
    return emit_report(report, oracle_flags.out_path);
  }

  if (app.got_subcommand(demo_cmd)) {
    char* report = nullptr;
    int passed = 0;
    int total = 0;
    int status = fairdiv_demo(
        fixtures_dir.empty() ? nullptr : fixtures_dir.c_str(),
        demo_flags.format == "json" ? 1 : 0, &report, &passed, &total);
    if (status != FAIRDIV_OK) return api_failure();
    ApiString owned(report);
    status = emit_report(report, demo_flags.out_path);
    if (status != 0) return status;
    if (passed != total) {
      return check_failure(std::to_string(total - passed) +
                           " fixture(s) deviated from the expected verdicts");
    }
    return 0;
  }

  if (app.got_subcommand(bench_cmd)) {
    char* report = nullptr;
    int status = fairdiv_bench(setting.c_str(), seed, count,
                               bench_timings ? 1 : 0,
                               bench_flags.format == "json" ? 1 : 0, &report);
    if (status != FAIRDIV_OK) return api_failure();
    ApiString owned(report);
    return emit_report(report, bench_flags.out_path);
  }

  return 0;
}
