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

#include "fairdiv/fairdiv.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "algorithms.hpp"
#include "bench.hpp"
#include "error.hpp"
#include "fairness.hpp"
#include "fixtures.hpp"
#include "instance.hpp"
#include "instance_io.hpp"
#include "oracle.hpp"
#include "report.hpp"

struct fairdiv_instance {
  fairdiv::Instance value;
};

namespace {

using json = nlohmann::ordered_json;

thread_local int g_last_code = FAIRDIV_OK;
thread_local std::string g_last_message;

int fail(int code, const std::string& message) {
  g_last_code = code;
  g_last_message = message;
  return code;
}

int fail_null(const char* what) {
  return fail(FAIRDIV_ERR_INVALID_ARGUMENT,
              std::string(what) + " must not be NULL");
}

// Runs the body and funnels exceptions into status codes. The body
// writes its outputs only on success, so failed calls leave the
// caller's pointers untouched.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
  } catch (const fairdiv::Error& error) {
    return fail(static_cast<int>(error.code()), error.what());
  } catch (const std::exception& error) {
    return fail(FAIRDIV_ERR_INTERNAL, error.what());
  }
  return FAIRDIV_OK;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) std::abort();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

long long effective_bound(long long bound) {
  return bound > 0 ? bound : fairdiv::default_oracle_bound();
}

fairdiv::FairnessNotion notion_from_name(const std::string& name) {
  if (name == "fef") return fairdiv::FairnessNotion::kFef;
  if (name == "fef1") return fairdiv::FairnessNotion::kFef1;
  if (name == "weak-fef1") return fairdiv::FairnessNotion::kWeakFef1;
  if (name == "efx") return fairdiv::FairnessNotion::kEfx;
  if (name == "ef1") return fairdiv::FairnessNotion::kEf1Plain;
  fairdiv::throw_invalid("unknown fairness notion \"" + name +
                         "\"; expected fef, fef1, weak-fef1, efx or ef1");
}

// A guarantee string leads with the notion the algorithm proves
// ("F-EF1 ...", "EF1 ..."); checking that notion is what "verified"
// means for a solve run.
bool guarantee_holds(const std::string& guarantee,
                     const fairdiv::FairnessReport& fairness) {
  if (!fairness.feasibility.ok) return false;
  if (guarantee.rfind("F-EF1", 0) == 0) return fairness.fef1;
  if (guarantee.rfind("EF1", 0) == 0) return fairness.ef1_plain;
  return false;
}

std::string items_line(const fairdiv::ItemSet& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(items[i]);
  }
  return out;
}

json bundles_json(const fairdiv::Allocation& allocation) {
  json out = json::array();
  for (const fairdiv::ItemSet& bundle : allocation) out.push_back(bundle);
  return out;
}

json rational_json(const fairdiv::Rational& value) {
  if (value.den() == 1) return json(value.num());
  return json(value.to_string());
}

std::string dump(const json& doc, int indent) {
  std::string out = doc.dump(indent < 0 ? -1 : indent);
  out += '\n';
  return out;
}

// -- oracle reports --------------------------------------------------

struct OracleAnswer {
  std::string question;
  std::optional<long long> count;
  std::optional<bool> exists;
  std::optional<fairdiv::Allocation> allocation;
  std::optional<fairdiv::Rational> nash;
  std::optional<long long> mnw_count;
  std::optional<fairdiv::Rational> welfare;
};

OracleAnswer answer_question(const fairdiv::Instance& instance,
                             const std::string& question, long long bound) {
  OracleAnswer out;
  out.question = question;
  if (question == "count") {
    out.count = fairdiv::count_feasible(instance, bound);
    return out;
  }
  if (question.rfind("exists-", 0) == 0) {
    fairdiv::FairnessNotion notion = notion_from_name(question.substr(7));
    fairdiv::ExistsFairResult result =
        fairdiv::exists_fair(instance, notion, bound);
    out.exists = result.exists;
    if (result.exists) out.allocation = result.witness;
    return out;
  }
  if (question == "mnw") {
    std::vector<fairdiv::Allocation> optima =
        fairdiv::max_nash_welfare(instance, bound);
    out.mnw_count = static_cast<long long>(optima.size());
    if (!optima.empty()) {
      out.allocation = optima.front();
      out.nash = fairdiv::nash_welfare(instance, optima.front());
    }
    return out;
  }
  if (question == "swm") {
    fairdiv::SwmOracleResult result = fairdiv::swm_oracle(instance, bound);
    out.welfare = result.welfare;
    out.allocation = result.allocation;
    return out;
  }
  fairdiv::throw_invalid(
      "unknown oracle question \"" + question +
      "\"; expected count, exists-<notion>, mnw or swm");
}

std::string render_oracle_text(const fairdiv::Instance& instance,
                               const OracleAnswer& answer) {
  std::ostringstream out;
  out << "report_schema: 1\n";
  out << "instance: " << instance.id() << "\n";
  out << "question: " << answer.question << "\n";
  if (answer.count) out << "count: " << *answer.count << "\n";
  if (answer.exists) {
    out << "exists: " << (*answer.exists ? "true" : "false") << "\n";
  }
  if (answer.mnw_count) out << "mnw_count: " << *answer.mnw_count << "\n";
  if (answer.nash) out << "nash_welfare: " << answer.nash->to_string() << "\n";
  if (answer.welfare) out << "welfare: " << answer.welfare->to_string() << "\n";
  if (answer.allocation) {
    for (std::size_t i = 0; i < answer.allocation->size(); ++i) {
      out << "bundle_" << i << ": " << items_line((*answer.allocation)[i])
          << "\n";
    }
  }
  return out.str();
}

std::string render_oracle_json(const fairdiv::Instance& instance,
                               const OracleAnswer& answer) {
  json doc;
  doc["report_schema"] = 1;
  doc["instance"] = instance.id();
  doc["question"] = answer.question;
  if (answer.count) doc["count"] = *answer.count;
  if (answer.exists) doc["exists"] = *answer.exists;
  if (answer.mnw_count) doc["mnw_count"] = *answer.mnw_count;
  if (answer.nash) doc["nash_welfare"] = rational_json(*answer.nash);
  if (answer.welfare) doc["welfare"] = rational_json(*answer.welfare);
  if (answer.allocation) doc["bundles"] = bundles_json(*answer.allocation);
  return dump(doc, 2);
}

// -- demo (fixture sweep) --------------------------------------------

// The corpus files are a second copy of the registry; the sweep treats
// a divergence as a failure so the two cannot drift apart.
void check_corpus_files(const std::string& dir, fairdiv::FixtureResult* result) {
  const std::string& id = result->id;
  std::string path = dir + "/" + id + ".json";
  try {
    fairdiv::Instance from_file =
        fairdiv::parse_instance_json(fairdiv::read_text_file(path));
    fairdiv::Instance from_registry = fairdiv::fixture_instance(id);
    if (fairdiv::instance_to_json(from_file) ==
        fairdiv::instance_to_json(from_registry)) {
      result->checks.push_back("ok corpus instance file matches the registry");
    } else {
      result->passed = false;
      result->checks.push_back("FAIL corpus instance file " + path +
                               " differs from the registry");
    }
  } catch (const fairdiv::Error& error) {
    result->passed = false;
    result->checks.push_back("FAIL corpus instance file " + path + ": " +
                             error.what());
  }
  std::optional<fairdiv::Allocation> pinned = fairdiv::fixture_allocation(id);
  if (!pinned) return;
  std::string alloc_path = dir + "/" + id + ".alloc.json";
  try {
    fairdiv::Allocation from_file = fairdiv::parse_allocation_json(
        fairdiv::read_text_file(alloc_path), fairdiv::fixture_instance(id));
    if (from_file == *pinned) {
      result->checks.push_back(
          "ok corpus allocation file matches the registry");
    } else {
      result->passed = false;
      result->checks.push_back("FAIL corpus allocation file " + alloc_path +
                               " differs from the registry");
    }
  } catch (const fairdiv::Error& error) {
    result->passed = false;
    result->checks.push_back("FAIL corpus allocation file " + alloc_path +
                             ": " + error.what());
  }
}

std::string render_demo_text(const std::vector<fairdiv::FixtureResult>& results,
                             int passed) {
  std::ostringstream out;
  out << "report_schema: 1\n";
  out << "fixtures_total: " << results.size() << "\n";
  for (const fairdiv::FixtureResult& result : results) {
    out << "fixture: " << result.id << "\n";
    for (const std::string& check : result.checks) {
      out << "check: " << check << "\n";
    }
    out << "fixture_result: " << (result.passed ? "pass" : "fail") << "\n";
  }
  out << "fixtures_passed: " << passed << "\n";
  out << "demo_result: "
      << (passed == static_cast<int>(results.size()) ? "pass" : "fail")
      << "\n";
  return out.str();
}

std::string render_demo_json(const std::vector<fairdiv::FixtureResult>& results,
                             int passed) {
  json doc;
  doc["report_schema"] = 1;
  json fixtures = json::array();
  for (const fairdiv::FixtureResult& result : results) {
    json row;
    row["id"] = result.id;
    row["passed"] = result.passed;
    row["checks"] = result.checks;
    fixtures.push_back(std::move(row));
  }
  doc["fixtures"] = std::move(fixtures);
  doc["passed"] = passed;
  doc["total"] = results.size();
  return dump(doc, 2);
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

extern "C" {

const char* fairdiv_version(void) { return "0.1.0"; }

const char* fairdiv_last_error(void) { return g_last_message.c_str(); }

int fairdiv_last_error_code(void) { return g_last_code; }

void fairdiv_string_free(char* text) { std::free(text); }

int fairdiv_instance_parse(const char* json_text, fairdiv_instance** out) {
  if (json_text == nullptr) return fail_null("json_text");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    *out = new fairdiv_instance{fairdiv::parse_instance_json(json_text)};
  });
}

int fairdiv_instance_load(const char* path, fairdiv_instance** out) {
  if (path == nullptr) return fail_null("path");
  if (out == nullptr) return fail_null("out");
  return guarded(
      [&] { *out = new fairdiv_instance{fairdiv::load_instance(path)}; });
}

void fairdiv_instance_free(fairdiv_instance* instance) { delete instance; }

int fairdiv_instance_agents(const fairdiv_instance* instance) {
  return instance == nullptr ? -1 : instance->value.num_agents();
}

int fairdiv_instance_items(const fairdiv_instance* instance) {
  return instance == nullptr ? -1 : instance->value.num_items();
}

int fairdiv_instance_id(const fairdiv_instance* instance, char** out) {
  if (instance == nullptr) return fail_null("instance");
  if (out == nullptr) return fail_null("out");
  *out = dup_string(instance->value.id());
  return FAIRDIV_OK;
}

int fairdiv_instance_to_json(const fairdiv_instance* instance, int indent,
                             char** out) {
  if (instance == nullptr) return fail_null("instance");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    *out = dup_string(fairdiv::instance_to_json(instance->value, indent));
  });
}

void fairdiv_solve_params_init(fairdiv_solve_params* params) {
  if (params == nullptr) return;
  *params = fairdiv_solve_params{};
  params->algorithm = nullptr;
  params->order = nullptr;
}

int fairdiv_solve(const fairdiv_instance* instance,
                  const fairdiv_solve_params* params, char** report_out,
                  int* verified_out) {
  if (instance == nullptr) return fail_null("instance");
  if (params == nullptr) return fail_null("params");
  if (report_out == nullptr) return fail_null("report_out");
  return guarded([&] {
    fairdiv::SolveOptions options;
    options.check_invariants = params->check_invariants != 0;
    options.first_agent = params->first_agent;
    if (params->order != nullptr && params->order_len > 0) {
      options.order.assign(params->order, params->order + params->order_len);
    }
    std::string name =
        params->algorithm == nullptr ? std::string() : params->algorithm;
    if (name.empty()) name = "auto";

    auto started = std::chrono::steady_clock::now();
    fairdiv::SolveResult solved =
        fairdiv::solve_with(name, instance->value, options);

    fairdiv::RunReport report;
    report.instance_id = instance->value.id();
    report.algorithm = solved.algorithm;
    report.guarantee = solved.guarantee;
    report.iterations = solved.iterations;
    report.allocation = solved.allocation;
    int verified = -1;
    if (params->verify) {
      report.fairness = fairdiv::build_fairness_report(
          instance->value, solved.allocation, effective_bound(params->bound));
      verified = guarantee_holds(solved.guarantee, *report.fairness) ? 1 : 0;
    }
    if (params->timings) report.wall_ms = ms_since(started);

    *report_out = dup_string(params->json_format
                                 ? fairdiv::render_run_report_json(report)
                                 : fairdiv::render_run_report_text(report));
    if (verified_out != nullptr) *verified_out = verified;
  });
}

int fairdiv_verify(const fairdiv_instance* instance,
                   const char* allocation_json, long long bound,
                   int json_format, int timings, char** report_out,
                   int* feasible_out) {
  if (instance == nullptr) return fail_null("instance");
  if (allocation_json == nullptr) return fail_null("allocation_json");
  if (report_out == nullptr) return fail_null("report_out");
  return guarded([&] {
    fairdiv::Allocation allocation =
        fairdiv::parse_allocation_json(allocation_json, instance->value);
    auto started = std::chrono::steady_clock::now();
    fairdiv::FairnessReport fairness = fairdiv::build_fairness_report(
        instance->value, allocation, effective_bound(bound));

    fairdiv::RunReport report;
    report.instance_id = instance->value.id();
    report.allocation = allocation;
    report.fairness = fairness;
    if (timings) report.wall_ms = ms_since(started);

    *report_out = dup_string(json_format
                                 ? fairdiv::render_run_report_json(report)
                                 : fairdiv::render_run_report_text(report));
    if (feasible_out != nullptr) *feasible_out = fairness.feasibility.ok ? 1 : 0;
  });
}

int fairdiv_check_notion(const fairdiv_instance* instance,
                         const char* allocation_json, const char* notion,
                         int* holds_out) {
  if (instance == nullptr) return fail_null("instance");
  if (allocation_json == nullptr) return fail_null("allocation_json");
  if (notion == nullptr) return fail_null("notion");
  if (holds_out == nullptr) return fail_null("holds_out");
  return guarded([&] {
    fairdiv::Allocation allocation =
        fairdiv::parse_allocation_json(allocation_json, instance->value);
    bool holds = fairdiv::check_notion(instance->value, allocation,
                                       notion_from_name(notion));
    *holds_out = holds ? 1 : 0;
  });
}

int fairdiv_oracle(const fairdiv_instance* instance, const char* question,
                   long long bound, int json_format, char** report_out) {
  if (instance == nullptr) return fail_null("instance");
  if (question == nullptr) return fail_null("question");
  if (report_out == nullptr) return fail_null("report_out");
  return guarded([&] {
    OracleAnswer answer =
        answer_question(instance->value, question, effective_bound(bound));
    *report_out = dup_string(json_format
                                 ? render_oracle_json(instance->value, answer)
                                 : render_oracle_text(instance->value, answer));
  });
}

int fairdiv_demo(const char* fixtures_dir, int json_format, char** report_out,
                 int* passed_out, int* total_out) {
  if (report_out == nullptr) return fail_null("report_out");
  return guarded([&] {
    std::vector<fairdiv::FixtureResult> results = fairdiv::run_all_fixtures();
    if (fixtures_dir != nullptr && fixtures_dir[0] != '\0') {
      for (fairdiv::FixtureResult& result : results) {
        check_corpus_files(fixtures_dir, &result);
      }
    }
    int passed = 0;
    for (const fairdiv::FixtureResult& result : results) {
      if (result.passed) ++passed;
    }
    *report_out = dup_string(json_format ? render_demo_json(results, passed)
                                         : render_demo_text(results, passed));
    if (passed_out != nullptr) *passed_out = passed;
    if (total_out != nullptr) *total_out = static_cast<int>(results.size());
  });
}

int fairdiv_bench(const char* setting, unsigned long long seed, int count,
                  int timings, int json_format, char** report_out) {
  if (report_out == nullptr) return fail_null("report_out");
  return guarded([&] {
    fairdiv::BenchOptions options;
    if (setting != nullptr && setting[0] != '\0') options.setting = setting;
    options.seed = seed;
    if (count > 0) options.count = count;
    options.timings = timings != 0;
    std::vector<fairdiv::BenchRow> rows = fairdiv::run_bench(options);
    *report_out =
        dup_string(json_format ? fairdiv::render_bench_json(options, rows)
                               : fairdiv::render_bench_text(options, rows));
  });
}

int fairdiv_fixture_ids(char** out) {
  if (out == nullptr) return fail_null("out");
  std::string joined;
  for (const std::string& id : fairdiv::fixture_ids()) {
    joined += id;
    joined += '\n';
  }
  *out = dup_string(joined);
  return FAIRDIV_OK;
}

int fairdiv_fixture_instance(const char* id, int indent, char** out) {
  if (id == nullptr) return fail_null("id");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    *out = dup_string(
        fairdiv::instance_to_json(fairdiv::fixture_instance(id), indent));
  });
}

}  // extern "C"
