/* Copyright 2023 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C surface of the fair-division solver.
 *
 * Every function returns a status code (FAIRDIV_OK or an error) and
 * writes results through out-parameters. Strings handed out through
 * `char**` are heap copies; release them with fairdiv_string_free.
 * On error the out-parameters are left untouched and a description is
 * available from fairdiv_last_error (per thread).
 */

#ifndef FAIRDIV_INCLUDE_FAIRDIV_FAIRDIV_H_
#define FAIRDIV_INCLUDE_FAIRDIV_FAIRDIV_H_

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define FAIRDIV_OK 0
/* Contract-violating arguments (bad order vector, unknown algorithm,
 * null handle, ...). */
#define FAIRDIV_ERR_INVALID_ARGUMENT 1
/* Unreadable instance / allocation / report text. */
#define FAIRDIV_ERR_PARSE 2
/* Well-formed request the library declines: no algorithm covers the
 * setting, a known impossibility applies, or a search guard was
 * exceeded. The error message names the reason. */
#define FAIRDIV_ERR_CAPABILITY 3
/* File system failures. */
#define FAIRDIV_ERR_IO 4
/* Broken internal invariant; always a bug. */
#define FAIRDIV_ERR_INTERNAL 5

/* Semantic version of the library. Static storage; do not free. */
const char* fairdiv_version(void);

/* Description and code of the calling thread's most recent failure.
 * The message pointer stays valid until the next failing call on the
 * same thread; do not free. Returns "" / FAIRDIV_OK when no call
 * failed yet. */
const char* fairdiv_last_error(void);
int fairdiv_last_error_code(void);

/* Releases a string returned through any `char**` out-parameter.
 * NULL is accepted. */
void fairdiv_string_free(char* text);

/* An immutable fair-division problem: agents, items, valuations and
 * per-agent feasibility constraints. */
typedef struct fairdiv_instance fairdiv_instance;

/* Parses an instance from JSON text / reads and parses a file. */
int fairdiv_instance_parse(const char* json_text, fairdiv_instance** out);
int fairdiv_instance_load(const char* path, fairdiv_instance** out);
void fairdiv_instance_free(fairdiv_instance* instance);

/* Counts; -1 when `instance` is NULL. */
int fairdiv_instance_agents(const fairdiv_instance* instance);
int fairdiv_instance_items(const fairdiv_instance* instance);

/* Instance id ("" when the file declared none). */
int fairdiv_instance_id(const fairdiv_instance* instance, char** out);

/* Canonical JSON for the instance. indent < 0 emits one line. */
int fairdiv_instance_to_json(const fairdiv_instance* instance, int indent,
                             char** out);

/* Solve settings. Zero-initialize with fairdiv_solve_params_init, then
 * override fields as needed. */
typedef struct fairdiv_solve_params {
  /* Algorithm name, or NULL / "" / "auto" for automatic selection. */
  const char* algorithm;
  /* Optional agent pick order for the round-robin algorithms;
   * `order_len` entries, must be a permutation of the agents. */
  const int* order;
  int order_len;
  /* Chooser seat for rr_squared. */
  int first_agent;
  /* Non-zero: run the mid-run correctness assertions. */
  int check_invariants;
  /* Non-zero: append a fairness section to the report. */
  int verify;
  /* Enumeration guard for the verification pass (Pareto check);
   * 0 keeps the built-in default. */
  long long bound;
  /* 0: line-oriented text report, non-zero: JSON report. */
  int json_format;
  /* Non-zero: include wall-clock time in the report. */
  int timings;
} fairdiv_solve_params;

void fairdiv_solve_params_init(fairdiv_solve_params* params);

/* Runs one algorithm (or the dispatcher) and renders a run report.
 * When params->verify is set, *verified_out (if non-NULL) reports
 * whether the fairness notion promised by the algorithm's guarantee
 * actually holds: 1 yes, 0 no. Without verify it is set to -1. */
int fairdiv_solve(const fairdiv_instance* instance,
                  const fairdiv_solve_params* params, char** report_out,
                  int* verified_out);

/* Checks a proposed allocation (JSON: {"bundles": [[item, ...], ...]})
 * and renders a fairness report. *feasible_out (if non-NULL) gets 1
 * when every bundle satisfies its agent's constraint and the items
 * partition exactly, else 0. */
int fairdiv_verify(const fairdiv_instance* instance,
                   const char* allocation_json, long long bound,
                   int json_format, int timings, char** report_out,
                   int* feasible_out);

/* Evaluates one fairness notion on a proposed allocation.
 * notion: "fef" | "fef1" | "weak-fef1" | "efx" | "ef1".
 * *holds_out gets 1 or 0. The allocation must be feasible. */
int fairdiv_check_notion(const fairdiv_instance* instance,
                         const char* allocation_json, const char* notion,
                         int* holds_out);

/* Brute-force ground truth over all complete feasible allocations.
 * question: "count" | "exists-fef" | "exists-fef1" |
 *           "exists-weak-fef1" | "exists-efx" | "exists-ef1" |
 *           "mnw" | "swm".
 * bound caps the n^m assignment space (0 keeps the default; the
 * FAIRDIV_ORACLE_BOUND environment variable overrides the default). */
int fairdiv_oracle(const fairdiv_instance* instance, const char* question,
                   long long bound, int json_format, char** report_out);

/* Runs the bundled example sweep: every registered instance is checked
 * against its expected verdicts. When fixtures_dir is non-NULL, the
 * corpus files in that directory are also checked against the
 * registry. *passed_out / *total_out (if non-NULL) get the tallies;
 * the sweep itself returning a report is FAIRDIV_OK even when some
 * fixture fails — compare the tallies. */
int fairdiv_demo(const char* fixtures_dir, int json_format,
                 char** report_out, int* passed_out, int* total_out);

/* Seeded random-instance benchmark. setting is one generator setting
 * name or NULL / "all". count is the number of instances per setting
 * (0 keeps the default of 100). */
int fairdiv_bench(const char* setting, unsigned long long seed, int count,
                  int timings, int json_format, char** report_out);

/* Newline-joined ids of the bundled example instances. */
int fairdiv_fixture_ids(char** out);

/* Canonical JSON of one bundled example instance. */
int fairdiv_fixture_instance(const char* id, int indent, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FAIRDIV_INCLUDE_FAIRDIV_FAIRDIV_H_ */
