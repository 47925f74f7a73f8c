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

#ifndef FAIRDIV_SRC_REPORT_HPP_
#define FAIRDIV_SRC_REPORT_HPP_

#include <optional>
#include <string>

#include "fairness.hpp"
#include "instance.hpp"

namespace fairdiv {

// Everything one solver or verifier run produced. Wall time is filled
// only when timing output was requested, so default runs stay
// byte-identical across machines.
struct RunReport {
  std::string instance_id;
  std::string algorithm;
  std::string guarantee;
  long long iterations = 0;
  Allocation allocation;
  std::optional<FairnessReport> fairness;
  std::optional<double> wall_ms;
};

// Line-oriented "key: value" text; lists come space-separated after the
// colon. The first line is always "report_schema: 1".
std::string render_run_report_text(const RunReport& report);

// Same content as the text form, as a JSON object.
std::string render_run_report_json(const RunReport& report, int indent = 2);

// Inverse of render_run_report_json; rendering the parsed report again
// reproduces the input byte for byte.
RunReport parse_run_report_json(const std::string& text);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_REPORT_HPP_
