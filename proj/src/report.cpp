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

#include "report.hpp"

#include <cstdio>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "error.hpp"

namespace fairdiv {
namespace {

using json = nlohmann::ordered_json;

const char* pe_verdict_name(PeVerdict v) {
  switch (v) {
    case PeVerdict::kYes:
      return "yes";
    case PeVerdict::kNo:
      return "no";
    case PeVerdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

PeVerdict pe_verdict_from_name(const std::string& name) {
  if (name == "yes") return PeVerdict::kYes;
  if (name == "no") return PeVerdict::kNo;
  if (name == "unknown") return PeVerdict::kUnknown;
  throw Error(ErrorCode::kParse, "unknown pareto verdict \"" + name + "\"");
}

std::string format_ms(double ms) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
  return buffer;
}

json rational_to_json(const Rational& value) {
  if (value.den() == 1) return json(value.num());
  return json(value.to_string());
}

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  throw Error(ErrorCode::kParse, "expected an integer or \"p/q\" string");
}

void text_line(std::ostringstream& out, const std::string& key,
               const std::string& value) {
  out << key << ": " << value << "\n";
}

template <typename Seq, typename Fn>
std::string joined(const Seq& seq, Fn&& render) {
  std::string out;
  bool first = true;
  for (const auto& entry : seq) {
    if (!first) out += " ";
    out += render(entry);
    first = false;
  }
  return out;
}

void fairness_text(std::ostringstream& out, const FairnessReport& fairness) {
  text_line(out, "feasible", fairness.feasibility.ok ? "true" : "false");
  for (size_t v = 0; v < fairness.feasibility.violations.size(); ++v) {
    text_line(out, "violation_" + std::to_string(v),
              fairness.feasibility.violations[v]);
  }
  for (size_t i = 0; i < fairness.values.size(); ++i) {
    text_line(out, "value_" + std::to_string(i),
              fairness.values[i].to_string());
  }
  text_line(out, "nash_welfare", fairness.nash.to_string());
  for (size_t i = 0; i < fairness.envy.size(); ++i) {
    text_line(out, "envy_" + std::to_string(i),
              joined(fairness.envy[i],
                     [](const Rational& r) { return r.to_string(); }));
  }
  if (fairness.feasibility.ok) {
    text_line(out, "fef", fairness.fef ? "true" : "false");
    text_line(out, "fef1", fairness.fef1 ? "true" : "false");
    if (fairness.fef1_witness) {
      text_line(out, "fef1_witness",
                std::to_string(fairness.fef1_witness->envious) + " envies " +
                    std::to_string(fairness.fef1_witness->envied));
    } else {
      text_line(out, "fef1_witness", "none");
    }
    text_line(out, "weak_fef1", fairness.weak_fef1 ? "true" : "false");
    text_line(out, "efx", fairness.efx ? "true" : "false");
    text_line(out, "ef1_plain", fairness.ef1_plain ? "true" : "false");
  }
  text_line(out, "pareto", pe_verdict_name(fairness.pareto.verdict));
  text_line(out, "pareto_basis", fairness.pareto.basis);
}

json fairness_to_json(const FairnessReport& fairness) {
  json out;
  out["feasible"] = fairness.feasibility.ok;
  out["violations"] = fairness.feasibility.violations;
  json values = json::array();
  for (const Rational& v : fairness.values) values.push_back(rational_to_json(v));
  out["values"] = std::move(values);
  out["nash_welfare"] = rational_to_json(fairness.nash);
  json envy = json::array();
  for (const auto& row : fairness.envy) {
    json r = json::array();
    for (const Rational& e : row) r.push_back(rational_to_json(e));
    envy.push_back(std::move(r));
  }
  out["envy"] = std::move(envy);
  if (fairness.feasibility.ok) {
    out["fef"] = fairness.fef;
    out["fef1"] = fairness.fef1;
    if (fairness.fef1_witness) {
      out["fef1_witness"] = {{"envious", fairness.fef1_witness->envious},
                             {"envied", fairness.fef1_witness->envied}};
    } else {
      out["fef1_witness"] = nullptr;
    }
    out["weak_fef1"] = fairness.weak_fef1;
    out["efx"] = fairness.efx;
    out["ef1_plain"] = fairness.ef1_plain;
  }
  out["pareto"] = pe_verdict_name(fairness.pareto.verdict);
  out["pareto_basis"] = fairness.pareto.basis;
  return out;
}

FairnessReport fairness_from_json(const json& doc) {
  FairnessReport fairness;
  fairness.feasibility.ok = doc.at("feasible").get<bool>();
  for (const json& v : doc.at("violations")) {
    fairness.feasibility.violations.push_back(v.get<std::string>());
  }
  for (const json& v : doc.at("values")) {
    fairness.values.push_back(rational_from_json(v));
  }
  fairness.nash = rational_from_json(doc.at("nash_welfare"));
  for (const json& row : doc.at("envy")) {
    std::vector<Rational> r;
    for (const json& e : row) r.push_back(rational_from_json(e));
    fairness.envy.push_back(std::move(r));
  }
  if (doc.contains("fef")) {
    fairness.fef = doc.at("fef").get<bool>();
    fairness.fef1 = doc.at("fef1").get<bool>();
    if (!doc.at("fef1_witness").is_null()) {
      Fef1Witness witness;
      witness.envious = doc.at("fef1_witness").at("envious").get<int>();
      witness.envied = doc.at("fef1_witness").at("envied").get<int>();
      fairness.fef1_witness = witness;
    }
    fairness.weak_fef1 = doc.at("weak_fef1").get<bool>();
    fairness.efx = doc.at("efx").get<bool>();
    fairness.ef1_plain = doc.at("ef1_plain").get<bool>();
  }
  fairness.pareto.verdict =
      pe_verdict_from_name(doc.at("pareto").get<std::string>());
  fairness.pareto.basis = doc.at("pareto_basis").get<std::string>();
  return fairness;
}

}  // namespace

std::string render_run_report_text(const RunReport& report) {
  std::ostringstream out;
  text_line(out, "report_schema", "1");
  text_line(out, "instance", report.instance_id);
  if (!report.algorithm.empty()) {
    text_line(out, "algorithm", report.algorithm);
    text_line(out, "guarantee", report.guarantee);
    text_line(out, "iterations", std::to_string(report.iterations));
  }
  for (size_t i = 0; i < report.allocation.size(); ++i) {
    text_line(out, "bundle_" + std::to_string(i),
              joined(report.allocation[i],
                     [](int item) { return std::to_string(item); }));
  }
  if (report.fairness) fairness_text(out, *report.fairness);
  if (report.wall_ms) text_line(out, "wall_ms", format_ms(*report.wall_ms));
  return out.str();
}

std::string render_run_report_json(const RunReport& report, int indent) {
  json doc;
  doc["report_schema"] = 1;
  doc["instance"] = report.instance_id;
  if (!report.algorithm.empty()) {
    doc["algorithm"] = report.algorithm;
    doc["guarantee"] = report.guarantee;
    doc["iterations"] = report.iterations;
  }
  json bundles = json::array();
  for (const ItemSet& bundle : report.allocation) bundles.push_back(bundle);
  doc["bundles"] = std::move(bundles);
  if (report.fairness) doc["fairness"] = fairness_to_json(*report.fairness);
  if (report.wall_ms) doc["wall_ms"] = *report.wall_ms;
  return doc.dump(indent) + "\n";
}

RunReport parse_run_report_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("parse error: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.at("report_schema").get<int>() != 1) {
      throw Error(ErrorCode::kParse, "unsupported report schema");
    }
    RunReport report;
    report.instance_id = doc.at("instance").get<std::string>();
    if (doc.contains("algorithm")) {
      report.algorithm = doc.at("algorithm").get<std::string>();
      report.guarantee = doc.at("guarantee").get<std::string>();
      report.iterations = doc.at("iterations").get<long long>();
    }
    for (const json& bundle : doc.at("bundles")) {
      ItemSet set;
      for (const json& item : bundle) set.push_back(item.get<int>());
      report.allocation.push_back(std::move(set));
    }
    if (doc.contains("fairness")) {
      report.fairness = fairness_from_json(doc.at("fairness"));
    }
    if (doc.contains("wall_ms")) {
      report.wall_ms = doc.at("wall_ms").get<double>();
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("parse error: ") + e.what());
  }
}

}  // namespace fairdiv
