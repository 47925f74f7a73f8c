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

#include "instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "error.hpp"

namespace fairdiv {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void throw_parse(const std::string& message) {
  throw Error(ErrorCode::kParse, "parse error: " + message);
}

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_string()) {
    return Rational::parse(value.get<std::string>());
  }
  throw_parse(where + " must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& value) {
  if (value.den() == 1) return json(value.num());
  return json(value.to_string());
}

ItemSet item_set_from_json(const json& value, const std::string& where) {
  if (!value.is_array()) throw_parse(where + " must be an array of item ids");
  ItemSet out;
  for (const json& entry : value) {
    if (!entry.is_number_integer()) {
      throw_parse(where + " must contain integers only");
    }
    out.push_back(entry.get<int>());
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw_parse(where + " repeats an item");
  }
  return out;
}

std::vector<long long> int_list_from_json(const json& value,
                                          const std::string& where) {
  if (!value.is_array()) throw_parse(where + " must be an array of integers");
  std::vector<long long> out;
  for (const json& entry : value) {
    if (!entry.is_number_integer()) {
      throw_parse(where + " must contain integers only");
    }
    out.push_back(entry.get<long long>());
  }
  return out;
}

std::vector<std::pair<int, int>> edges_from_json(const json& value,
                                                 const std::string& where) {
  if (!value.is_array()) throw_parse(where + " must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const json& entry : value) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw_parse(where + " entries must be two-element integer arrays");
    }
    out.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return out;
}

ConstraintSpec spec_from_json(const json& value, const std::string& where);

std::vector<ConstraintSpec> spec_list_from_json(const json& value,
                                                const std::string& where) {
  if (!value.is_array()) throw_parse(where + " must be an array");
  std::vector<ConstraintSpec> out;
  for (size_t i = 0; i < value.size(); ++i) {
    out.push_back(
        spec_from_json(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Reads exactly the fields its kind consumes; anything else present is
// ignored, so emit + reparse is stable.
ConstraintSpec spec_from_json(const json& value, const std::string& where) {
  if (!value.is_object()) throw_parse(where + " must be an object");
  if (!value.contains("kind") || !value["kind"].is_string()) {
    throw_parse(where + " needs a string \"kind\"");
  }
  ConstraintSpec spec;
  spec.kind = value["kind"].get<std::string>();
  auto need = [&](const char* field) -> const json& {
    if (!value.contains(field)) {
      throw_parse(where + " (" + spec.kind + ") needs \"" + field + "\"");
    }
    return value[field];
  };
  if (spec.kind == "uniform") {
    const json& cap = need("capacity");
    if (!cap.is_number_integer()) {
      throw_parse(where + ".capacity must be an integer");
    }
    spec.capacity = cap.get<long long>();
  } else if (spec.kind == "partition" || spec.kind == "laminar") {
    const json& sets = need("sets");
    if (!sets.is_array()) throw_parse(where + ".sets must be an array");
    for (size_t i = 0; i < sets.size(); ++i) {
      spec.sets.push_back(item_set_from_json(
          sets[i], where + ".sets[" + std::to_string(i) + "]"));
    }
    spec.capacities = int_list_from_json(need("capacities"),
                                         where + ".capacities");
  } else if (spec.kind == "transversal") {
    const json& count = need("vertex_count");
    if (!count.is_number_integer()) {
      throw_parse(where + ".vertex_count must be an integer");
    }
    spec.vertex_count = count.get<int>();
    const json& sets = need("sets");
    if (!sets.is_array()) throw_parse(where + ".sets must be an array");
    for (size_t i = 0; i < sets.size(); ++i) {
      spec.sets.push_back(item_set_from_json(
          sets[i], where + ".sets[" + std::to_string(i) + "]"));
    }
  } else if (spec.kind == "graphic") {
    const json& count = need("vertex_count");
    if (!count.is_number_integer()) {
      throw_parse(where + ".vertex_count must be an integer");
    }
    spec.vertex_count = count.get<int>();
    spec.edges = edges_from_json(need("edges"), where + ".edges");
  } else if (spec.kind == "free_extension") {
    spec.parts = spec_list_from_json(need("parts"), where + ".parts");
    const json& count = need("extension_count");
    if (!count.is_number_integer()) {
      throw_parse(where + ".extension_count must be an integer");
    }
    spec.extension_count = count.get<int>();
  } else if (spec.kind == "budget") {
    const json& costs = need("costs");
    if (!costs.is_array()) throw_parse(where + ".costs must be an array");
    for (size_t i = 0; i < costs.size(); ++i) {
      spec.costs.push_back(rational_from_json(
          costs[i], where + ".costs[" + std::to_string(i) + "]"));
    }
    spec.budget = rational_from_json(need("budget"), where + ".budget");
  } else if (spec.kind == "conflict_graph") {
    spec.edges = edges_from_json(need("edges"), where + ".edges");
  } else if (spec.kind == "bipartite_matching") {
    const json& left = need("vertex_count");
    const json& right = need("right_count");
    if (!left.is_number_integer() || !right.is_number_integer()) {
      throw_parse(where + " side counts must be integers");
    }
    spec.vertex_count = left.get<int>();
    spec.right_count = right.get<int>();
    spec.edges = edges_from_json(need("edges"), where + ".edges");
  } else if (spec.kind == "matroid_intersection") {
    spec.parts = spec_list_from_json(need("parts"), where + ".parts");
  } else {
    throw_parse(where + " has unknown constraint kind \"" + spec.kind + "\"");
  }
  return spec;
}

json spec_to_json(const ConstraintSpec& spec) {
  json out;
  out["kind"] = spec.kind;
  auto sets_to_json = [](const std::vector<ItemSet>& sets) {
    json arr = json::array();
    for (const ItemSet& s : sets) arr.push_back(s);
    return arr;
  };
  auto edges_to_json = [](const std::vector<std::pair<int, int>>& edges) {
    json arr = json::array();
    for (const auto& [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
  };
  if (spec.kind == "uniform") {
    out["capacity"] = spec.capacity;
  } else if (spec.kind == "partition" || spec.kind == "laminar") {
    out["sets"] = sets_to_json(spec.sets);
    out["capacities"] = spec.capacities;
  } else if (spec.kind == "transversal") {
    out["vertex_count"] = spec.vertex_count;
    out["sets"] = sets_to_json(spec.sets);
  } else if (spec.kind == "graphic") {
    out["vertex_count"] = spec.vertex_count;
    out["edges"] = edges_to_json(spec.edges);
  } else if (spec.kind == "free_extension") {
    json parts = json::array();
    for (const ConstraintSpec& part : spec.parts) {
      parts.push_back(spec_to_json(part));
    }
    out["parts"] = std::move(parts);
    out["extension_count"] = spec.extension_count;
  } else if (spec.kind == "budget") {
    json costs = json::array();
    for (const Rational& c : spec.costs) costs.push_back(rational_to_json(c));
    out["costs"] = std::move(costs);
    out["budget"] = rational_to_json(spec.budget);
  } else if (spec.kind == "conflict_graph") {
    out["edges"] = edges_to_json(spec.edges);
  } else if (spec.kind == "bipartite_matching") {
    out["vertex_count"] = spec.vertex_count;
    out["right_count"] = spec.right_count;
    out["edges"] = edges_to_json(spec.edges);
  } else if (spec.kind == "matroid_intersection") {
    json parts = json::array();
    for (const ConstraintSpec& part : spec.parts) {
      parts.push_back(spec_to_json(part));
    }
    out["parts"] = std::move(parts);
  } else {
    throw_invalid("constraint kind \"" + spec.kind +
                  "\" has no serializable description");
  }
  return out;
}

std::vector<std::vector<Rational>> valuations_from_json(const json& value,
                                                        int agents,
                                                        int items) {
  if (!value.is_array()) throw_parse("\"valuations\" must be an array");
  std::vector<std::vector<Rational>> rows(agents);
  if (!value.empty() && value[0].is_array()) {
    if (static_cast<int>(value.size()) != agents) {
      throw_parse("\"valuations\" must have one row per agent");
    }
    for (int i = 0; i < agents; ++i) {
      const json& row = value[i];
      if (!row.is_array() || static_cast<int>(row.size()) != items) {
        throw_parse("valuation row " + std::to_string(i) + " must list " +
                    std::to_string(items) + " values");
      }
      for (int j = 0; j < items; ++j) {
        rows[i].push_back(rational_from_json(
            row[j], "valuations[" + std::to_string(i) + "][" +
                        std::to_string(j) + "]"));
      }
    }
    return rows;
  }
  if (static_cast<long long>(value.size()) !=
      static_cast<long long>(agents) * items) {
    throw_parse("flat \"valuations\" must list agents*items values");
  }
  for (int i = 0; i < agents; ++i) {
    for (int j = 0; j < items; ++j) {
      rows[i].push_back(rational_from_json(
          value[i * items + j],
          "valuations[" + std::to_string(i * items + j) + "]"));
    }
  }
  return rows;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw_parse(e.what());
  }
  if (!doc.is_object()) throw_parse("instance document must be an object");
  std::string id;
  if (doc.contains("id")) {
    if (!doc["id"].is_string()) throw_parse("\"id\" must be a string");
    id = doc["id"].get<std::string>();
  }
  if (!doc.contains("agents") || !doc["agents"].is_number_integer()) {
    throw_parse("instance needs an integer \"agents\"");
  }
  if (!doc.contains("items") || !doc["items"].is_number_integer()) {
    throw_parse("instance needs an integer \"items\"");
  }
  const int agents = doc["agents"].get<int>();
  const int items = doc["items"].get<int>();
  if (agents < 1) throw_parse("\"agents\" must be positive");
  if (items < 0) throw_parse("\"items\" must be non-negative");
  if (!doc.contains("valuations")) throw_parse("instance needs \"valuations\"");
  std::vector<std::vector<Rational>> valuations =
      valuations_from_json(doc["valuations"], agents, items);

  if (doc.contains("categories")) {
    if (doc.contains("constraints")) {
      throw_parse("give either categories/capacities or constraints, not both");
    }
    if (!doc.contains("capacities")) {
      throw_parse("\"categories\" needs a \"capacities\" companion");
    }
    std::vector<ItemSet> categories;
    const json& cats = doc["categories"];
    if (!cats.is_array()) throw_parse("\"categories\" must be an array");
    for (size_t h = 0; h < cats.size(); ++h) {
      categories.push_back(item_set_from_json(
          cats[h], "categories[" + std::to_string(h) + "]"));
    }
    const json& caps = doc["capacities"];
    if (!caps.is_array() || caps.empty()) {
      throw_parse("\"capacities\" must be a non-empty array");
    }
    std::vector<std::vector<long long>> cap_rows;
    if (caps[0].is_array()) {
      if (static_cast<int>(caps.size()) != agents) {
        throw_parse("\"capacities\" must have one row per agent");
      }
      for (int i = 0; i < agents; ++i) {
        cap_rows.push_back(int_list_from_json(
            caps[i], "capacities[" + std::to_string(i) + "]"));
      }
    } else {
      cap_rows.assign(agents, int_list_from_json(caps, "capacities"));
    }
    bool all_equal = true;
    std::vector<Constraint> constraints;
    for (int i = 0; i < agents; ++i) {
      if (cap_rows[i].size() != categories.size()) {
        throw_parse("capacity row " + std::to_string(i) +
                    " must list one capacity per category");
      }
      if (cap_rows[i] != cap_rows[0]) all_equal = false;
      ConstraintSpec spec;
      spec.kind = "partition";
      spec.sets = categories;
      spec.capacities = cap_rows[i];
      constraints.push_back(build_constraint(spec, items));
    }
    return Instance(std::move(valuations), std::move(constraints), all_equal,
                    std::move(id));
  }

  if (!doc.contains("constraints")) {
    throw_parse("instance needs categories/capacities or \"constraints\"");
  }
  const json& cons = doc["constraints"];
  if (!cons.is_object()) throw_parse("\"constraints\" must be an object");
  if (cons.contains("shared")) {
    ConstraintSpec spec = spec_from_json(cons["shared"], "constraints.shared");
    return Instance::with_shared_constraint(std::move(valuations),
                                            build_constraint(spec, items),
                                            std::move(id));
  }
  if (cons.contains("per_agent")) {
    std::vector<ConstraintSpec> specs =
        spec_list_from_json(cons["per_agent"], "constraints.per_agent");
    if (static_cast<int>(specs.size()) != agents) {
      throw_parse("constraints.per_agent must list one constraint per agent");
    }
    std::vector<Constraint> constraints;
    for (const ConstraintSpec& spec : specs) {
      constraints.push_back(build_constraint(spec, items));
    }
    return Instance(std::move(valuations), std::move(constraints),
                    /*shared_constraint=*/false, std::move(id));
  }
  throw_parse("\"constraints\" needs \"shared\" or \"per_agent\"");
}

Instance load_instance(const std::string& path) {
  return parse_instance_json(read_text_file(path));
}

std::string instance_to_json(const Instance& instance, int indent) {
  json doc;
  if (!instance.id().empty()) doc["id"] = instance.id();
  doc["agents"] = instance.num_agents();
  doc["items"] = instance.num_items();
  json values = json::array();
  for (int i = 0; i < instance.num_agents(); ++i) {
    for (int j = 0; j < instance.num_items(); ++j) {
      values.push_back(rational_to_json(instance.value(i, j)));
    }
  }
  doc["valuations"] = std::move(values);

  bool all_partition = true;
  for (int i = 0; i < instance.num_agents() && all_partition; ++i) {
    const auto& spec = instance.constraint(i).spec;
    if (!spec || spec->kind != "partition" ||
        spec->sets != instance.constraint(0).spec->sets) {
      all_partition = false;
    }
  }
  if (all_partition) {
    json cats = json::array();
    for (const ItemSet& category : instance.constraint(0).spec->sets) {
      cats.push_back(category);
    }
    doc["categories"] = std::move(cats);
    json caps = json::array();
    for (int i = 0; i < instance.num_agents(); ++i) {
      caps.push_back(instance.constraint(i).spec->capacities);
    }
    doc["capacities"] = std::move(caps);
  } else {
    for (int i = 0; i < instance.num_agents(); ++i) {
      if (!instance.constraint(i).spec) {
        throw_invalid("agent " + std::to_string(i) +
                      "'s constraint has no serializable description");
      }
    }
    bool all_same_spec = true;
    for (int i = 1; i < instance.num_agents(); ++i) {
      if (!(*instance.constraint(i).spec == *instance.constraint(0).spec)) {
        all_same_spec = false;
        break;
      }
    }
    json cons;
    if (instance.constraints_shared() || all_same_spec) {
      cons["shared"] = spec_to_json(*instance.constraint(0).spec);
    } else {
      json list = json::array();
      for (int i = 0; i < instance.num_agents(); ++i) {
        list.push_back(spec_to_json(*instance.constraint(i).spec));
      }
      cons["per_agent"] = std::move(list);
    }
    doc["constraints"] = std::move(cons);
  }
  return doc.dump(indent) + "\n";
}

Allocation parse_allocation_json(const std::string& text,
                                 const Instance& instance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw_parse(e.what());
  }
  if (!doc.is_object() || !doc.contains("bundles")) {
    throw_parse("allocation document needs a \"bundles\" array");
  }
  const json& bundles = doc["bundles"];
  if (!bundles.is_array() ||
      static_cast<int>(bundles.size()) != instance.num_agents()) {
    throw_parse("\"bundles\" must list one bundle per agent");
  }
  Allocation out;
  for (size_t i = 0; i < bundles.size(); ++i) {
    ItemSet bundle = item_set_from_json(
        bundles[i], "bundles[" + std::to_string(i) + "]");
    for (int item : bundle) {
      if (item < 0 || item >= instance.num_items()) {
        throw_parse("bundles[" + std::to_string(i) + "] names item " +
                    std::to_string(item) + ", outside 0.." +
                    std::to_string(instance.num_items() - 1));
      }
    }
    out.push_back(std::move(bundle));
  }
  return out;
}

Allocation load_allocation(const std::string& path, const Instance& instance) {
  return parse_allocation_json(read_text_file(path), instance);
}

std::string allocation_to_json(const Allocation& allocation, int indent) {
  json doc;
  json bundles = json::array();
  for (const ItemSet& bundle : allocation) bundles.push_back(bundle);
  doc["bundles"] = std::move(bundles);
  return doc.dump(indent) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path + " for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed on " + path);
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  }
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "write failed on " + path);
}

}  // namespace fairdiv
