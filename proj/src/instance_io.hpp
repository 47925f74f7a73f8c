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

#ifndef FAIRDIV_SRC_INSTANCE_IO_HPP_
#define FAIRDIV_SRC_INSTANCE_IO_HPP_

#include <string>

#include "instance.hpp"

namespace fairdiv {

// JSON wire format, documented in docs/instance_format.md. Malformed
// JSON or shape errors raise parse errors; semantically bad values
// (say, a partition that misses an item) raise input errors from the
// constraint builders.
Instance parse_instance_json(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical serialization: valuations come out as one flat row-major
// array, partition constraints shared by all agents come out in the
// categories/capacities shorthand. Reparsing yields a structurally
// identical instance.
std::string instance_to_json(const Instance& instance, int indent = 2);

// {"bundles": [[...], ...]}; bundle count must match the instance.
// Bundles are sorted on the way in; duplicate items inside one bundle
// are rejected. Feasibility is *not* checked here.
Allocation parse_allocation_json(const std::string& text,
                                 const Instance& instance);
Allocation load_allocation(const std::string& path, const Instance& instance);
std::string allocation_to_json(const Allocation& allocation, int indent = 2);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_INSTANCE_IO_HPP_
