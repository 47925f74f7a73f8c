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

#ifndef FAIRDIV_SRC_FIXTURES_HPP_
#define FAIRDIV_SRC_FIXTURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace fairdiv {

// The nine worked counterexamples, built in code; the JSON files under
// fixtures/ carry the same instances for CLI use and must stay in sync
// (a test compares them).
std::vector<std::string> fixture_ids();
Instance fixture_instance(const std::string& id);

// The allocation a fixture pins down, for fixtures that come with one.
std::optional<Allocation> fixture_allocation(const std::string& id);

struct FixtureResult {
  std::string id;
  bool passed = false;
  std::vector<std::string> checks;  // "ok ..." / "FAIL ..." per check
};

// Re-derives the fixture's documented verdicts with the oracle and the
// verifiers; any deviation fails the fixture.
FixtureResult run_fixture(const std::string& id);
std::vector<FixtureResult> run_all_fixtures();

// Compile-time fixture directory (the repo's fixtures/), for the CLI.
std::string fixture_dir();

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_FIXTURES_HPP_
