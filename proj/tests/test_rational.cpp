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

#include <doctest.h>

#include <limits>

#include "error.hpp"
#include "rational.hpp"

using fairdiv::Error;
using fairdiv::ErrorCode;
using fairdiv::Rational;

TEST_CASE("construction normalizes sign and lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(5, 10).num() == 1);
  CHECK(Rational(5, 10).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);

  Rational acc = 0;
  acc += Rational(1, 4);
  acc += Rational(1, 4);
  CHECK(acc == Rational(1, 2));
  acc -= Rational(1, 2);
  CHECK(acc.is_zero());
  acc = Rational(3);
  acc *= Rational(1, 3);
  CHECK(acc == Rational(1));
}

TEST_CASE("intermediate products beyond 64 bits still reduce") {
  // a + (-a) with a huge denominator: the cross products overflow a
  // long long but the reduced result is exactly zero.
  Rational a(std::numeric_limits<long long>::max() / 7, 3);
  CHECK((a + (-a)).is_zero());
  CHECK(a - a == Rational(0));
  // An unreducible overflow is reported rather than wrapped.
  Rational big(std::numeric_limits<long long>::max() - 1);
  CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(Rational(1, 2) >= Rational(1, 2));
  CHECK(Rational(1, 2) != Rational(1, 3));
  CHECK(max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(Rational(-5).is_negative());
  CHECK_FALSE(Rational(0).is_negative());
}

TEST_CASE("to_string and parse round-trip") {
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(-7, 2).to_string() == "-7/2");
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "2/x", "3 "}) {
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
  try {
    Rational::parse("nope");
    FAIL("expected a parse error");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::kParse);
  }
}
