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

#ifndef FAIRDIV_SRC_RATIONAL_HPP_
#define FAIRDIV_SRC_RATIONAL_HPP_

#include <cstdint>
#include <string>

namespace fairdiv {

// Exact rational with int64 numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) == 1). Intermediate products run through
// __int128; results that do not fit int64 after reduction throw.
// Fairness verdicts and tie-breaks must not depend on float noise, so
// every item value in the library is one of these.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // "7" for integers, "7/2" otherwise.
  std::string to_string() const;

  // Accepts an optional sign, digits, and an optional "/digits" suffix.
  static Rational parse(const std::string& text);

 private:
  long long num_;
  long long den_;
};

inline Rational max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

inline Rational min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_RATIONAL_HPP_
