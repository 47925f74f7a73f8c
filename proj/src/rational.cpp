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

#include "rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

#include "error.hpp"

namespace fairdiv {
namespace {

using int128 = __int128;

long long checked_narrow(int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw_invalid("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(int128 num, int128 den) {
  if (den == 0) throw_invalid("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(checked_narrow(num), checked_narrow(den));
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw_invalid("rational with zero denominator");
  int128 n = num;
  int128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_narrow(n);
  den_ = checked_narrow(d);
}

Rational Rational::operator+(const Rational& o) const {
  if (den_ == 1 && o.den_ == 1) {
    return Rational(checked_narrow(int128(num_) + int128(o.num_)));
  }
  return make(int128(num_) * o.den_ + int128(o.num_) * den_,
              int128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  if (den_ == 1 && o.den_ == 1) {
    return Rational(checked_narrow(int128(num_) - int128(o.num_)));
  }
  return make(int128(num_) * o.den_ - int128(o.num_) * den_,
              int128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make(int128(num_) * o.num_, int128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw_invalid("rational division by zero");
  return make(int128(num_) * o.den_, int128(den_) * o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool Rational::operator<(const Rational& o) const {
  if (den_ == o.den_) return num_ < o.num_;
  return int128(num_) * o.den_ < int128(o.num_) * den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::kParse, "empty rational literal");
  size_t slash = text.find('/');
  auto parse_ll = [&](const std::string& part) -> long long {
    if (part.empty()) throw Error(ErrorCode::kParse, "bad rational: " + text);
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad rational: " + text);
    }
    if (pos != part.size()) {
      throw Error(ErrorCode::kParse, "bad rational: " + text);
    }
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_ll(text));
  long long num = parse_ll(text.substr(0, slash));
  long long den = parse_ll(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::kParse, "bad rational: " + text);
  return Rational(num, den);
}

}  // namespace fairdiv
