// Copyright 2026 The efx-chores Authors
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

#include "efx/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "efx/errors.hpp"

namespace efx {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 checked_narrow(i128 v, const char* ctx) {
  if (v > i128{INT64_MAX} || v < i128{INT64_MIN}) throw OverflowError(ctx);
  return static_cast<i64>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(i64 num, i64 den) : num_(num), den_(den) {
  if (den_ == 0) throw InputError("rational: zero denominator");
  if (den_ < 0) {
    if (num_ == INT64_MIN || den_ == INT64_MIN)
      throw OverflowError("rational: normalize");
    num_ = -num_;
    den_ = -den_;
  }
  i64 g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_decimal(std::string_view text) {
  // grammar: digits [ '.' digits ] | '.' digits   (at least one digit total)
  std::size_t dot = text.find('.');
  std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos
                                   ? std::string_view{}
                                   : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw InputError("decimal: no digits in '" + std::string(text) + "'");
  i128 num = 0;
  i128 den = 1;
  auto accumulate_digits = [&](std::string_view part) {
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError("decimal: bad character in '" + std::string(text) + "'");
      num = num * 10 + (c - '0');
      if (num > (i128{INT64_MAX} * 1000000000))
        throw OverflowError("decimal: too many digits");
    }
  };
  accumulate_digits(int_part);
  for (std::size_t k = 0; k < frac_part.size(); ++k) den *= 10;
  if (den > (i128{INT64_MAX})) throw OverflowError("decimal: too many fraction digits");
  accumulate_digits(frac_part);
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(checked_narrow(num, "decimal: numerator"),
                  checked_narrow(den, "decimal: denominator"));
}

bool Rational::has_finite_decimal() const {
  i64 d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  if (has_finite_decimal()) {
    // Scale denominator up to a power of ten, then print fixed-point.
    i128 num = num_ < 0 ? -i128{num_} : i128{num_};
    i128 pow10 = 1;
    i64 d = den_;
    while (d % 2 == 0) {
      d /= 2;
      num *= 5;
      pow10 *= 10;
    }
    while (d % 5 == 0) {
      d /= 5;
      num *= 2;
      pow10 *= 10;
    }
    i128 whole = num / pow10;
    i128 frac = num % pow10;
    std::string digits;
    i128 scale = pow10 / 10;
    while (scale > 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(frac / scale)));
      frac %= scale;
      scale /= 10;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out = num_ < 0 ? "-" : "";
    i64 w = static_cast<i64>(whole);
    out += std::to_string(w);
    out += '.';
    out += digits;
    return out;
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw OverflowError("rational: negate");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  i128 num = i128{num_} * rhs.den_ + i128{rhs.num_} * den_;
  i128 den = i128{den_} * rhs.den_;
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = checked_narrow(num, "rational: add");
  den_ = checked_narrow(den, "rational: add");
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  i128 num = i128{num_} * rhs.den_ - i128{rhs.num_} * den_;
  i128 den = i128{den_} * rhs.den_;
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = checked_narrow(num, "rational: subtract");
  den_ = checked_narrow(den, "rational: subtract");
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  i128 num = i128{num_} * rhs.num_;
  i128 den = i128{den_} * rhs.den_;
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = checked_narrow(num, "rational: multiply");
  den_ = checked_narrow(den, "rational: multiply");
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw InputError("rational: divide by zero");
  i128 num = i128{num_} * rhs.den_;
  i128 den = i128{den_} * rhs.num_;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = checked_narrow(num, "rational: divide");
  den_ = checked_narrow(den, "rational: divide");
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return i128{a.num_} * b.den_ < i128{b.num_} * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace efx
