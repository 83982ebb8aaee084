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

#ifndef EFX_RATIONAL_HPP_
#define EFX_RATIONAL_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace efx {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Cost comparisons in this library decide set membership (ties matter), so
/// costs are never floats. Values are kept canonical: denominator positive,
/// gcd(num, den) == 1. Arithmetic runs through 128-bit intermediates and
/// throws OverflowError if a reduced result does not fit; comparisons never
/// overflow.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "123", "0.25", "7.", ".5". No sign, no exponent. Exact.
  static Rational from_decimal(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  /// Shortest decimal form when the denominator is 2^a * 5^b, e.g. "0.25";
  /// plain integer text when integral. Other denominators return "p/q".
  std::string to_string() const;
  /// True iff to_string() yields integer or decimal text (den = 2^a * 5^b).
  bool has_finite_decimal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace efx

#endif  // EFX_RATIONAL_HPP_
