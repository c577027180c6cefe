// Copyright 2026 The lrsched Authors
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

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lrsched {

using Rational = mpq_class;

/// Parses "a", "a/b" (optionally signed) into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& q);

/// Six-decimal rendering, for human consumption only.
std::string to_decimal(const Rational& q, int digits = 6);

/// A non-negative exact rational or +infinity.
///
/// Infinity absorbs addition and survives subtraction of any finite amount.
/// Finite subtraction that would go negative throws std::domain_error: cost
/// residuals must stay non-negative in every algorithm state.
class ExtValue {
 public:
  ExtValue() = default;
  ExtValue(long v);  // NOLINT(google-explicit-constructor)
  explicit ExtValue(Rational q);

  static ExtValue infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }

  /// Finite value; throws std::logic_error on infinity.
  const Rational& value() const;

  ExtValue& operator+=(const ExtValue& rhs);
  ExtValue& operator-=(const Rational& rhs);

  friend ExtValue operator+(ExtValue lhs, const ExtValue& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ExtValue operator-(ExtValue lhs, const Rational& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ExtValue operator*(const ExtValue& lhs, const Rational& factor);

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend std::strong_ordering operator<=>(const ExtValue& a,
                                          const ExtValue& b);

  /// "inf", "a" or "a/b".
  std::string str() const;
  static ExtValue parse(std::string_view text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace lrsched
