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

#include "lrsched/ext_value.hpp"

#include <sstream>
#include <stdexcept>

namespace lrsched {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  const mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q{mpz_class{n}, d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  mpf_class f(q, 256);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << f;
  return os.str();
}

ExtValue::ExtValue(long v) : value_(v) {
  if (v < 0) throw std::domain_error("ExtValue must be non-negative");
}

ExtValue::ExtValue(Rational q) : value_(std::move(q)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::domain_error("ExtValue must be non-negative");
}

ExtValue ExtValue::infinity() {
  ExtValue v;
  v.infinite_ = true;
  return v;
}

const Rational& ExtValue::value() const {
  if (infinite_) throw std::logic_error("value() of infinite ExtValue");
  return value_;
}

ExtValue& ExtValue::operator+=(const ExtValue& rhs) {
  if (infinite_) return *this;
  if (rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += rhs.value_;
  return *this;
}

ExtValue& ExtValue::operator-=(const Rational& rhs) {
  if (infinite_) return *this;
  value_ -= rhs;
  if (sgn(value_) < 0) {
    throw std::domain_error("ExtValue subtraction went negative");
  }
  return *this;
}

ExtValue operator*(const ExtValue& lhs, const Rational& factor) {
  if (sgn(factor) < 0) throw std::domain_error("negative scale factor");
  if (lhs.infinite_) {
    return sgn(factor) == 0 ? ExtValue{} : ExtValue::infinity();
  }
  return ExtValue(Rational(lhs.value_ * factor));
}

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtValue::str() const {
  return infinite_ ? std::string("inf") : to_string(value_);
}

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtValue(parse_rational(text));
}

}  // namespace lrsched
