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

#include <random>

#include "doctest.h"
#include "lrsched/ext_value.hpp"
#include "test_support.hpp"

using namespace lrsched;
using lrsched::testing::q;

TEST_CASE("parse_rational canonicalises") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4/2") == q(-2));
  CHECK(parse_rational("+7") == q(7));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("to_decimal renders six places") {
  CHECK(to_decimal(q(8, 3)) == "2.666667");
  CHECK(to_decimal(q(200, 51)) == "3.921569");
  CHECK(to_decimal(q(2)) == "2.000000");
}

TEST_CASE("ExtValue basics") {
  CHECK(ExtValue().is_zero());
  CHECK(ExtValue(3).str() == "3");
  CHECK(ExtValue(q(6, 4)).str() == "3/2");
  CHECK(ExtValue::infinity().str() == "inf");
  CHECK(ExtValue::parse("inf").is_infinite());
  CHECK(ExtValue::parse("2/4") == ExtValue(q(1, 2)));
  CHECK_THROWS_AS(ExtValue(-1), std::domain_error);
  CHECK_THROWS_AS(ExtValue(q(-1, 2)), std::domain_error);
  CHECK_THROWS_AS((void)ExtValue::infinity().value(), std::logic_error);
}

TEST_CASE("infinity absorbs addition and survives subtraction") {
  const ExtValue inf = ExtValue::infinity();
  CHECK((inf + ExtValue(5)).is_infinite());
  CHECK((ExtValue(5) + inf).is_infinite());
  CHECK((inf - q(1000)).is_infinite());
  CHECK(inf == ExtValue::infinity());
  CHECK(ExtValue(1000000) < inf);
}

TEST_CASE("finite subtraction below zero throws") {
  CHECK_THROWS_AS(ExtValue(1) - q(2), std::domain_error);
  CHECK((ExtValue(2) - q(2)).is_zero());
}

TEST_CASE("multiplication by a rational factor") {
  CHECK(ExtValue(3) * q(1, 3) == ExtValue(1));
  CHECK((ExtValue::infinity() * q(2)).is_infinite());
}

TEST_CASE("(a - b) + b == a and ordering is total on random values") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(0, 500);
  std::uniform_int_distribution<long> den(1, 40);
  for (int i = 0; i < 2000; ++i) {
    ExtValue a(q(num(rng), den(rng)));
    ExtValue b(q(num(rng), den(rng)));
    if (a < b) std::swap(a, b);
    CHECK((a - b.value()) + b == a);
    const bool lt = a < b, eq = a == b, gt = a > b;
    CHECK(static_cast<int>(lt) + static_cast<int>(eq) + static_cast<int>(gt) == 1);
    CHECK(a < ExtValue::infinity());
  }
}
