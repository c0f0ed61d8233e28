// Copyright 2026 The corona-lab Authors
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

#include "corona/rational.hpp"

using namespace corona;

TEST_CASE("rationals stay in canonical reduced form") {
  Rational a(6, -8);
  CHECK(numerator(a) == -3);
  CHECK(denominator(a) == 4);
  CHECK(to_string(a) == "-3/4");
  CHECK(to_string(Rational(10, 5)) == "2");
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == 1);
  CHECK(rat_abs(Rational(-7, 2)) == Rational(7, 2));
  CHECK(rat_min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
  CHECK(rat_max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
}

TEST_CASE("parse_rational accepts p/q, integers and exact decimals") {
  CHECK(*parse_rational("3/10") == Rational(3, 10));
  CHECK(*parse_rational("-6/4") == Rational(-3, 2));
  CHECK(*parse_rational("42") == 42);
  CHECK(*parse_rational("0.3") == Rational(3, 10));
  CHECK(*parse_rational("-0.25") == Rational(-1, 4));
  CHECK(*parse_rational("1.") == 1);
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("abc").has_value());
  CHECK(!parse_rational("1.2.3").has_value());
  CHECK(!parse_rational("").has_value());
}

TEST_CASE("Num keeps exact values exact and compares across kinds") {
  Num a{Rational(1, 3)};
  Num b{Rational(1, 3)};
  CHECK(a == b);
  CHECK(a.is_exact());
  CHECK((a + b).rational() == Rational(2, 3));
  Num c{0.5};
  CHECK(!c.is_exact());
  CHECK(a < c);
  CHECK((a * Num{Rational(3)}).rational() == 1);
  CHECK(Num{Rational(1, 2)}.str() == "1/2");
}

TEST_CASE("format_double prints 12 significant digits") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
}
