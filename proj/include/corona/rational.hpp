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

#ifndef CORONA_RATIONAL_HPP_
#define CORONA_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <variant>

namespace corona {

// Exact arbitrary-precision rational. cpp_rational keeps the canonical form
// (reduced fraction, positive denominator) after every operation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline Rational rat_abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }
inline const Rational& rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

double to_double(const Rational& a);

// Canonical text form: "p/q" when q != 1, plain integer otherwise.
std::string to_string(const Rational& a);

// Accepts "p/q", plain integers, and decimal literals ("0.3" -> 3/10).
// Decimal parsing is exact so CLI inputs never contaminate exact backends.
std::optional<Rational> parse_rational(const std::string& text);

// A metric value: exact rational on exact spaces, double on planar spaces.
// Arithmetic stays within a kind; mixing promotes to double explicitly.
class Num {
 public:
  Num() : v_(Rational(0)) {}
  Num(Rational r) : v_(std::move(r)) {}  // NOLINT(runtime/explicit)
  Num(double d) : v_(d) {}               // NOLINT(runtime/explicit)

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  double as_double() const {
    return is_exact() ? to_double(std::get<Rational>(v_)) : std::get<double>(v_);
  }

  Num operator+(const Num& o) const { return binop(o, [](auto a, auto b) { return a + b; }); }
  Num operator-(const Num& o) const { return binop(o, [](auto a, auto b) { return a - b; }); }
  Num operator*(const Num& o) const { return binop(o, [](auto a, auto b) { return a * b; }); }
  Num operator/(const Num& o) const { return binop(o, [](auto a, auto b) { return a / b; }); }

  bool operator==(const Num& o) const {
    if (is_exact() && o.is_exact()) return rational() == o.rational();
    return as_double() == o.as_double();
  }
  bool operator<(const Num& o) const {
    if (is_exact() && o.is_exact()) return rational() < o.rational();
    return as_double() < o.as_double();
  }
  bool operator<=(const Num& o) const { return *this < o || *this == o; }
  bool operator>(const Num& o) const { return o < *this; }
  bool operator>=(const Num& o) const { return o <= *this; }

  std::string str() const;

 private:
  template <typename F>
  Num binop(const Num& o, F f) const {
    if (is_exact() && o.is_exact()) return Num(Rational(f(rational(), o.rational())));
    return Num(f(as_double(), o.as_double()));
  }

  std::variant<Rational, double> v_;
};

// Fixed 12-significant-digit formatting used by every report writer.
std::string format_double(double d);

}  // namespace corona

#endif  // CORONA_RATIONAL_HPP_
