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

#include "corona/rational.hpp"

#include <cctype>
#include <cstdio>

namespace corona {

double to_double(const Rational& a) { return a.convert_to<double>(); }

std::string to_string(const Rational& a) {
  std::string n = numerator(a).str();
  if (denominator(a) == 1) return n;
  return n + "/" + denominator(a).str();
}

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    return Rational(BigInt(num), d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!is_integer_text(whole)) return std::nullopt;
    if (frac.empty()) return Rational(BigInt(whole));
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w(whole);
    BigInt f(frac);
    bool neg = text[0] == '-';  // sign lives in the text; "-0.5" has whole "-0"
    BigInt w_abs = w < 0 ? BigInt(-w) : w;
    BigInt num = w_abs * scale + f;
    if (neg) num = -num;
    return Rational(num, scale);
  }
  if (!is_integer_text(text)) return std::nullopt;
  return Rational(BigInt(text));
}

std::string Num::str() const {
  return is_exact() ? to_string(rational()) : format_double(as_double());
}

std::string format_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", d);
  return buf;
}

}  // namespace corona
