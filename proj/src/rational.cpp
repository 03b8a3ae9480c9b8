// Copyright 2026 The phasecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phasecomp/rational.hpp"

#include <cctype>

#include "phasecomp/errors.hpp"

namespace phasecomp {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  auto digits = [&](std::string& out) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
    if (i == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", i + 1);
  };
  std::string num, den = "1";
  digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    digits(den);
  }
  if (i != text.size()) throw ParseError("unexpected character in rational '" + std::string(text) + "'", i + 1);
  const BigInt d(den);
  if (d.is_zero()) throw ParseError("zero denominator in rational '" + std::string(text) + "'", i);
  Rational r(BigInt(num), d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace phasecomp
