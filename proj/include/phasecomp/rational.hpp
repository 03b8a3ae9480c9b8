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

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace phasecomp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always coprime with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "a", "a/b", optionally signed. Throws ParseError with a column.
Rational parse_rational(std::string_view text);
/// "a/b", or "a" when the denominator is 1.
std::string format_rational(const Rational& r);

}  // namespace phasecomp
