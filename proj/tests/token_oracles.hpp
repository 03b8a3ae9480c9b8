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
#include <vector>

#include "phasecomp/rational.hpp"
#include "phasecomp/tokens.hpp"

namespace phasecomp::testing {

/// A product c * prod (x - root_i), kept in factored form.
struct FactoredPoly {
  Rational scale;
  std::vector<Rational> roots;

  Rational eval(const Rational& x) const {
    Rational v = scale;
    for (const auto& r : roots) v *= x - r;
    return v;
  }
  /// Derivative at x by the product rule, without expanding.
  Rational derivative_at(const Rational& x) const {
    Rational sum = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Rational term = scale;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != i) term *= x - roots[j];
      }
      sum += term;
    }
    return sum;
  }
};

/// Token member k of a built-in family in factored form.
inline FactoredPoly factored_token(const std::string& family, std::size_t k, const Rational& a = 1) {
  FactoredPoly f{Rational(1) / factorial(k), {}};
  for (std::size_t i = 0; i < k; ++i) {
    if (family == "exponential-monomial") f.roots.push_back(0);
    else if (family == "falling-factorial") f.roots.push_back(Rational(static_cast<long>(i)));
    else if (family == "rising-factorial") f.roots.push_back(-Rational(static_cast<long>(i)));
    else if (family == "abel") f.roots.push_back(i == 0 ? Rational(0) : a * Rational(static_cast<long>(k)));
  }
  return f;
}

inline Rational eval(const Polynomial& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

}  // namespace phasecomp::testing
