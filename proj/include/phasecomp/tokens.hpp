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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasecomp/rational.hpp"

namespace phasecomp {

/// Dense coefficients, index i holds the coefficient of x^i. Trailing zeros
/// are trimmed so the zero polynomial is empty.
using Polynomial = std::vector<Rational>;

void trim(Polynomial& p);
/// -1 for the zero polynomial.
long degree(const Polynomial& p);

enum class SeqNormalization { token, binomial };

/// Polynomials q_0..q_N of one family. As a token, q_n(x+y) = sum_k
/// q_k(y) q_{n-k}(x); as a binomial-type sequence p_n = n! q_n.
struct PolySeq {
  std::string family;
  std::vector<Rational> params;
  SeqNormalization normalization = SeqNormalization::token;
  std::vector<Polynomial> polys;

  std::size_t max_degree() const { return polys.empty() ? 0 : polys.size() - 1; }
};

/// Known families: "exponential-monomial", "falling-factorial",
/// "rising-factorial" and "abel" (one parameter a, p_n = x (x - a n)^{n-1}).
/// Returned in token normalization. Throws std::invalid_argument for an
/// unknown family or a wrong parameter count.
PolySeq standard_token(std::string_view family, std::size_t max_degree, std::vector<Rational> params = {});

struct IdentityFailure {
  std::size_t n = 0;
  /// "x^i*y^j", or "degree" when deg q_n != n.
  std::string monomial;
  Rational lhs;
  Rational rhs;
};

struct VerificationReport {
  std::string family;
  std::size_t n_max = 0;
  bool pass = true;
  /// At most one entry per n: the first differing monomial.
  std::vector<IdentityFailure> failures;
};

/// Exact bivariate comparison of q_n(x+y) with sum_k q_k(y) q_{n-k}(x) for
/// n <= max_n. Throws std::invalid_argument if the sequence is too short.
VerificationReport verify_token_identity(const PolySeq& seq, std::size_t max_n);
/// p_n(x+y) = sum_k C(n,k) p_k(x) p_{n-k}(y) for n <= max_n.
VerificationReport verify_binomial_identity(const PolySeq& seq, std::size_t max_n);

PolySeq binomial_from_token(const PolySeq& seq);
PolySeq token_from_binomial(const PolySeq& seq);

/// q_0'(0), ..., q_K'(0): the coefficients of the symbol h(p) = sum_k
/// q_k'(0) e^{ipk}, truncated after index `truncation`.
struct HSymbol {
  std::size_t truncation = 0;
  std::vector<Rational> coeffs;
};
HSymbol h_symbol_coeffs(const PolySeq& seq, std::size_t truncation);

/// Reads `n,c0,c1,...` rows (rationals as a/b) into a token sequence. An
/// optional header row starting with "n" is skipped; rows must list n = 0,
/// 1, 2, ... in order. Throws ParseError with the line number.
PolySeq parse_coefficient_table(std::string_view csv, std::string family = "table");

Rational factorial(std::size_t n);
Rational binomial(std::size_t n, std::size_t k);

}  // namespace phasecomp
