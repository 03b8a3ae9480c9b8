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

#include "phasecomp/tokens.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "phasecomp/errors.hpp"

namespace phasecomp {

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const Polynomial& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<long>(i);
  }
  return -1;
}

Rational factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Polynomial scaled(Polynomial p, const Rational& c) {
  for (auto& x : p) x *= c;
  trim(p);
  return p;
}

Polynomial linear(const Rational& constant) { return Polynomial{constant, Rational(1)}; }

// Binomial-type polynomial p_n for a built-in family.
Polynomial binomial_member(std::string_view family, std::size_t n, const std::vector<Rational>& params) {
  Polynomial p{Rational(1)};
  if (n == 0) return p;
  if (family == "exponential-monomial") {
    for (std::size_t i = 0; i < n; ++i) p = multiply(p, linear(0));
  } else if (family == "falling-factorial") {
    for (std::size_t i = 0; i < n; ++i) p = multiply(p, linear(-Rational(i)));
  } else if (family == "rising-factorial") {
    for (std::size_t i = 0; i < n; ++i) p = multiply(p, linear(Rational(i)));
  } else if (family == "abel") {
    const Rational shift = -params.at(0) * Rational(n);
    p = linear(0);
    for (std::size_t i = 1; i < n; ++i) p = multiply(p, linear(shift));
  }
  return p;
}

std::string monomial(std::size_t i, std::size_t j) {
  return "x^" + std::to_string(i) + "*y^" + std::to_string(j);
}

using Bivariate = std::vector<std::vector<Rational>>;  // [i][j] is the x^i y^j coefficient

Bivariate zero_bivariate(std::size_t n) { return Bivariate(n + 1, std::vector<Rational>(n + 1, Rational(0))); }

const Rational& coeff(const Polynomial& p, std::size_t i) {
  static const Rational zero(0);
  return i < p.size() ? p[i] : zero;
}

// Expands f_n(x+y) using (x+y)^m = sum C(m,i) x^i y^(m-i).
Bivariate shifted(const Polynomial& f, std::size_t n) {
  Bivariate out = zero_bivariate(std::max<std::size_t>(n, f.size()));
  for (std::size_t m = 0; m < f.size(); ++m) {
    if (f[m] == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) out[i][m - i] += f[m] * binomial(m, i);
  }
  return out;
}

void compare(const Bivariate& lhs, const Bivariate& rhs, std::size_t n, VerificationReport& report) {
  const std::size_t size = std::max(lhs.size(), rhs.size());
  auto at = [](const Bivariate& b, std::size_t i, std::size_t j) -> Rational {
    return i < b.size() && j < b[i].size() ? b[i][j] : Rational(0);
  };
  // Ordered by total degree, then by the power of x.
  for (std::size_t total = 0; total < 2 * size; ++total) {
    for (std::size_t i = 0; i <= total; ++i) {
      const std::size_t j = total - i;
      Rational l = at(lhs, i, j), r = at(rhs, i, j);
      if (l != r) {
        report.pass = false;
        report.failures.push_back({n, monomial(i, j), l, r});
        return;
      }
    }
  }
}

bool check_degree(const PolySeq& seq, std::size_t n, VerificationReport& report) {
  if (degree(seq.polys[n]) == static_cast<long>(n)) return true;
  report.pass = false;
  report.failures.push_back({n, "degree", Rational(degree(seq.polys[n])), Rational(static_cast<long>(n))});
  return false;
}

VerificationReport verify(const PolySeq& seq, std::size_t max_n, bool with_binomial_weights) {
  if (seq.polys.size() <= max_n) {
    throw std::invalid_argument("sequence '" + seq.family + "' holds degrees up to " +
                                std::to_string(seq.max_degree()) + ", need " + std::to_string(max_n));
  }
  VerificationReport report;
  report.family = seq.family;
  report.n_max = max_n;
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (!check_degree(seq, n, report)) continue;
    const Bivariate lhs = shifted(seq.polys[n], n);
    std::size_t width = n;
    for (std::size_t k = 0; k <= n; ++k) width = std::max(width, seq.polys[k].size());
    Bivariate rhs = zero_bivariate(width);
    for (std::size_t k = 0; k <= n; ++k) {
      // Token: q_k(y) q_{n-k}(x). Binomial: C(n,k) p_k(x) p_{n-k}(y).
      const Polynomial& in_x = with_binomial_weights ? seq.polys[k] : seq.polys[n - k];
      const Polynomial& in_y = with_binomial_weights ? seq.polys[n - k] : seq.polys[k];
      const Rational weight = with_binomial_weights ? binomial(n, k) : Rational(1);
      for (std::size_t i = 0; i < in_x.size(); ++i) {
        if (in_x[i] == 0) continue;
        for (std::size_t j = 0; j < in_y.size(); ++j) rhs[i][j] += weight * in_x[i] * in_y[j];
      }
    }
    compare(lhs, rhs, n, report);
  }
  return report;
}

PolySeq rescaled(const PolySeq& seq, bool multiply_by_factorial, SeqNormalization target) {
  PolySeq out = seq;
  out.normalization = target;
  for (std::size_t n = 0; n < out.polys.size(); ++n) {
    const Rational f = factorial(n);
    out.polys[n] = scaled(out.polys[n], multiply_by_factorial ? f : Rational(1) / f);
  }
  return out;
}

}  // namespace

PolySeq standard_token(std::string_view family, std::size_t max_degree, std::vector<Rational> params) {
  const bool known = family == "exponential-monomial" || family == "falling-factorial" ||
                     family == "rising-factorial" || family == "abel";
  if (!known) throw std::invalid_argument("unknown polynomial family '" + std::string(family) + "'");
  const std::size_t arity = family == "abel" ? 1 : 0;
  if (params.size() != arity) {
    throw std::invalid_argument("family '" + std::string(family) + "' takes " + std::to_string(arity) +
                                " parameter(s), got " + std::to_string(params.size()));
  }
  PolySeq seq;
  seq.family = std::string(family);
  seq.params = std::move(params);
  seq.normalization = SeqNormalization::token;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    seq.polys.push_back(scaled(binomial_member(family, n, seq.params), Rational(1) / factorial(n)));
  }
  return seq;
}

VerificationReport verify_token_identity(const PolySeq& seq, std::size_t max_n) { return verify(seq, max_n, false); }

VerificationReport verify_binomial_identity(const PolySeq& seq, std::size_t max_n) {
  return verify(seq, max_n, true);
}

PolySeq binomial_from_token(const PolySeq& seq) { return rescaled(seq, true, SeqNormalization::binomial); }

PolySeq token_from_binomial(const PolySeq& seq) { return rescaled(seq, false, SeqNormalization::token); }

HSymbol h_symbol_coeffs(const PolySeq& seq, std::size_t truncation) {
  if (seq.polys.size() <= truncation) {
    throw std::invalid_argument("h symbol needs degrees up to " + std::to_string(truncation));
  }
  HSymbol h;
  h.truncation = truncation;
  for (std::size_t k = 0; k <= truncation; ++k) h.coeffs.push_back(coeff(seq.polys[k], 1));
  return h;
}

PolySeq parse_coefficient_table(std::string_view csv, std::string family) {
  PolySeq seq;
  seq.family = std::move(family);
  std::istringstream in{std::string(csv)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::istringstream row(raw);
    for (std::string cell; std::getline(row, cell, ',');) {
      auto b = cell.find_first_not_of(" \t"), e = cell.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (seq.polys.empty() && !cells.empty() && cells[0] == "n") continue;
    if (cells.size() < 2) throw ParseError("line " + std::to_string(line) + ": expected n,c0,...", line);
    try {
      const Rational n = parse_rational(cells[0]);
      if (n != Rational(static_cast<long>(seq.polys.size()))) {
        throw ParseError("line " + std::to_string(line) + ": expected n=" + std::to_string(seq.polys.size()), line);
      }
      Polynomial p;
      for (std::size_t i = 1; i < cells.size(); ++i) p.push_back(parse_rational(cells[i]));
      trim(p);
      seq.polys.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).starts_with("line ") ? e.what()
                                                                   : "line " + std::to_string(line) + ": " + e.what(),
                       line);
    }
  }
  if (seq.polys.empty()) throw ParseError("coefficient table is empty", line == 0 ? 1 : line);
  return seq;
}

}  // namespace phasecomp
