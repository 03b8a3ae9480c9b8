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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace phasecomp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative dyadic rational num / 2^scale.
///
/// The representation is canonical: either scale == 0 or num is odd, so every
/// value has exactly one (num, scale) pair and zero is (0, 0). This is the
/// coordinate that a tape-plus-head configuration is encoded into, with the
/// binary point immediately right of the current cell.
class Dyadic {
 public:
  Dyadic() = default;
  explicit Dyadic(std::uint64_t integer) : num_(integer) {}
  /// Builds num / 2^scale and canonicalizes. Throws UnderflowError on num < 0.
  Dyadic(BigInt num, std::uint64_t scale);

  const BigInt& num() const noexcept { return num_; }
  std::uint64_t scale() const noexcept { return scale_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Head moves left: d / 2.
  Dyadic halve() const;
  /// Head moves right: 2 d.
  Dyadic twice() const;
  /// Writes a 1 into an empty current cell: d + 1.
  Dyadic add_one() const;
  /// Clears a marked current cell: d - 1. Throws UnderflowError if d < 1.
  Dyadic sub_one() const;
  /// floor(d) mod 2, i.e. the current cell.
  int current_bit() const;
  /// floor(d).
  BigInt floor() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  /// Throws UnderflowError if b > a.
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  BigInt num_{0};
  std::uint64_t scale_ = 0;
};

/// Parses `[01]+ "." [01]*`. Leading and trailing zeros are accepted.
/// Throws ParseError carrying the 1-based column of the first bad character.
Dyadic parse_dyadic(std::string_view text);

/// Canonical binary literal: "0." for zero, no leading zeros, no trailing
/// fractional zeros, integers end in ".".
std::string format_dyadic(const Dyadic& d);

/// A signed dyadic increment, as carried by the tape half of a Hamiltonian
/// field. Applying a negative increment larger than the value underflows.
struct SignedDyadic {
  bool negative = false;
  Dyadic magnitude;

  static SignedDyadic plus(Dyadic d) { return {false, std::move(d)}; }
  static SignedDyadic minus(Dyadic d) { return {!d.is_zero(), std::move(d)}; }

  bool is_zero() const noexcept { return magnitude.is_zero(); }
  Dyadic apply_to(const Dyadic& base) const;

  friend bool operator==(const SignedDyadic&, const SignedDyadic&) = default;
};

std::string format_signed_dyadic(const SignedDyadic& d);

}  // namespace phasecomp
