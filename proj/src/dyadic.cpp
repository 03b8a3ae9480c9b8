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

#include "phasecomp/dyadic.hpp"

#include <algorithm>

#include "phasecomp/errors.hpp"

namespace phasecomp {

Dyadic::Dyadic(BigInt num, std::uint64_t scale) : num_(std::move(num)), scale_(scale) {
  if (num_ < 0) throw UnderflowError("dyadic values are nonnegative");
  canonicalize();
}

void Dyadic::canonicalize() {
  if (num_.is_zero()) {
    scale_ = 0;
    return;
  }
  if (scale_ == 0) return;
  const std::uint64_t shift = std::min<std::uint64_t>(boost::multiprecision::lsb(num_), scale_);
  num_ >>= shift;
  scale_ -= shift;
}

Dyadic Dyadic::halve() const {
  Dyadic r = *this;
  if (r.num_.is_zero()) return r;
  if (r.scale_ == 0 && !bit_test(r.num_, 0)) {
    r.num_ >>= 1;
  } else {
    ++r.scale_;
  }
  return r;
}

Dyadic Dyadic::twice() const {
  Dyadic r = *this;
  if (r.scale_ > 0) {
    --r.scale_;
  } else {
    r.num_ <<= 1;
  }
  return r;
}

Dyadic Dyadic::add_one() const {
  Dyadic r = *this;
  r.num_ += BigInt(1) << r.scale_;
  return r;
}

Dyadic Dyadic::sub_one() const {
  const BigInt unit = BigInt(1) << scale_;
  if (num_ < unit) throw UnderflowError("cannot subtract 1 from " + format_dyadic(*this));
  Dyadic r = *this;
  r.num_ -= unit;
  r.canonicalize();
  return r;
}

BigInt Dyadic::floor() const { return num_ >> scale_; }

int Dyadic::current_bit() const {
  if (scale_ == 0) return bit_test(num_, 0) ? 1 : 0;
  return bit_test(num_, static_cast<unsigned>(scale_)) ? 1 : 0;
}

namespace {

// Numerators of a and b over the common denominator 2^max(scale).
std::pair<BigInt, BigInt> aligned(const Dyadic& a, const Dyadic& b, std::uint64_t& scale) {
  scale = std::max(a.scale(), b.scale());
  return {a.num() << (scale - a.scale()), b.num() << (scale - b.scale())};
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::uint64_t scale = 0;
  auto [x, y] = aligned(a, b, scale);
  return Dyadic(x + y, scale);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  std::uint64_t scale = 0;
  auto [x, y] = aligned(a, b, scale);
  if (x < y) {
    throw UnderflowError(format_dyadic(a) + " - " + format_dyadic(b) + " is negative");
  }
  return Dyadic(x - y, scale);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::uint64_t scale = 0;
  auto [x, y] = aligned(a, b, scale);
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic parse_dyadic(std::string_view text) {
  if (text.empty()) throw ParseError("empty dyadic literal", 1);
  BigInt num = 0;
  std::uint64_t scale = 0;
  bool seen_point = false;
  std::size_t integer_digits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const std::size_t column = i + 1;
    if (c == '.') {
      if (seen_point) throw ParseError("second binary point in dyadic literal", column);
      if (integer_digits == 0) throw ParseError("dyadic literal needs a digit before the point", column);
      seen_point = true;
      continue;
    }
    if (c != '0' && c != '1') {
      throw ParseError(std::string("unexpected character '") + c + "' in dyadic literal", column);
    }
    num <<= 1;
    if (c == '1') num |= 1;
    if (seen_point) {
      ++scale;
    } else {
      ++integer_digits;
    }
  }
  if (!seen_point) throw ParseError("dyadic literal must contain a binary point", text.size() + 1);
  return Dyadic(std::move(num), scale);
}

std::string format_dyadic(const Dyadic& d) {
  std::string out;
  const BigInt integer = d.floor();
  if (integer.is_zero()) {
    out = "0";
  } else {
    const unsigned top = boost::multiprecision::msb(integer);
    out.reserve(top + 2 + d.scale());
    for (unsigned i = top + 1; i-- > 0;) out.push_back(bit_test(integer, i) ? '1' : '0');
  }
  out.push_back('.');
  for (std::uint64_t i = d.scale(); i-- > 0;) {
    out.push_back(bit_test(d.num(), static_cast<unsigned>(i)) ? '1' : '0');
  }
  return out;
}

Dyadic SignedDyadic::apply_to(const Dyadic& base) const {
  return negative ? base - magnitude : base + magnitude;
}

std::string format_signed_dyadic(const SignedDyadic& d) {
  return (d.negative ? "-" : "") + format_dyadic(d.magnitude);
}

}  // namespace phasecomp
