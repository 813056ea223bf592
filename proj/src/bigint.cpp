// Copyright 2026 The sparse_interp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sparse_interp/bigint.hpp"

#include <cctype>
#include <limits>

#include "sparse_interp/errors.hpp"

namespace sparse_interp {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw UsageError("expected a nonnegative integer");
  BigInt value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("not a nonnegative integer: " + std::string(text));
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string to_string(const BigInt& value) { return value.str(); }

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator: " + std::string(text));
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    BigInt num = whole.empty() ? BigInt(0) : parse_bigint(whole);
    BigInt den = 1;
    if (!frac.empty()) {
      BigInt f = parse_bigint(frac);
      for (std::size_t i = 0; i < frac.size(); ++i) {
        num *= 10;
        den *= 10;
      }
      num += f;
    } else if (whole.empty()) {
      throw UsageError("not a number: " + std::string(text));
    }
    return Rational(num, den);
  }
  return Rational(parse_bigint(text));
}

std::string to_string(const Rational& value) { return value.str(); }

u64 mod_u64(const BigInt& value, u64 modulus) {
  if (modulus == 0) throw UsageError("modulus must be positive");
  return static_cast<u64>(value % modulus);
}

u64 to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<u64>::max()) {
    throw BoundViolation("value does not fit in 64 bits: " + value.str());
  }
  return static_cast<u64>(value);
}

u64 ceil_log(const BigInt& base, const BigInt& target) {
  if (base < 2) throw UsageError("ceil_log: base must be at least 2");
  u64 k = 0;
  BigInt power = 1;
  while (power < target) {
    power *= base;
    ++k;
  }
  return k;
}

}  // namespace sparse_interp
