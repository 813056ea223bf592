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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sparse_interp {

using u64 = std::uint64_t;

// Exponents and degree bounds are unbounded: Kronecker packing raises the
// degree bound to D^n.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Decimal digits only, no sign. Throws UsageError otherwise.
BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

// Accepts "a", "a/b" and plain decimals such as "0.05" exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

u64 mod_u64(const BigInt& value, u64 modulus);

// Checked narrowing; throws BoundViolation when value does not fit.
u64 to_u64(const BigInt& value);

// Smallest k >= 0 with base^k >= target. base >= 2.
u64 ceil_log(const BigInt& base, const BigInt& target);

}  // namespace sparse_interp
