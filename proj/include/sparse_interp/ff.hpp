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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sparse_interp/bigint.hpp"
#include "sparse_interp/rng.hpp"

namespace sparse_interp {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(u64 n);

// F_q for a prime q < 2^62. Residues are plain u64 values in [0, q).
class PrimeField {
 public:
  static constexpr u64 kMaxModulus = u64{1} << 62;

  explicit PrimeField(u64 q);

  u64 modulus() const { return q_; }

  u64 reduce(u64 x) const { return x % q_; }
  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= q_ ? r - q_ : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : q_ - a; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % q_);
  }
  u64 pow(u64 a, u64 e) const;
  u64 pow(u64 a, const BigInt& e) const;
  // Throws DivisionByZero for a == 0.
  u64 inv(u64 a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  u64 q_;
};

class FieldElement {
 public:
  FieldElement(PrimeField field, u64 value)
      : field_(field), value_(field.reduce(value)) {}

  const PrimeField& field() const { return field_; }
  u64 value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(const BigInt& e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  PrimeField field_;
  u64 value_;
};

class ExtField;
class ExtFieldElement;
using ExtFieldPtr = std::shared_ptr<const ExtField>;

// F_{q^s} = F_q[y] / <m(y)> with m monic irreducible of degree s.
//
// Elements are residue vectors of length s (coefficients of y^0 .. y^{s-1}).
// The span kernels below operate on that layout directly so dense containers
// (CyclicPoly) can store many elements contiguously.
class ExtField : public std::enable_shared_from_this<ExtField> {
  struct Token {};

 public:
  // modulus holds s + 1 coefficients, lowest degree first, and must be monic
  // and irreducible. Throws UsageError otherwise.
  static ExtFieldPtr create(PrimeField base, std::vector<u64> modulus);
  // The degree-1 field F_q itself, with modulus y.
  static ExtFieldPtr prime(PrimeField base);

  ExtField(Token, PrimeField base, std::vector<u64> modulus);

  const PrimeField& base() const { return base_; }
  std::size_t degree() const { return s_; }
  std::span<const u64> modulus() const { return modulus_; }
  // q^s
  BigInt order() const;

  // Same base prime and same modulus.
  bool same_as(const ExtField& other) const;

  bool is_zero(std::span<const u64> a) const;
  void add(std::span<const u64> a, std::span<const u64> b,
           std::span<u64> out) const;
  void sub(std::span<const u64> a, std::span<const u64> b,
           std::span<u64> out) const;
  void neg(std::span<const u64> a, std::span<u64> out) const;
  // out may alias a or b.
  void mul(std::span<const u64> a, std::span<const u64> b,
           std::span<u64> out) const;
  // acc += a * b
  void mul_add(std::span<u64> acc, std::span<const u64> a,
               std::span<const u64> b) const;
  // acc += c * a for a base-field scalar c.
  void scale_add(std::span<u64> acc, u64 c, std::span<const u64> a) const;

  ExtFieldElement zero() const;
  ExtFieldElement one() const;
  ExtFieldElement embed(u64 base_value) const;
  ExtFieldElement element(std::vector<u64> coeffs) const;

 private:
  PrimeField base_;
  std::size_t s_;
  std::vector<u64> modulus_;
};

class ExtFieldElement {
 public:
  // Reduces every coefficient mod q. coeffs.size() must equal the degree.
  ExtFieldElement(ExtFieldPtr field, std::vector<u64> coeffs);

  const ExtFieldPtr& field() const { return field_; }
  std::span<const u64> coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Throws DivisionByZero for zero.
  ExtFieldElement inv() const;
  // Square-and-multiply; 0^0 = 1.
  ExtFieldElement pow(const BigInt& e) const;

  // s little-endian 8-byte residues.
  std::string encode() const;

  friend ExtFieldElement operator+(const ExtFieldElement& a,
                                   const ExtFieldElement& b);
  friend ExtFieldElement operator-(const ExtFieldElement& a,
                                   const ExtFieldElement& b);
  friend ExtFieldElement operator*(const ExtFieldElement& a,
                                   const ExtFieldElement& b);
  friend ExtFieldElement operator-(const ExtFieldElement& a);
  friend bool operator==(const ExtFieldElement& a, const ExtFieldElement& b);

 private:
  ExtFieldPtr field_;
  std::vector<u64> coeffs_;
};

// Maps c into target: identity when c already lives there, the constant
// embedding when c lives in the prime field of the same characteristic.
ExtFieldElement lift(const ExtFieldPtr& target, const ExtFieldElement& c);

// Rabin's test: y^{q^s} = y mod m, and gcd(y^{q^{s/r}} - y, m) = 1 for each
// prime r | s. monic holds deg + 1 coefficients, lowest first.
bool is_irreducible(const PrimeField& field, std::span<const u64> monic);

// Random monic irreducible of degree s (y itself for s = 1).
std::vector<u64> find_irreducible(const PrimeField& field, std::size_t s,
                                  Rng& rng);

// Uniform over the q^s - 1 nonzero elements.
ExtFieldElement random_nonzero(const ExtFieldPtr& field, Rng& rng);

}  // namespace sparse_interp
