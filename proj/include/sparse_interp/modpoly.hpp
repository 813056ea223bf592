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
#include <map>
#include <span>
#include <vector>

#include "sparse_interp/bigint.hpp"
#include "sparse_interp/ff.hpp"

namespace sparse_interp {

// Sum of c_i z^{e_i} with distinct exponents and nonzero coefficients,
// stored as an ordered exponent -> coefficient map.
class SparsePoly {
 public:
  using Terms = std::map<BigInt, ExtFieldElement>;

  explicit SparsePoly(ExtFieldPtr field);

  const ExtFieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Largest exponent; 0 for the zero polynomial.
  BigInt degree() const;

  ExtFieldElement coeff(const BigInt& e) const;

  // Adds c z^e, merging with an existing term and dropping zero results.
  // c is lifted into field() when it lives in the prime field.
  void add_term(const BigInt& e, const ExtFieldElement& c);
  void add_term(const BigInt& e, u64 base_value);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    return a += b;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    return a -= b;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  ExtFieldPtr field_;
  Terms terms_;
};

// An element of K[z] / (z^p - 1) stored densely: p coefficients, each a
// residue vector of length s, in one contiguous buffer.
class CyclicPoly {
 public:
  CyclicPoly(ExtFieldPtr field, std::size_t p);

  static CyclicPoly constant(ExtFieldPtr field, std::size_t p,
                             const ExtFieldElement& c);
  // c z^{k mod p}
  static CyclicPoly monomial(ExtFieldPtr field, std::size_t p,
                             const ExtFieldElement& c, std::size_t k);

  const ExtFieldPtr& field() const { return field_; }
  std::size_t length() const { return p_; }

  ExtFieldElement coeff(std::size_t k) const;
  std::span<const u64> coeff_span(std::size_t k) const;
  std::span<u64> coeff_span(std::size_t k);
  void set_coeff(std::size_t k, const ExtFieldElement& c);
  void add_to_coeff(std::size_t k, const ExtFieldElement& c);

  bool is_zero() const;
  std::size_t term_count() const;
  std::vector<std::size_t> support() const;

  // Exponents become the residues 0 .. p-1.
  SparsePoly to_sparse() const;

  friend CyclicPoly operator+(const CyclicPoly& a, const CyclicPoly& b);
  friend CyclicPoly operator-(const CyclicPoly& a, const CyclicPoly& b);
  friend CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b);
  friend CyclicPoly operator-(const CyclicPoly& a);
  friend bool operator==(const CyclicPoly& a, const CyclicPoly& b);

 private:
  void check_compatible(const CyclicPoly& other) const;

  ExtFieldPtr field_;
  std::size_t p_;
  std::size_t s_;
  std::vector<u64> data_;
};

CyclicPoly cyclic_add(const CyclicPoly& a, const CyclicPoly& b);
CyclicPoly cyclic_sub(const CyclicPoly& a, const CyclicPoly& b);
// Direct convolution over the nonzero coefficients of both operands.
CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b);
std::size_t term_count(const CyclicPoly& a);

// f(alpha z) mod (z^p - 1), computed term by term: alpha^e by
// square-and-multiply and z^e folded to z^{e mod p}.
CyclicPoly sparse_image(const SparsePoly& f, const ExtFieldElement& alpha,
                        std::size_t p);

ExtFieldElement sparse_eval(const SparsePoly& f, const ExtFieldElement& x);

}  // namespace sparse_interp
