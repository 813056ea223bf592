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

#include "sparse_interp/modpoly.hpp"

#include <algorithm>

#include "sparse_interp/errors.hpp"

namespace sparse_interp {

// ---------------------------------------------------------------- SparsePoly

SparsePoly::SparsePoly(ExtFieldPtr field) : field_(std::move(field)) {
  if (!field_) throw UsageError("null field");
}

BigInt SparsePoly::degree() const {
  return terms_.empty() ? BigInt(0) : terms_.rbegin()->first;
}

ExtFieldElement SparsePoly::coeff(const BigInt& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_->zero() : it->second;
}

void SparsePoly::add_term(const BigInt& e, const ExtFieldElement& c) {
  if (e < 0) throw UsageError("negative exponent");
  ExtFieldElement value = lift(field_, c);
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, value);
  if (!inserted) {
    it->second = it->second + value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SparsePoly::add_term(const BigInt& e, u64 base_value) {
  add_term(e, field_->embed(base_value));
}

namespace {

void check_addable(const ExtField& a, const ExtField& b) {
  if (a.same_as(b)) return;
  if (b.degree() == 1 && a.base() == b.base()) return;
  throw UsageError("sparse polynomials over different fields");
}

}  // namespace

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_addable(*field_, *other.field_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_addable(*field_, *other.field_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- CyclicPoly

CyclicPoly::CyclicPoly(ExtFieldPtr field, std::size_t p)
    : field_(std::move(field)), p_(p), s_(0) {
  if (!field_) throw UsageError("null field");
  if (p_ == 0) throw UsageError("cycle length must be >= 1");
  s_ = field_->degree();
  data_.assign(p_ * s_, 0);
}

CyclicPoly CyclicPoly::constant(ExtFieldPtr field, std::size_t p,
                                const ExtFieldElement& c) {
  return monomial(std::move(field), p, c, 0);
}

CyclicPoly CyclicPoly::monomial(ExtFieldPtr field, std::size_t p,
                                const ExtFieldElement& c, std::size_t k) {
  CyclicPoly r(std::move(field), p);
  r.set_coeff(k % p, c);
  return r;
}

ExtFieldElement CyclicPoly::coeff(std::size_t k) const {
  auto span = coeff_span(k);
  return field_->element({span.begin(), span.end()});
}

std::span<const u64> CyclicPoly::coeff_span(std::size_t k) const {
  if (k >= p_) throw UsageError("coefficient index out of range");
  return std::span<const u64>(data_).subspan(k * s_, s_);
}

std::span<u64> CyclicPoly::coeff_span(std::size_t k) {
  if (k >= p_) throw UsageError("coefficient index out of range");
  return std::span<u64>(data_).subspan(k * s_, s_);
}

void CyclicPoly::set_coeff(std::size_t k, const ExtFieldElement& c) {
  ExtFieldElement value = lift(field_, c);
  std::copy(value.coeffs().begin(), value.coeffs().end(),
            coeff_span(k).begin());
}

void CyclicPoly::add_to_coeff(std::size_t k, const ExtFieldElement& c) {
  ExtFieldElement value = lift(field_, c);
  auto slot = coeff_span(k);
  field_->add(slot, value.coeffs(), slot);
}

bool CyclicPoly::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](u64 c) { return c == 0; });
}

std::size_t CyclicPoly::term_count() const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < p_; ++k) {
    if (!field_->is_zero(coeff_span(k))) ++count;
  }
  return count;
}

std::vector<std::size_t> CyclicPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < p_; ++k) {
    if (!field_->is_zero(coeff_span(k))) out.push_back(k);
  }
  return out;
}

SparsePoly CyclicPoly::to_sparse() const {
  SparsePoly f(field_);
  for (std::size_t k : support()) f.add_term(BigInt(k), coeff(k));
  return f;
}

void CyclicPoly::check_compatible(const CyclicPoly& other) const {
  if (p_ != other.p_) throw UsageError("cycle lengths differ");
  if (field_ != other.field_ && !field_->same_as(*other.field_)) {
    throw UsageError("operands belong to different fields");
  }
}

CyclicPoly operator+(const CyclicPoly& a, const CyclicPoly& b) {
  a.check_compatible(b);
  CyclicPoly r = a;
  const PrimeField& f = a.field_->base();
  for (std::size_t i = 0; i < r.data_.size(); ++i) {
    r.data_[i] = f.add(a.data_[i], b.data_[i]);
  }
  return r;
}

CyclicPoly operator-(const CyclicPoly& a, const CyclicPoly& b) {
  a.check_compatible(b);
  CyclicPoly r = a;
  const PrimeField& f = a.field_->base();
  for (std::size_t i = 0; i < r.data_.size(); ++i) {
    r.data_[i] = f.sub(a.data_[i], b.data_[i]);
  }
  return r;
}

CyclicPoly operator-(const CyclicPoly& a) {
  CyclicPoly r = a;
  const PrimeField& f = a.field_->base();
  for (u64& c : r.data_) c = f.neg(c);
  return r;
}

CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
  a.check_compatible(b);
  const std::size_t p = a.p_;
  const ExtField& field = *a.field_;
  CyclicPoly r(a.field_, p);
  const std::vector<std::size_t> sa = a.support();
  const std::vector<std::size_t> sb = b.support();
  for (std::size_t i : sa) {
    auto ai = a.coeff_span(i);
    for (std::size_t j : sb) {
      std::size_t k = i + j;
      if (k >= p) k -= p;
      field.mul_add(r.coeff_span(k), ai, b.coeff_span(j));
    }
  }
  return r;
}

bool operator==(const CyclicPoly& a, const CyclicPoly& b) {
  return a.p_ == b.p_ &&
         (a.field_ == b.field_ || a.field_->same_as(*b.field_)) &&
         a.data_ == b.data_;
}

CyclicPoly cyclic_add(const CyclicPoly& a, const CyclicPoly& b) { return a + b; }
CyclicPoly cyclic_sub(const CyclicPoly& a, const CyclicPoly& b) { return a - b; }
CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b) { return a * b; }
std::size_t term_count(const CyclicPoly& a) { return a.term_count(); }

CyclicPoly sparse_image(const SparsePoly& f, const ExtFieldElement& alpha,
                        std::size_t p) {
  if (alpha.is_zero()) throw UsageError("alpha must be nonzero");
  const ExtFieldPtr& field = alpha.field();
  CyclicPoly r(field, p);
  for (const auto& [e, c] : f.terms()) {
    ExtFieldElement term = lift(field, c) * alpha.pow(e);
    r.add_to_coeff(mod_u64(e, p), term);
  }
  return r;
}

ExtFieldElement sparse_eval(const SparsePoly& f, const ExtFieldElement& x) {
  const ExtFieldPtr& field = x.field();
  ExtFieldElement sum = field->zero();
  for (const auto& [e, c] : f.terms()) {
    sum = sum + lift(field, c) * x.pow(e);
  }
  return sum;
}

}  // namespace sparse_interp
