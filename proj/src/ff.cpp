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

#include "sparse_interp/ff.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "sparse_interp/errors.hpp"

namespace sparse_interp {
namespace {

using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool same_field(const ExtFieldPtr& a, const ExtFieldPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

void require_same(const ExtFieldElement& a, const ExtFieldElement& b) {
  if (!same_field(a.field(), b.field())) {
    throw UsageError("operands belong to different fields");
  }
}

// Dense polynomials over F_q, lowest coefficient first, no trailing zeros.
using Dense = std::vector<u64>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m for monic m.
Dense dense_mod(Dense a, const Dense& m, const PrimeField& f) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j < dm; ++j) {
      a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense dense_mulmod(const Dense& a, const Dense& b, const Dense& m,
                   const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  return dense_mod(std::move(r), m, f);
}

Dense dense_powmod(Dense base, u64 e, const Dense& m, const PrimeField& f) {
  Dense r = dense_mod(Dense{1}, m, f);
  base = dense_mod(std::move(base), m, f);
  while (e != 0) {
    if (e & 1) r = dense_mulmod(r, base, m, f);
    e >>= 1;
    if (e != 0) base = dense_mulmod(base, base, m, f);
  }
  return r;
}

Dense dense_gcd(Dense a, Dense b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic so dense_mod applies.
    const u64 lead_inv = f.inv(b.back());
    for (u64& c : b) c = f.mul(c, lead_inv);
    Dense r = dense_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is exact for every n < 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(u64 q) : q_(q) {
  if (q >= kMaxModulus) throw UsageError("field modulus must be below 2^62");
  if (!is_prime_u64(q)) {
    throw UsageError("field modulus is not prime: " + std::to_string(q));
  }
}

u64 PrimeField::pow(u64 a, u64 e) const { return powmod64(a, e, q_); }

u64 PrimeField::pow(u64 a, const BigInt& e) const {
  if (e < 0) throw UsageError("negative exponent");
  // a^(q-1) = 1 for a != 0, so the exponent can be reduced; 0^0 stays 1.
  if (a % q_ == 0) return e == 0 ? 1 % q_ : 0;
  return powmod64(a, static_cast<u64>(e % (q_ - 1)), q_);
}

u64 PrimeField::inv(u64 a) const {
  a %= q_;
  if (a == 0) throw DivisionByZero("inverse of zero");
  return powmod64(a, q_ - 2, q_);
}

// -------------------------------------------------------------- FieldElement

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw UsageError("operands belong to different fields");
  }
}
}  // namespace

FieldElement FieldElement::inv() const {
  return FieldElement(field_, field_.inv(value_));
}

FieldElement FieldElement::pow(const BigInt& e) const {
  return FieldElement(field_, field_.pow(value_, e));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.add(a.value_, b.value_));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.sub(a.value_, b.value_));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.mul(a.value_, b.value_));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a * b.inv();
}
FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field_, a.field_.neg(a.value_));
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

// ------------------------------------------------------------------ ExtField

ExtFieldPtr ExtField::create(PrimeField base, std::vector<u64> modulus) {
  if (modulus.size() < 2) throw UsageError("modulus must have degree >= 1");
  if (modulus.back() != 1) throw UsageError("modulus must be monic");
  for (u64 c : modulus) {
    if (c >= base.modulus()) {
      throw UsageError("modulus coefficient out of range");
    }
  }
  if (!is_irreducible(base, modulus)) {
    throw UsageError("modulus is not irreducible");
  }
  return std::make_shared<const ExtField>(Token{}, base, std::move(modulus));
}

ExtFieldPtr ExtField::prime(PrimeField base) {
  return std::make_shared<const ExtField>(Token{}, base, std::vector<u64>{0, 1});
}

ExtField::ExtField(Token, PrimeField base, std::vector<u64> modulus)
    : base_(base), s_(modulus.size() - 1), modulus_(std::move(modulus)) {}

BigInt ExtField::order() const {
  return boost::multiprecision::pow(BigInt(base_.modulus()),
                                    static_cast<unsigned>(s_));
}

bool ExtField::same_as(const ExtField& other) const {
  return base_ == other.base_ && modulus_ == other.modulus_;
}

bool ExtField::is_zero(std::span<const u64> a) const {
  return std::all_of(a.begin(), a.begin() + s_, [](u64 c) { return c == 0; });
}

void ExtField::add(std::span<const u64> a, std::span<const u64> b,
                   std::span<u64> out) const {
  for (std::size_t i = 0; i < s_; ++i) out[i] = base_.add(a[i], b[i]);
}

void ExtField::sub(std::span<const u64> a, std::span<const u64> b,
                   std::span<u64> out) const {
  for (std::size_t i = 0; i < s_; ++i) out[i] = base_.sub(a[i], b[i]);
}

void ExtField::neg(std::span<const u64> a, std::span<u64> out) const {
  for (std::size_t i = 0; i < s_; ++i) out[i] = base_.neg(a[i]);
}

void ExtField::mul(std::span<const u64> a, std::span<const u64> b,
                   std::span<u64> out) const {
  if (s_ == 1) {
    out[0] = base_.mul(a[0], b[0]);
    return;
  }
  constexpr std::size_t kInline = 32;
  std::array<u64, 2 * kInline> inline_buf{};
  std::vector<u64> heap_buf;
  u64* prod = inline_buf.data();
  if (s_ > kInline) {
    heap_buf.assign(2 * s_, 0);
    prod = heap_buf.data();
  }
  const std::size_t len = 2 * s_ - 1;
  std::fill(prod, prod + len, u64{0});
  for (std::size_t i = 0; i < s_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < s_; ++j) {
      prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
  }
  // y^s = -(m_0 + ... + m_{s-1} y^{s-1})
  for (std::size_t k = len - 1; k >= s_; --k) {
    const u64 c = prod[k];
    if (c == 0) continue;
    const std::size_t shift = k - s_;
    for (std::size_t j = 0; j < s_; ++j) {
      prod[shift + j] = base_.sub(prod[shift + j], base_.mul(c, modulus_[j]));
    }
  }
  std::copy(prod, prod + s_, out.begin());
}

void ExtField::mul_add(std::span<u64> acc, std::span<const u64> a,
                       std::span<const u64> b) const {
  if (s_ == 1) {
    acc[0] = base_.add(acc[0], base_.mul(a[0], b[0]));
    return;
  }
  std::array<u64, 32> inline_buf{};
  std::vector<u64> heap_buf;
  std::span<u64> tmp(inline_buf.data(), s_ <= 32 ? s_ : 0);
  if (s_ > 32) {
    heap_buf.assign(s_, 0);
    tmp = heap_buf;
  }
  mul(a, b, tmp);
  for (std::size_t i = 0; i < s_; ++i) acc[i] = base_.add(acc[i], tmp[i]);
}

void ExtField::scale_add(std::span<u64> acc, u64 c,
                         std::span<const u64> a) const {
  for (std::size_t i = 0; i < s_; ++i) {
    acc[i] = base_.add(acc[i], base_.mul(c, a[i]));
  }
}

ExtFieldElement ExtField::zero() const {
  return ExtFieldElement(shared_from_this(), std::vector<u64>(s_, 0));
}

ExtFieldElement ExtField::one() const { return embed(1); }

ExtFieldElement ExtField::embed(u64 base_value) const {
  std::vector<u64> coeffs(s_, 0);
  coeffs[0] = base_.reduce(base_value);
  return ExtFieldElement(shared_from_this(), std::move(coeffs));
}

ExtFieldElement ExtField::element(std::vector<u64> coeffs) const {
  return ExtFieldElement(shared_from_this(), std::move(coeffs));
}

// ----------------------------------------------------------- ExtFieldElement

ExtFieldElement::ExtFieldElement(ExtFieldPtr field, std::vector<u64> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw UsageError("null field");
  if (coeffs_.size() != field_->degree()) {
    throw UsageError("element has " + std::to_string(coeffs_.size()) +
                     " coefficients, field degree is " +
                     std::to_string(field_->degree()));
  }
  for (u64& c : coeffs_) c = field_->base().reduce(c);
}

bool ExtFieldElement::is_zero() const { return field_->is_zero(coeffs_); }

ExtFieldElement ExtFieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_->degree() == 1) {
    return ExtFieldElement(field_, {field_->base().inv(coeffs_[0])});
  }
  return pow(field_->order() - 2);
}

ExtFieldElement ExtFieldElement::pow(const BigInt& e) const {
  if (e < 0) throw UsageError("negative exponent");
  if (field_->degree() == 1) {
    return ExtFieldElement(field_, {field_->base().pow(coeffs_[0], e)});
  }
  ExtFieldElement result = field_->one();
  if (e == 0) return result;
  for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
    field_->mul(result.coeffs_, result.coeffs_, result.coeffs_);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) {
      field_->mul(result.coeffs_, coeffs_, result.coeffs_);
    }
  }
  return result;
}

std::string ExtFieldElement::encode() const {
  std::string out(coeffs_.size() * 8, '\0');
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    u64 v = coeffs_[i];
    for (std::size_t b = 0; b < 8; ++b) {
      out[i * 8 + b] = static_cast<char>(v & 0xff);
      v >>= 8;
    }
  }
  return out;
}

ExtFieldElement operator+(const ExtFieldElement& a, const ExtFieldElement& b) {
  require_same(a, b);
  ExtFieldElement r = a;
  a.field_->add(a.coeffs_, b.coeffs_, r.coeffs_);
  return r;
}

ExtFieldElement operator-(const ExtFieldElement& a, const ExtFieldElement& b) {
  require_same(a, b);
  ExtFieldElement r = a;
  a.field_->sub(a.coeffs_, b.coeffs_, r.coeffs_);
  return r;
}

ExtFieldElement operator*(const ExtFieldElement& a, const ExtFieldElement& b) {
  require_same(a, b);
  ExtFieldElement r = a;
  a.field_->mul(a.coeffs_, b.coeffs_, r.coeffs_);
  return r;
}

ExtFieldElement operator-(const ExtFieldElement& a) {
  ExtFieldElement r = a;
  a.field_->neg(a.coeffs_, r.coeffs_);
  return r;
}

bool operator==(const ExtFieldElement& a, const ExtFieldElement& b) {
  return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

ExtFieldElement lift(const ExtFieldPtr& target, const ExtFieldElement& c) {
  if (c.field() == target) return c;
  if (c.field()->same_as(*target)) {
    return ExtFieldElement(target, {c.coeffs().begin(), c.coeffs().end()});
  }
  if (c.field()->degree() == 1 && c.field()->base() == target->base()) {
    return target->embed(c.coeffs()[0]);
  }
  throw UsageError("element cannot be mapped into the target field");
}

// ------------------------------------------------------------ irreducibility

bool is_irreducible(const PrimeField& field, std::span<const u64> monic) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw UsageError("is_irreducible expects a monic polynomial of degree >= 1");
  }
  const std::size_t n = monic.size() - 1;
  if (n == 1) return true;
  const Dense m(monic.begin(), monic.end());
  const Dense y{0, 1};
  const u64 q = field.modulus();

  // frob[k] = y^{q^k} mod m
  std::vector<Dense> frob(n + 1);
  frob[0] = y;
  for (std::size_t k = 1; k <= n; ++k) {
    frob[k] = dense_powmod(frob[k - 1], q, m, field);
  }
  if (frob[n] != y) return false;
  for (std::size_t r : prime_factors(n)) {
    Dense h = frob[n / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = field.sub(h[1], 1);
    trim(h);
    if (h.empty()) return false;
    if (dense_gcd(m, h, field).size() != 1) return false;
  }
  return true;
}

std::vector<u64> find_irreducible(const PrimeField& field, std::size_t s,
                                  Rng& rng) {
  if (s == 0) throw UsageError("extension degree must be >= 1");
  if (s == 1) return {0, 1};
  std::vector<u64> candidate(s + 1, 0);
  candidate[s] = 1;
  for (std::size_t attempt = 0; attempt < 64 * s; ++attempt) {
    for (std::size_t i = 0; i < s; ++i) {
      candidate[i] = rng.below(field.modulus());
    }
    if (is_irreducible(field, candidate)) return candidate;
  }
  throw InternalError("no irreducible polynomial found within the retry cap");
}

ExtFieldElement random_nonzero(const ExtFieldPtr& field, Rng& rng) {
  const u64 q = field->base().modulus();
  std::vector<u64> coeffs(field->degree());
  for (;;) {
    for (u64& c : coeffs) c = rng.below(q);
    if (!field->is_zero(coeffs)) return field->element(coeffs);
  }
}

}  // namespace sparse_interp
