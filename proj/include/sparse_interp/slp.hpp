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

#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparse_interp/bigint.hpp"
#include "sparse_interp/errors.hpp"
#include "sparse_interp/ff.hpp"
#include "sparse_interp/modpoly.hpp"

namespace sparse_interp {

enum class OpCode { kAdd, kSub, kMul };

struct Operand {
  enum class Kind { kInput, kConstant, kResult };

  Kind kind = Kind::kInput;
  // Constant residue for kConstant, 0-based instruction index for kResult.
  u64 value = 0;

  static Operand input() { return {Kind::kInput, 0}; }
  static Operand constant(u64 c) { return {Kind::kConstant, c}; }
  static Operand result(std::size_t index) { return {Kind::kResult, index}; }

  friend bool operator==(const Operand&, const Operand&) = default;
};

struct Instruction {
  OpCode op;
  Operand lhs;
  Operand rhs;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

// A division-free, single-input straight-line program over F_q. The value of
// the last instruction is the output.
class Slp {
 public:
  // Throws UsageError for an empty program, forward references or constants
  // outside [0, q).
  Slp(PrimeField field, std::vector<Instruction> instructions);

  const PrimeField& field() const { return field_; }
  std::span<const Instruction> instructions() const { return instructions_; }
  std::size_t length() const { return instructions_.size(); }

  // last_use()[i] is the index of the last instruction reading result i, or
  // length() for the output.
  std::span<const std::size_t> last_use() const { return last_use_; }

  friend bool operator==(const Slp& a, const Slp& b) {
    return a.field_ == b.field_ && a.instructions_ == b.instructions_;
  }

 private:
  PrimeField field_;
  std::vector<Instruction> instructions_;
  std::vector<std::size_t> last_use_;
};

// A ring the program can run over: add/sub/mul on value_type plus an
// embedding of F_q constants.
template <class R>
concept SlpRing = requires(const R& ring, const typename R::value_type& a,
                           u64 c) {
  { ring.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.constant(c) } -> std::convertible_to<typename R::value_type>;
};

// Runs the program with input z. Intermediate results are released after
// their last use.
template <SlpRing R>
typename R::value_type eval_ring(const Slp& slp,
                                 const typename R::value_type& z,
                                 const R& ring) {
  using V = typename R::value_type;
  const auto instructions = slp.instructions();
  const auto last_use = slp.last_use();
  std::vector<std::optional<V>> results(instructions.size());

  auto fetch = [&](const Operand& operand) -> V {
    switch (operand.kind) {
      case Operand::Kind::kInput:
        return z;
      case Operand::Kind::kConstant:
        return ring.constant(operand.value);
      case Operand::Kind::kResult:
        return *results[operand.value];
    }
    throw InternalError("bad operand kind");
  };

  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const Instruction& ins = instructions[i];
    V lhs = fetch(ins.lhs);
    V rhs = fetch(ins.rhs);
    switch (ins.op) {
      case OpCode::kAdd:
        results[i] = ring.add(lhs, rhs);
        break;
      case OpCode::kSub:
        results[i] = ring.sub(lhs, rhs);
        break;
      case OpCode::kMul:
        results[i] = ring.mul(lhs, rhs);
        break;
    }
    for (const Operand* operand : {&ins.lhs, &ins.rhs}) {
      if (operand->kind == Operand::Kind::kResult &&
          last_use[operand->value] == i) {
        results[operand->value].reset();
      }
    }
  }
  return std::move(*results.back());
}

struct PrimeFieldRing {
  using value_type = u64;
  PrimeField field;

  u64 add(u64 a, u64 b) const { return field.add(a, b); }
  u64 sub(u64 a, u64 b) const { return field.sub(a, b); }
  u64 mul(u64 a, u64 b) const { return field.mul(a, b); }
  u64 constant(u64 c) const { return field.reduce(c); }
};

struct ExtFieldRing {
  using value_type = ExtFieldElement;
  ExtFieldPtr field;

  ExtFieldElement add(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return a + b;
  }
  ExtFieldElement sub(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return a - b;
  }
  ExtFieldElement mul(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return a * b;
  }
  ExtFieldElement constant(u64 c) const { return field->embed(c); }
};

// K[z] / (z^p - 1).
struct CyclicRing {
  using value_type = CyclicPoly;
  ExtFieldPtr field;
  std::size_t p;

  CyclicPoly add(const CyclicPoly& a, const CyclicPoly& b) const {
    return cyclic_add(a, b);
  }
  CyclicPoly sub(const CyclicPoly& a, const CyclicPoly& b) const {
    return cyclic_sub(a, b);
  }
  CyclicPoly mul(const CyclicPoly& a, const CyclicPoly& b) const {
    return cyclic_mul(a, b);
  }
  CyclicPoly constant(u64 c) const {
    return CyclicPoly::constant(field, p, field->embed(c));
  }
};

struct ProbeRecord {
  std::size_t p;
  std::size_t s;

  std::size_t degree() const { return p * s; }
};

// Counts probes and their degrees p * s. Safe to record from several
// threads; totals always equal the serial sums.
class ProbeLedger {
 public:
  ProbeLedger() = default;
  ProbeLedger(const ProbeLedger& other);
  ProbeLedger& operator=(const ProbeLedger& other);

  void record(std::size_t p, std::size_t s);

  std::size_t probe_count() const;
  u64 total_probe_size() const;
  std::vector<ProbeRecord> records() const;

 private:
  mutable std::mutex mutex_;
  std::vector<ProbeRecord> records_;
  u64 total_ = 0;
};

// f(alpha z) mod (z^p - 1): runs the program over alpha's field with input
// alpha * z (the constant alpha when p = 1) and records one probe of
// degree p * s.
CyclicPoly probe(const Slp& slp, const ExtFieldElement& alpha, std::size_t p,
                 ProbeLedger& ledger);

// Compiles f (over F_q) to a program: each z^e by left-to-right binary
// powering, scaled by its coefficient, and summed in increasing exponent
// order. The zero polynomial compiles to [b1 <- z - z].
Slp slp_from_sparse(const SparsePoly& f);

// sum_i exps[i] * bound^i. Throws BoundViolation if some exps[i] >= bound.
BigInt kronecker_pack(std::span<const BigInt> exps, const BigInt& bound);
// Base-bound digits of e. Throws BoundViolation if e >= bound^n.
std::vector<BigInt> kronecker_unpack(const BigInt& e, const BigInt& bound,
                                     std::size_t n);

// Text form:
//
//   q <prime>
//   b1 <- <operand> <op> <operand>
//   ...
//
// with operands z, b<j> (j < i) or a decimal constant and op one of + - *.
Slp parse_slp(std::istream& in);
Slp parse_slp(std::string_view text);
void write_slp(std::ostream& out, const Slp& slp);
std::string to_text(const Slp& slp);

}  // namespace sparse_interp
