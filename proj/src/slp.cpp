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

#include "sparse_interp/slp.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace sparse_interp {

// ----------------------------------------------------------------------- Slp

Slp::Slp(PrimeField field, std::vector<Instruction> instructions)
    : field_(field), instructions_(std::move(instructions)) {
  if (instructions_.empty()) throw UsageError("program has no instructions");
  last_use_.assign(instructions_.size(), 0);
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    for (const Operand* operand : {&instructions_[i].lhs, &instructions_[i].rhs}) {
      switch (operand->kind) {
        case Operand::Kind::kInput:
          break;
        case Operand::Kind::kConstant:
          if (operand->value >= field_.modulus()) {
            throw UsageError("instruction " + std::to_string(i + 1) +
                             ": constant outside the field");
          }
          break;
        case Operand::Kind::kResult:
          if (operand->value >= i) {
            throw UsageError("instruction " + std::to_string(i + 1) +
                             ": operand refers to a later result");
          }
          last_use_[operand->value] = i;
          break;
      }
    }
  }
  last_use_.back() = instructions_.size();
}

// --------------------------------------------------------------- ProbeLedger

ProbeLedger::ProbeLedger(const ProbeLedger& other) {
  std::lock_guard lock(other.mutex_);
  records_ = other.records_;
  total_ = other.total_;
}

ProbeLedger& ProbeLedger::operator=(const ProbeLedger& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  records_ = other.records_;
  total_ = other.total_;
  return *this;
}

void ProbeLedger::record(std::size_t p, std::size_t s) {
  std::lock_guard lock(mutex_);
  records_.push_back({p, s});
  total_ += static_cast<u64>(p) * s;
}

std::size_t ProbeLedger::probe_count() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

u64 ProbeLedger::total_probe_size() const {
  std::lock_guard lock(mutex_);
  return total_;
}

std::vector<ProbeRecord> ProbeLedger::records() const {
  std::lock_guard lock(mutex_);
  return records_;
}

// --------------------------------------------------------------------- probe

CyclicPoly probe(const Slp& slp, const ExtFieldElement& alpha, std::size_t p,
                 ProbeLedger& ledger) {
  if (p == 0) throw UsageError("cycle length must be >= 1");
  if (alpha.is_zero()) throw UsageError("alpha must be nonzero");
  const ExtFieldPtr& field = alpha.field();
  if (field->base() != slp.field()) {
    throw UsageError("alpha's field has a different characteristic");
  }
  CyclicRing ring{field, p};
  CyclicPoly input = CyclicPoly::monomial(field, p, alpha, 1);
  CyclicPoly out = eval_ring(slp, input, ring);
  ledger.record(p, field->degree());
  return out;
}

// ----------------------------------------------------------- slp_from_sparse

Slp slp_from_sparse(const SparsePoly& f) {
  if (f.field()->degree() != 1) {
    throw UsageError("programs can only be built for polynomials over F_q");
  }
  const PrimeField field = f.field()->base();
  std::vector<Instruction> code;
  auto emit = [&](OpCode op, Operand lhs, Operand rhs) {
    code.push_back({op, lhs, rhs});
    return Operand::result(code.size() - 1);
  };

  if (f.is_zero()) {
    emit(OpCode::kSub, Operand::input(), Operand::input());
    return Slp(field, std::move(code));
  }

  std::optional<Operand> sum;
  for (const auto& [e, c] : f.terms()) {
    const u64 coeff = c.coeffs()[0];
    Operand term = Operand::constant(coeff);
    if (e != 0) {
      Operand power = Operand::input();
      for (std::size_t bit = boost::multiprecision::msb(e); bit-- > 0;) {
        power = emit(OpCode::kMul, power, power);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) {
          power = emit(OpCode::kMul, power, Operand::input());
        }
      }
      term = coeff == 1 ? power
                        : emit(OpCode::kMul, power, Operand::constant(coeff));
    }
    sum = sum ? emit(OpCode::kAdd, term, *sum) : term;
  }
  if (code.empty() || *sum != Operand::result(code.size() - 1)) {
    emit(OpCode::kAdd, *sum, Operand::constant(0));
  }
  return Slp(field, std::move(code));
}

// ---------------------------------------------------------------- Kronecker

BigInt kronecker_pack(std::span<const BigInt> exps, const BigInt& bound) {
  if (bound < 1) throw UsageError("Kronecker bound must be positive");
  BigInt packed = 0;
  BigInt place = 1;
  for (const BigInt& e : exps) {
    if (e < 0 || e >= bound) {
      throw BoundViolation("exponent " + e.str() + " is not below " +
                           bound.str());
    }
    packed += e * place;
    place *= bound;
  }
  return packed;
}

std::vector<BigInt> kronecker_unpack(const BigInt& e, const BigInt& bound,
                                     std::size_t n) {
  if (bound < 1) throw UsageError("Kronecker bound must be positive");
  if (e < 0) throw BoundViolation("negative packed exponent");
  std::vector<BigInt> digits(n, 0);
  BigInt rest = e;
  for (std::size_t i = 0; i < n && rest != 0; ++i) {
    digits[i] = rest % bound;
    rest /= bound;
  }
  if (rest != 0) {
    throw BoundViolation("packed exponent " + e.str() + " is not below " +
                         bound.str() + "^" + std::to_string(n));
  }
  return digits;
}

// --------------------------------------------------------------- text format

namespace {

bool parse_index(std::string_view digits, u64& out) {
  if (digits.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

Operand parse_operand(const std::string& token, std::size_t index,
                      const PrimeField& field, std::size_t line) {
  if (token == "z") return Operand::input();
  if (token.size() > 1 && token[0] == 'b') {
    u64 j = 0;
    if (!parse_index(std::string_view(token).substr(1), j) || j == 0) {
      throw ParseError(line, "bad result reference '" + token + "'");
    }
    if (j >= index) {
      throw ParseError(line, "b" + std::to_string(index) + " refers to " +
                                 token + ", which is not computed yet");
    }
    return Operand::result(j - 1);
  }
  u64 c = 0;
  if (!parse_index(token, c)) {
    throw ParseError(line, "bad operand '" + token + "'");
  }
  if (c >= field.modulus()) {
    throw ParseError(line, "constant " + token + " is not below q");
  }
  return Operand::constant(c);
}

OpCode parse_op(const std::string& token, std::size_t line) {
  if (token == "+") return OpCode::kAdd;
  if (token == "-") return OpCode::kSub;
  if (token == "*") return OpCode::kMul;
  if (token == "/") {
    throw ParseError(line, "division is not allowed in a division-free program");
  }
  throw ParseError(line, "unknown operator '" + token + "'");
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

void write_operand(std::ostream& out, const Operand& operand) {
  switch (operand.kind) {
    case Operand::Kind::kInput:
      out << 'z';
      break;
    case Operand::Kind::kConstant:
      out << operand.value;
      break;
    case Operand::Kind::kResult:
      out << 'b' << operand.value + 1;
      break;
  }
}

char op_symbol(OpCode op) {
  switch (op) {
    case OpCode::kAdd:
      return '+';
    case OpCode::kSub:
      return '-';
    case OpCode::kMul:
      return '*';
  }
  return '?';
}

}  // namespace

Slp parse_slp(std::istream& in) {
  std::optional<PrimeField> field;
  std::vector<Instruction> code;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::vector<std::string> tokens = split_tokens(text);
    if (tokens.empty()) continue;
    if (!field) {
      u64 q = 0;
      if (tokens.size() != 2 || tokens[0] != "q" || !parse_index(tokens[1], q)) {
        throw ParseError(line, "expected header 'q <prime>'");
      }
      try {
        field.emplace(q);
      } catch (const UsageError& e) {
        throw ParseError(line, e.what());
      }
      continue;
    }
    if (tokens.size() != 5 || tokens[1] != "<-") {
      throw ParseError(line, "expected 'b<i> <- <operand> <op> <operand>'");
    }
    const std::size_t index = code.size() + 1;
    if (tokens[0] != "b" + std::to_string(index)) {
      throw ParseError(line, "expected destination b" + std::to_string(index));
    }
    const OpCode op = parse_op(tokens[3], line);
    code.push_back({op, parse_operand(tokens[2], index, *field, line),
                    parse_operand(tokens[4], index, *field, line)});
  }
  if (!field) throw ParseError(line + 1, "missing header 'q <prime>'");
  if (code.empty()) throw ParseError(line + 1, "program has no instructions");
  return Slp(*field, std::move(code));
}

Slp parse_slp(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_slp(in);
}

void write_slp(std::ostream& out, const Slp& slp) {
  out << "q " << slp.field().modulus() << '\n';
  const auto code = slp.instructions();
  for (std::size_t i = 0; i < code.size(); ++i) {
    out << 'b' << i + 1 << " <- ";
    write_operand(out, code[i].lhs);
    out << ' ' << op_symbol(code[i].op) << ' ';
    write_operand(out, code[i].rhs);
    out << '\n';
  }
}

std::string to_text(const Slp& slp) {
  std::ostringstream out;
  write_slp(out, slp);
  return out.str();
}

}  // namespace sparse_interp
