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

#include <thread>

#include "gtest/gtest.h"
#include "sparse_interp/errors.hpp"
#include "test_util.hpp"

namespace sparse_interp {
namespace {

using testing::poly_of;
using testing::prime_field;
using testing::random_extension;
using testing::random_sparse;

Instruction ins(OpCode op, Operand lhs, Operand rhs) { return {op, lhs, rhs}; }

Slp square_plus_three() {
  return Slp(PrimeField(5),
             {ins(OpCode::kMul, Operand::input(), Operand::input()),
              ins(OpCode::kAdd, Operand::result(0), Operand::constant(3))});
}

TEST(SlpTest, EvalOverPrimeField) {
  EXPECT_EQ(eval_ring(square_plus_three(), u64{2}, PrimeFieldRing{PrimeField(5)}), 2u);
  const Slp zero(PrimeField(5), {ins(OpCode::kSub, Operand::input(), Operand::input())});
  for (u64 z = 0; z < 5; ++z) {
    EXPECT_EQ(eval_ring(zero, z, PrimeFieldRing{PrimeField(5)}), 0u);
  }
}

TEST(SlpTest, EvalOverCyclicRing) {
  const ExtFieldPtr f5 = prime_field(5);
  const CyclicPoly z = CyclicPoly::monomial(f5, 3, f5->one(), 1);
  const CyclicPoly out = eval_ring(square_plus_three(), z, CyclicRing{f5, 3});
  EXPECT_EQ(out.to_sparse(), poly_of(f5, {{1, 2}, {3, 0}}));
}

TEST(SlpTest, StructuralErrorsAtConstruction) {
  EXPECT_THROW(Slp(PrimeField(5), {}), UsageError);
  EXPECT_THROW(Slp(PrimeField(5), {ins(OpCode::kAdd, Operand::result(0), Operand::input())}),
               UsageError);
  EXPECT_THROW(Slp(PrimeField(5), {ins(OpCode::kAdd, Operand::constant(5), Operand::input())}),
               UsageError);
}

TEST(SlpTest, LastUseTracksReaders) {
  const Slp slp(PrimeField(7), {ins(OpCode::kMul, Operand::input(), Operand::input()),
                                ins(OpCode::kMul, Operand::result(0), Operand::input()),
                                ins(OpCode::kAdd, Operand::result(0), Operand::result(1))});
  const auto last = slp.last_use();
  EXPECT_EQ(last[0], 2u);
  EXPECT_EQ(last[1], 2u);
  EXPECT_EQ(last[2], 3u);
}

TEST(SlpFromSparseTest, Examples) {
  const ExtFieldPtr f7 = prime_field(7);
  const Slp slp = slp_from_sparse(poly_of(f7, {{1, 5}, {2, 0}}));
  const std::vector<Instruction> expected{
      ins(OpCode::kMul, Operand::input(), Operand::input()),
      ins(OpCode::kMul, Operand::result(0), Operand::result(0)),
      ins(OpCode::kMul, Operand::result(1), Operand::input()),
      ins(OpCode::kAdd, Operand::result(2), Operand::constant(2))};
  EXPECT_EQ(std::vector<Instruction>(slp.instructions().begin(), slp.instructions().end()),
            expected);
  const Slp zero = slp_from_sparse(SparsePoly(f7));
  ASSERT_EQ(zero.length(), 1u);
  EXPECT_EQ(zero.instructions()[0], ins(OpCode::kSub, Operand::input(), Operand::input()));
}

TEST(SlpFromSparseTest, ConstantsAndMonomials) {
  const ExtFieldPtr f7 = prime_field(7);
  ProbeLedger ledger;
  for (const SparsePoly& f : {poly_of(f7, {{4, 0}}), poly_of(f7, {{1, 1}}),
                              poly_of(f7, {{3, 1}}), poly_of(f7, {{1, 64}})}) {
    EXPECT_EQ(probe(slp_from_sparse(f), f7->one(), 100, ledger).to_sparse(), f);
  }
}

TEST(ProbeTest, Examples) {
  const ExtFieldPtr f7 = prime_field(7);
  const Slp slp = slp_from_sparse(poly_of(f7, {{1, 5}, {2, 0}}));
  ProbeLedger ledger;
  EXPECT_EQ(probe(slp, f7->one(), 3, ledger).to_sparse(), poly_of(f7, {{1, 2}, {2, 0}}));
  EXPECT_EQ(probe(slp, f7->one(), 6, ledger).to_sparse(), poly_of(f7, {{1, 5}, {2, 0}}));
  EXPECT_EQ(probe(slp, f7->one(), 1, ledger).to_sparse(), poly_of(f7, {{3, 0}}));
  EXPECT_EQ(ledger.probe_count(), 3u);
  EXPECT_EQ(ledger.total_probe_size(), 10u);
}

TEST(ProbeTest, RejectsZeroAlphaAndZeroLength) {
  const ExtFieldPtr f7 = prime_field(7);
  ProbeLedger ledger;
  const Slp slp = square_plus_three();
  EXPECT_THROW(probe(slp, prime_field(5)->zero(), 3, ledger), UsageError);
  EXPECT_THROW(probe(slp, prime_field(5)->one(), 0, ledger), UsageError);
  EXPECT_THROW(probe(slp, f7->one(), 3, ledger), UsageError);
  EXPECT_EQ(ledger.probe_count(), 0u);
}

TEST(ProbeTest, MatchesSparseImage) {
  Rng rng(21);
  for (std::size_t s : {1, 2, 3}) {
    for (u64 q : {2, 7, 101}) {
      const ExtFieldPtr base = prime_field(q);
      const ExtFieldPtr k = random_extension(q, s, rng);
      for (int trial = 0; trial < 15; ++trial) {
        const SparsePoly f = random_sparse(base, rng.below(9), 5000, rng);
        const Slp slp = slp_from_sparse(f);
        const ExtFieldElement alpha = random_nonzero(k, rng);
        const std::size_t p = 1 + rng.below(50);
        ProbeLedger ledger;
        ASSERT_EQ(probe(slp, alpha, p, ledger), sparse_image(f, alpha, p))
            << "q=" << q << " s=" << s << " p=" << p;
        ASSERT_EQ(ledger.total_probe_size(), p * s);
      }
    }
  }
}

TEST(ProbeTest, RepeatedSquaringStaysCyclic) {
  std::vector<Instruction> code{ins(OpCode::kMul, Operand::input(), Operand::input())};
  for (std::size_t i = 1; i < 40; ++i) {
    code.push_back(ins(OpCode::kMul, Operand::result(i - 1), Operand::result(i - 1)));
  }
  const Slp slp(PrimeField(101), code);
  Rng rng(5);
  const ExtFieldPtr k = random_extension(101, 2, rng);
  const ExtFieldElement alpha = random_nonzero(k, rng);
  ProbeLedger ledger;
  const CyclicPoly out = probe(slp, alpha, 101, ledger);
  const BigInt e = BigInt(1) << 40;
  EXPECT_EQ(out, CyclicPoly::monomial(k, 101, alpha.pow(e), static_cast<std::size_t>(e % 101)));
}

TEST(ProbeLedgerTest, ConcurrentRecordingSumsExactly) {
  ProbeLedger ledger;
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < 4; ++t) {
    threads.emplace_back([&ledger, t] {
      for (std::size_t i = 1; i <= 1000; ++i) ledger.record(i, t + 1);
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(ledger.probe_count(), 4000u);
  EXPECT_EQ(ledger.total_probe_size(), 500500u * (1 + 2 + 3 + 4));
  u64 sum = 0;
  for (const ProbeRecord& r : ledger.records()) sum += r.degree();
  EXPECT_EQ(sum, ledger.total_probe_size());
}

TEST(KroneckerTest, Examples) {
  const std::vector<BigInt> a{3, 4};
  EXPECT_EQ(kronecker_pack(a, 10), BigInt(43));
  const std::vector<BigInt> b{7};
  EXPECT_EQ(kronecker_pack(b, 1000), BigInt(7));
  const std::vector<BigInt> c{1, 2, 3};
  EXPECT_EQ(kronecker_pack(c, 100), BigInt(30201));
  EXPECT_EQ(kronecker_unpack(43, 10, 2), a);
  EXPECT_EQ(kronecker_unpack(0, 17, 3), (std::vector<BigInt>{0, 0, 0}));
}

TEST(KroneckerTest, BoundViolations) {
  const std::vector<BigInt> a{3, 10};
  EXPECT_THROW(kronecker_pack(a, 10), BoundViolation);
  EXPECT_THROW(kronecker_unpack(100, 10, 2), BoundViolation);
}

TEST(KroneckerTest, RoundTrip) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const BigInt bound = BigInt(1) + rng.up_to(BigInt(1) << (1 + rng.below(80)));
    const std::size_t n = 1 + rng.below(6);
    std::vector<BigInt> v(n);
    for (BigInt& x : v) x = rng.up_to(bound - 1);
    ASSERT_EQ(kronecker_unpack(kronecker_pack(v, bound), bound, n), v);
  }
}

TEST(SlpTextTest, RoundTrip) {
  Rng rng(9);
  const ExtFieldPtr f101 = prime_field(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Slp slp = slp_from_sparse(random_sparse(f101, rng.below(6), 100000, rng));
    const std::string text = to_text(slp);
    const Slp back = parse_slp(text);
    EXPECT_EQ(back, slp);
    EXPECT_EQ(to_text(back), text);
  }
}

TEST(SlpTextTest, Format) {
  EXPECT_EQ(to_text(square_plus_three()), "q 5\nb1 <- z * z\nb2 <- b1 + 3\n");
  const Slp slp = parse_slp("q 7\n\nb1 <- z - 6\nb2 <- b1 * b1\n");
  EXPECT_EQ(slp.length(), 2u);
  EXPECT_EQ(eval_ring(slp, u64{0}, PrimeFieldRing{PrimeField(7)}), 1u);
}

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_slp(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(SlpTextTest, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("b1 <- z * z\n"), 1u);
  EXPECT_EQ(parse_error_line("q 6\nb1 <- z * z\n"), 1u);
  EXPECT_EQ(parse_error_line("q 5\nb1 <- z * z\nb2 <- b2 + 1\n"), 3u);
  EXPECT_EQ(parse_error_line("q 5\nb1 <- z / z\n"), 2u);
  EXPECT_EQ(parse_error_line("q 5\nb1 <- z * 5\n"), 2u);
  EXPECT_EQ(parse_error_line("q 5\nb1 <- z * x\n"), 2u);
  EXPECT_EQ(parse_error_line("q 5\nb2 <- z * z\n"), 2u);
  EXPECT_EQ(parse_error_line("q 5\nb1 <- z *\n"), 2u);
  EXPECT_EQ(parse_error_line("q 5\n"), 2u);
}

}  // namespace
}  // namespace sparse_interp
