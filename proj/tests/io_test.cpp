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

#include "sparse_interp/poly_io.hpp"

#include <set>

#include "gtest/gtest.h"
#include "sparse_interp/bigint.hpp"
#include "sparse_interp/errors.hpp"
#include "sparse_interp/rng.hpp"
#include "test_util.hpp"

namespace sparse_interp {
namespace {

using testing::poly_of;
using testing::prime_field;
using testing::random_extension;
using testing::random_sparse;

TEST(BigIntTest, ParseAndFormat) {
  EXPECT_EQ(parse_bigint("0"), BigInt(0));
  EXPECT_EQ(to_string(parse_bigint("123456789012345678901234567890")),
            "123456789012345678901234567890");
  EXPECT_THROW(parse_bigint(""), UsageError);
  EXPECT_THROW(parse_bigint("-3"), UsageError);
  EXPECT_THROW(parse_bigint("1e5"), UsageError);
}

TEST(BigIntTest, Rationals) {
  EXPECT_EQ(parse_rational("1/10"), Rational(1, 10));
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(to_string(Rational(2, 20)), "1/10");
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("."), UsageError);
  EXPECT_THROW(parse_rational("a/b"), UsageError);
}

TEST(BigIntTest, HelpersAndCeilLog) {
  EXPECT_EQ(mod_u64(BigInt(1) << 100, 101), static_cast<u64>((BigInt(1) << 100) % 101));
  EXPECT_EQ(to_u64(BigInt(42)), 42u);
  EXPECT_THROW(to_u64(BigInt(1) << 64), BoundViolation);
  EXPECT_EQ(ceil_log(2, 1), 0u);
  EXPECT_EQ(ceil_log(2, 8), 3u);
  EXPECT_EQ(ceil_log(2, 9), 4u);
  EXPECT_EQ(ceil_log(62, 100), 2u);
  EXPECT_EQ(ceil_log(101, 201), 2u);
  EXPECT_THROW(ceil_log(1, 5), UsageError);
}

TEST(RngTest, DeterministicAndSplitIndependent) {
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  const Rng base(5);
  EXPECT_EQ(base.split("x", 1).seed(), base.split("x", 1).seed());
  std::set<u64> seeds;
  for (const char* label : {"round", "find_primes", "modulus", "alphas", "gen"}) {
    for (u64 i = 0; i < 4; ++i) seeds.insert(base.split(label, i).seed());
  }
  EXPECT_EQ(seeds.size(), 20u);
  EXPECT_EQ(base.split("x").seed(),
            splitmix64(splitmix64(5 ^ fnv1a64("x")) ^ 0));
}

TEST(RngTest, KnownHashValues) {
  // FNV-1a 64 reference values.
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  // SplitMix64 first output for state 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(RngTest, BelowAndUpToRanges) {
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const BigInt big = rng.up_to(BigInt(1) << 130);
    EXPECT_GE(big, 0);
    EXPECT_LE(big, BigInt(1) << 130);
    EXPECT_LE(rng.up_to(BigInt(3)), 3);
  }
  EXPECT_EQ(rng.up_to(BigInt(0)), 0);
}

TEST(RngTest, UpToIsUniform) {
  Rng rng(7);
  std::array<int, 6> counts{};
  for (int i = 0; i < 6000; ++i) ++counts[static_cast<int>(rng.up_to(BigInt(5)))];
  double chi2 = 0;
  for (int c : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  // 5 degrees of freedom, upper 0.001 quantile.
  EXPECT_LT(chi2, 20.515);
}

TEST(PolyIoTest, PrimeFieldFormat) {
  const ExtFieldPtr f7 = prime_field(7);
  const SparsePoly f = poly_of(f7, {{3, 10}, {5, 3}});
  EXPECT_EQ(to_text(f), "q 7\n5 3\n3 10\n");
  EXPECT_EQ(parse_poly("q 7\n\n3 10\n5 3\n"), f);
  EXPECT_EQ(to_text(SparsePoly(f7)), "q 7\n");
  EXPECT_TRUE(parse_poly("q 7\n").is_zero());
}

TEST(PolyIoTest, ExtensionFormatRoundTrip) {
  Rng rng(8);
  for (u64 q : {2, 3, 101}) {
    const ExtFieldPtr k = random_extension(q, 3, rng);
    SparsePoly f(k);
    for (int i = 0; i < 5; ++i) {
      f.add_term((BigInt(1) << 90) + rng.below(1000), random_nonzero(k, rng));
    }
    const std::string text = to_text(f);
    EXPECT_EQ(text.rfind("q " + std::to_string(q) + "\ns 3\nmodulus ", 0), 0u);
    const SparsePoly back = parse_poly(text);
    EXPECT_EQ(back, f);
    EXPECT_EQ(to_text(back), text);
  }
}

TEST(PolyIoTest, ExplicitDegreeOneHeader) {
  EXPECT_EQ(parse_poly("q 7\ns 1\nmodulus 0 1\n4 2\n"),
            poly_of(prime_field(7), {{4, 2}}));
}

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(PolyIoTest, ParseErrors) {
  EXPECT_EQ(parse_error_line(""), 1u);
  EXPECT_EQ(parse_error_line("p 7\n"), 1u);
  EXPECT_EQ(parse_error_line("q 8\n"), 1u);
  EXPECT_EQ(parse_error_line("q 7\n3\n"), 2u);
  EXPECT_EQ(parse_error_line("q 7\n7 3\n"), 2u);
  EXPECT_EQ(parse_error_line("q 7\n0 3\n"), 2u);
  EXPECT_EQ(parse_error_line("q 7\n1 3\n2 3\n"), 3u);
  EXPECT_EQ(parse_error_line("q 7\n1 x\n"), 2u);
  EXPECT_EQ(parse_error_line("q 5\ns 2\nmodulus 1 0 1\n"), 3u);
  EXPECT_EQ(parse_error_line("q 5\ns 2\n1 1 4\n"), 3u);
  EXPECT_EQ(parse_error_line("q 7\ns 1\nmodulus 1 1\n"), 3u);
}

}  // namespace
}  // namespace sparse_interp
