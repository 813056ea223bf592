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

#include "sparse_interp/primes.hpp"

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "sparse_interp/errors.hpp"
#include "sparse_interp/oracle.hpp"
#include "sparse_interp/slp.hpp"
#include "test_util.hpp"

namespace sparse_interp {
namespace {

using testing::prime_field;
using testing::random_sparse;

std::vector<u64> primes_by_trial_division(u64 a, u64 b) {
  std::vector<u64> out;
  for (u64 n = std::max<u64>(a, 2); n <= b; ++n) {
    bool prime = true;
    for (u64 d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

TEST(ParamsTest, HandDerivedValues) {
  const ParamSet p = compute_params(2, 100, 101, Rational(1, 20));
  EXPECT_EQ(p.lambda, 62u);
  EXPECT_EQ(p.ell, 4u);
  EXPECT_EQ(p.m, 8u);
  EXPECT_EQ(p.s, 2u);
  // max(ceil(8 log_62 100), ceil(8 ln 20)) = max(9, 24)
  EXPECT_EQ(p.gamma, 24u);
  EXPECT_EQ(p.mu, Rational(1, 20));
  EXPECT_EQ(compute_params(8, BigInt(1) << 20, 101, Rational(1, 20)).lambda, 1294u);
  EXPECT_EQ(lambda_bound(8, BigInt(1) << 20), 1294u);
  EXPECT_EQ(lambda_bound(1, 1000000), 21u);
  EXPECT_EQ(lambda_bound(2, 2), 21u);
}

TEST(ParamsTest, RejectsBadInputs) {
  EXPECT_THROW(compute_params(1, 100, 101, Rational(1, 20)), UsageError);
  EXPECT_THROW(compute_params(2, 1, 101, Rational(1, 20)), UsageError);
  EXPECT_THROW(compute_params(2, 100, 101, Rational(0)), UsageError);
  EXPECT_THROW(compute_params(2, 100, 101, Rational(1, 3)), UsageError);
  EXPECT_NO_THROW(compute_params(2, 100, 101, Rational(33, 100)));
}

// Reference formulas in long double, skipping values whose ceiling sits
// within 1e-6 of an integer.
TEST(ParamsTest, AgreeWithFloatingReferenceAwayFromBoundaries) {
  int compared = 0;
  for (u64 T : {2, 3, 4, 7, 8, 16, 33, 100}) {
    for (u64 D : {2, 10, 99, 100, 1000, 10007, 1000000}) {
      for (u64 q : {2, 101, 65537}) {
        for (const Rational& mu : {Rational(1, 20), Rational(1, 7), Rational(1, 1000)}) {
          const long double mu_f = static_cast<long double>(mu);
          const long double lnD = std::log(static_cast<long double>(D));
          auto ceil_safe = [](long double x, u64& out) {
            const long double c = std::ceil(x);
            if (c - x < 1e-6L || x - std::floor(x) < 1e-6L) return false;
            out = static_cast<u64>(c);
            return true;
          };
          u64 lam_raw = 0;
          if (!ceil_safe(40.0L / 3 * (T - 1) * lnD, lam_raw)) continue;
          const u64 lambda = std::max<u64>(21, lam_raw);
          const long double lnl = std::log(static_cast<long double>(lambda));
          u64 half_ell = 0, g1 = 0, g2 = 0, m = 0, s = 0;
          if (!ceil_safe(lnD / lnl, half_ell)) continue;
          if (!ceil_safe(8 * lnD / lnl, g1)) continue;
          if (!ceil_safe(8 * std::log(1 / mu_f), g2)) continue;
          const u64 ell = 2 * half_ell;
          if (!ceil_safe(std::log2(1 / (2 * mu_f)) + 2 * std::log2((long double)T) +
                             2 * std::log2(1 + ell / 4.0L),
                         m))
            continue;
          if (!ceil_safe(std::log((long double)(2 * D + 1)) / std::log((long double)q), s))
            continue;
          const ParamSet p = compute_params(T, D, q, mu);
          ASSERT_EQ(p.lambda, lambda) << T << " " << D;
          ASSERT_EQ(p.ell, ell) << T << " " << D;
          ASSERT_EQ(p.gamma, std::max(g1, g2)) << T << " " << D;
          ASSERT_EQ(p.m, m) << T << " " << D;
          ASSERT_EQ(p.s, s) << D << " " << q;
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 300);
}

TEST(ParamsTest, Invariants) {
  for (u64 T = 2; T < 40; T += 3) {
    for (const BigInt& D : {BigInt(2), BigInt(1000), BigInt(1) << 64, BigInt(1) << 200}) {
      const ParamSet p = compute_params(T, D, 101, Rational(1, 10));
      ASSERT_GE(p.lambda, 21u);
      ASSERT_EQ(p.ell % 2, 0u);
      ASSERT_GE(p.gamma, p.ell);
      ASSERT_GE(p.s, 1u);
      // Any ell/2 primes from [lambda, 2 lambda] multiply to at least D.
      BigInt power = 1;
      for (u64 i = 0; i < p.ell / 2; ++i) power *= p.lambda;
      ASSERT_GE(power, D);
    }
  }
}

TEST(PrimesInRangeTest, Examples) {
  EXPECT_EQ(primes_in_range(21, 42), (std::vector<u64>{23, 29, 31, 37, 41}));
  EXPECT_TRUE(primes_in_range(24, 28).empty());
  EXPECT_EQ(primes_in_range(2, 2), std::vector<u64>{2});
  EXPECT_THROW(primes_in_range(10, 5), UsageError);
}

TEST(PrimesInRangeTest, MatchesTrialDivision) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const u64 a = 2 + rng.below(5000);
    const u64 b = a + rng.below(3000);
    ASSERT_EQ(primes_in_range(a, b), primes_by_trial_division(a, b)) << a << " " << b;
  }
}

TEST(ChoosePrimesTest, FallbackReturnsWholeInterval) {
  Rng rng(1);
  // gamma 24 exceeds floor(3 * 62 / (5 ln 62)) = 9.
  const std::vector<u64> got = choose_primes(62, 24, rng);
  EXPECT_EQ(got, primes_by_trial_division(62, 124));
  EXPECT_EQ(got.size(), 12u);
}

TEST(ChoosePrimesTest, ThresholdIsInclusive) {
  // floor(3000 / (5 ln 1000)) = 86 and there are 135 primes in [1000, 2000].
  Rng rng(2);
  EXPECT_EQ(choose_primes(1000, 86, rng).size(), 86u);
  EXPECT_EQ(choose_primes(1000, 87, rng).size(), 135u);
  const std::vector<u64> one = choose_primes(1000, 1, rng);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(is_prime_u64(one[0]));
  EXPECT_GE(one[0], 1000u);
  EXPECT_LE(one[0], 2000u);
}

TEST(ChoosePrimesTest, DistinctInRangeAndBounded) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const u64 lambda = 21 + rng.below(3000);
    const u64 gamma = 1 + rng.below(200);
    const std::vector<u64> got = choose_primes(lambda, gamma, rng);
    const std::set<u64> distinct(got.begin(), got.end());
    ASSERT_EQ(distinct.size(), got.size());
    for (u64 p : got) {
      ASSERT_TRUE(is_prime_u64(p));
      ASSERT_GE(p, lambda);
      ASSERT_LE(p, 2 * lambda);
    }
    const double l = static_cast<double>(lambda);
    const u64 cap = static_cast<u64>(std::ceil(7 * l / (5 * std::log(l))));
    ASSERT_LE(got.size(), std::max(gamma, cap));
  }
}

TEST(ChoosePrimesTest, SingleDrawIsUniform) {
  // 21 primes in [100, 200]; chi-squared with 20 degrees of freedom.
  const std::vector<u64> pool = primes_in_range(100, 200);
  ASSERT_EQ(pool.size(), 21u);
  std::map<u64, int> counts;
  Rng rng(77);
  constexpr int kDraws = 21000;
  for (int i = 0; i < kDraws; ++i) ++counts[choose_primes(100, 1, rng)[0]];
  double chi2 = 0;
  for (u64 p : pool) {
    const double d = counts[p] - 1000.0;
    chi2 += d * d / 1000.0;
  }
  EXPECT_LT(chi2, 45.315);
}

TEST(FindPrimesTest, StructureAndOrdering) {
  Rng rng(5);
  const ExtFieldPtr f101 = prime_field(101);
  for (int trial = 0; trial < 10; ++trial) {
    const SparsePoly g = random_sparse(f101, 8, 10000, rng);
    const Slp slp = slp_from_sparse(g);
    ProbeLedger ledger;
    Rng run = rng.split("run", trial);
    const PrimeImages out =
        find_primes(slp, SparsePoly(f101), 8, 10000, Rational(1, 20), run, ledger);
    const ParamSet& params = out.params;
    ASSERT_EQ(out.primes.size(), params.ell);
    ASSERT_EQ(out.images.size(), params.ell);
    ASSERT_EQ(ledger.probe_count(), out.candidates.size());
    u64 expected_size = 0;
    for (u64 p : out.candidates) expected_size += p;
    ASSERT_EQ(ledger.total_probe_size(), expected_size);

    std::map<u64, std::size_t> count_of;
    for (u64 p : out.candidates) {
      count_of[p] = term_count(sparse_image(g, f101->one(), p));
    }
    for (std::size_t i = 0; i < out.primes.size(); ++i) {
      const u64 p = out.primes[i];
      ASSERT_GE(p, params.lambda);
      ASSERT_LE(p, 2 * params.lambda);
      ASSERT_EQ(out.images[i], sparse_image(g, f101->one(), p));
      if (i > 0) {
        const u64 prev = out.primes[i - 1];
        ASSERT_TRUE(count_of[prev] > count_of[p] ||
                    (count_of[prev] == count_of[p] && prev > p));
      }
    }
    // Nothing left out beats the last selected prime.
    const u64 last = out.primes.back();
    for (u64 p : out.candidates) {
      if (std::find(out.primes.begin(), out.primes.end(), p) != out.primes.end()) continue;
      ASSERT_TRUE(count_of[p] < count_of[last] ||
                  (count_of[p] == count_of[last] && p < last));
    }
  }
}

TEST(FindPrimesTest, ZeroDifference) {
  Rng rng(6);
  const ExtFieldPtr f101 = prime_field(101);
  const SparsePoly g = random_sparse(f101, 5, 10000, rng);
  ProbeLedger ledger;
  const PrimeImages out =
      find_primes(slp_from_sparse(g), g, 8, 10000, Rational(1, 20), rng, ledger);
  for (const CyclicPoly& image : out.images) EXPECT_TRUE(image.is_zero());
}

TEST(FindPrimesTest, SeedDeterministic) {
  const ExtFieldPtr f101 = prime_field(101);
  Rng gen(7);
  const Slp slp = slp_from_sparse(random_sparse(f101, 8, 10000, gen));
  ProbeLedger l1, l2;
  Rng a(99), b(99);
  const PrimeImages x = find_primes(slp, SparsePoly(f101), 8, 10000, Rational(1, 20), a, l1);
  const PrimeImages y = find_primes(slp, SparsePoly(f101), 8, 10000, Rational(1, 20), b, l2);
  EXPECT_EQ(x.candidates, y.candidates);
  EXPECT_EQ(x.primes, y.primes);
}

// Monte Carlo: all returned primes have fewer than T/2 collisions with
// frequency at least 1 - mu - 0.05.
TEST(FindPrimesTest, ReturnedPrimesAreOkWithHighProbability) {
  const ExtFieldPtr f101 = prime_field(101);
  Rng rng(8);
  constexpr int kTrials = 200;
  int good = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const SparsePoly g = random_sparse(f101, 8, 10000, rng);
    ProbeLedger ledger;
    Rng run = rng.split("trial", trial);
    const PrimeImages out =
        find_primes(slp_from_sparse(g), SparsePoly(f101), 8, 10000, Rational(1, 20), run, ledger);
    bool ok = true;
    for (u64 p : out.primes) ok = ok && 2 * oracle::collision_count(g, p) < 8;
    good += ok;
  }
  EXPECT_GE(good, static_cast<int>(kTrials * 0.90));
}

// Deterministic checks over every prime in [lambda, 2 lambda].
TEST(CollisionBoundTest, FewerThanHalfThePrimesHaveManyCollisions) {
  const ExtFieldPtr f101 = prime_field(101);
  Rng rng(9);
  for (u64 T : {4, 8, 16}) {
    const u64 lambda = lambda_bound(T, 10000);
    const std::vector<u64> pool = primes_in_range(lambda, 2 * lambda);
    for (int trial = 0; trial < 5; ++trial) {
      const SparsePoly g = random_sparse(f101, T, 10000, rng);
      std::size_t bad = 0;
      for (u64 p : pool) bad += 4 * oracle::collision_count(g, p) >= T;
      ASSERT_LT(2 * bad, pool.size());
    }
  }
}

TEST(CollisionBoundTest, TermCountOrderBoundsCollisions) {
  const ExtFieldPtr f101 = prime_field(101);
  Rng rng(10);
  // Dense degree so collisions actually occur.
  for (int trial = 0; trial < 5; ++trial) {
    const SparsePoly g = random_sparse(f101, 30, 2000, rng);
    const std::vector<u64> pool = primes_in_range(30, 60);
    for (u64 p : pool) {
      for (u64 r : pool) {
        const std::size_t tp = term_count(sparse_image(g, f101->one(), p));
        const std::size_t tr = term_count(sparse_image(g, f101->one(), r));
        if (tp >= tr) {
          ASSERT_LE(oracle::collision_count(g, p), 2 * oracle::collision_count(g, r));
        }
      }
    }
  }
}

}  // namespace
}  // namespace sparse_interp
