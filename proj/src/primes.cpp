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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sparse_interp/errors.hpp"
#include "sparse_interp/image.hpp"
#include "sparse_interp/parallel.hpp"

namespace sparse_interp {
namespace {

// ~100 decimal digits. The transcendental quantities below (multiples of
// ln D and ln(1/mu)) are never integers for valid inputs, so this much
// precision decides each ceiling correctly.
using Real = boost::multiprecision::cpp_bin_float_100;

u64 ceil_real(const Real& x) {
  return static_cast<u64>(boost::multiprecision::ceil(x));
}

Real to_real(const BigInt& x) { return Real(x); }

Real to_real(const Rational& x) {
  return Real(boost::multiprecision::numerator(x)) /
         Real(boost::multiprecision::denominator(x));
}

}  // namespace

u64 lambda_bound(u64 T, const BigInt& D) {
  if (T < 1 || D < 1) throw UsageError("lambda needs T >= 1 and D >= 1");
  const Real x = Real(40) / 3 * Real(T - 1) * boost::multiprecision::log(to_real(D));
  return std::max<u64>(21, ceil_real(x));
}

ParamSet compute_params(u64 T, const BigInt& D, u64 q, const Rational& mu) {
  if (T < 2) throw UsageError("term bound T must be at least 2");
  if (D < 2) throw UsageError("degree bound D must be at least 2");
  if (q < 2) throw UsageError("field size q must be at least 2");
  if (mu <= 0 || mu >= Rational(1, 3)) {
    throw UsageError("failure bound mu must lie in (0, 1/3)");
  }

  ParamSet params;
  params.mu = mu;
  params.lambda = lambda_bound(T, D);

  const BigInt lambda(params.lambda);
  // ceil(log_lambda D) as the least k with lambda^k >= D; likewise below.
  params.ell = 2 * ceil_log(lambda, D);

  const u64 gamma_degree = ceil_log(lambda, boost::multiprecision::pow(D, 8));
  const u64 gamma_mu =
      ceil_real(8 * boost::multiprecision::log(1 / to_real(mu)));
  params.gamma = std::max(gamma_degree, gamma_mu);

  // 2^m >= T^2 (1 + ell/4)^2 / (2 mu)  <=>  2^m * 32 a >= T^2 (4 + ell)^2 b
  // for mu = a / b.
  const BigInt a = boost::multiprecision::numerator(mu);
  const BigInt b = boost::multiprecision::denominator(mu);
  const BigInt target = BigInt(T) * T * (4 + params.ell) * (4 + params.ell) * b;
  BigInt lhs = 32 * a;
  params.m = 0;
  while (lhs < target) {
    lhs *= 2;
    ++params.m;
  }

  params.s = ceil_log(BigInt(q), 2 * D + 1);
  return params;
}

std::vector<u64> primes_in_range(u64 a, u64 b) {
  if (a < 2 || a > b) throw UsageError("primes_in_range needs 2 <= a <= b");
  std::vector<bool> composite(b + 1, false);
  for (u64 i = 2; i * i <= b; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= b; j += i) composite[j] = true;
  }
  std::vector<u64> out;
  for (u64 n = a; n <= b; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

std::vector<u64> choose_primes(u64 lambda, u64 gamma, Rng& rng) {
  if (lambda < 21) throw UsageError("lambda must be at least 21");
  std::vector<u64> pool = primes_in_range(lambda, 2 * lambda);
  const long double l = static_cast<long double>(lambda);
  const bool sample = static_cast<long double>(gamma) * 5 * std::log(l) <= 3 * l;
  if (!sample || gamma >= pool.size()) return pool;
  // Partial Fisher-Yates: the first gamma slots are a uniform sample.
  for (std::size_t i = 0; i < gamma; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  }
  pool.resize(gamma);
  return pool;
}

PrimeImages find_primes(const Slp& slp, const SparsePoly& f_star, u64 T,
                        const BigInt& D, const Rational& mu, Rng& rng,
                        ProbeLedger& ledger) {
  PrimeImages out;
  out.params = compute_params(T, D, slp.field().modulus(), mu);
  out.candidates = choose_primes(out.params.lambda, out.params.gamma, rng);
  const std::size_t n = out.candidates.size();
  if (n < out.params.ell) {
    throw InternalError("fewer candidate primes than required images");
  }

  const ExtFieldPtr base = ExtField::prime(slp.field());
  const ExtFieldElement one = base->one();
  std::vector<std::optional<CyclicPoly>> images(n);
  parallel_for(n, [&](std::size_t k) {
    images[k] = compute_image(slp, f_star, one, out.candidates[k], ledger);
  });

  std::vector<std::size_t> counts(n);
  for (std::size_t k = 0; k < n; ++k) counts[k] = images[k]->term_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (counts[x] != counts[y]) return counts[x] > counts[y];
    return out.candidates[x] > out.candidates[y];
  });

  for (std::size_t r = 0; r < out.params.ell; ++r) {
    out.primes.push_back(out.candidates[order[r]]);
    out.images.push_back(std::move(*images[order[r]]));
  }
  return out;
}

}  // namespace sparse_interp
