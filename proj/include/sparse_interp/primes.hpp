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
#include <vector>

#include "sparse_interp/bigint.hpp"
#include "sparse_interp/modpoly.hpp"
#include "sparse_interp/rng.hpp"
#include "sparse_interp/slp.hpp"

namespace sparse_interp {

// Parameters of one approximation round for bounds T >= #g, D >= deg g and
// failure bound mu:
//
//   lambda = max(21, ceil(40/3 (T - 1) ln D))
//   ell    = 2 ceil(log_lambda D)
//   gamma  = ceil(max(8 log_lambda D, 8 ln(1/mu)))
//   m      = ceil(log2(1/(2 mu)) + 2 log2 T + 2 log2(1 + ell/4))
//   s      = ceil(log_q(2D + 1))
struct ParamSet {
  u64 lambda = 0;
  u64 gamma = 0;
  u64 ell = 0;
  u64 m = 0;
  u64 s = 0;
  Rational mu;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

// lambda alone; defined for every T >= 1 and D >= 1.
u64 lambda_bound(u64 T, const BigInt& D);

// Throws UsageError unless T >= 2, D >= 2, q >= 2 and 0 < mu < 1/3.
ParamSet compute_params(u64 T, const BigInt& D, u64 q, const Rational& mu);

// Sieve of Eratosthenes; all primes in [a, b] ascending.
std::vector<u64> primes_in_range(u64 a, u64 b);

// gamma distinct primes from [lambda, 2 lambda] sampled uniformly without
// replacement when gamma <= 3 lambda / (5 ln lambda), otherwise every prime
// in that range.
std::vector<u64> choose_primes(u64 lambda, u64 gamma, Rng& rng);

struct PrimeImages {
  ParamSet params;
  // Every prime that was probed, in sampling order.
  std::vector<u64> candidates;
  // The ell candidates with the most terms in their alpha = 1 image, with
  // ties broken by the larger prime.
  std::vector<u64> primes;
  std::vector<CyclicPoly> images;
};

// Probes g = f - f_star at alpha = 1 modulo z^p - 1 for each candidate prime
// and keeps the ell images with the most nonzero terms. With probability
// above 1 - mu every kept prime has fewer than T/2 colliding terms.
PrimeImages find_primes(const Slp& slp, const SparsePoly& f_star, u64 T,
                        const BigInt& D, const Rational& mu, Rng& rng,
                        ProbeLedger& ledger);

}  // namespace sparse_interp
