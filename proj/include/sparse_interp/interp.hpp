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
#include <string>
#include <vector>

#include "sparse_interp/bigint.hpp"
#include "sparse_interp/ff.hpp"
#include "sparse_interp/image.hpp"
#include "sparse_interp/modpoly.hpp"
#include "sparse_interp/primes.hpp"
#include "sparse_interp/rng.hpp"
#include "sparse_interp/slp.hpp"

namespace sparse_interp {

struct Congruence {
  u64 residue;
  u64 modulus;
};

// Unique x in [0, prod moduli) with x = residue_k mod modulus_k. Repeated
// moduli must agree. Throws UsageError on an empty list, conflicting
// duplicates or non-coprime moduli.
BigInt crt_combine(std::span<const Congruence> congruences);

// Coefficients of one residue class across the m diversified images.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<ExtFieldElement> entries);

  std::span<const ExtFieldElement> entries() const { return entries_; }
  // Concatenated canonical encodings; defines equality and order.
  const std::string& key() const { return key_; }

  friend bool operator==(const CoefficientVector& a,
                         const CoefficientVector& b) {
    return a.key_ == b.key_;
  }
  friend auto operator<=>(const CoefficientVector& a,
                          const CoefficientVector& b) {
    return a.key_ <=> b.key_;
  }

 private:
  std::vector<ExtFieldElement> entries_;
  std::string key_;
};

struct Evidence {
  std::size_t prime_index;
  u64 residue;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

// Ordered map from coefficient vectors to the (prime index, residue) pairs
// that produced them.
class EvidenceDict {
 public:
  using Map = std::map<CoefficientVector, std::vector<Evidence>>;

  // Ignores an exact duplicate pair.
  void insert(const CoefficientVector& key, Evidence evidence);

  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  Map entries_;
};

// Everything one approximation round produced, for tracing and tests.
struct Approximation {
  SparsePoly poly;
  PrimeImages prime_images;
  ExtFieldPtr ext_field;
  std::vector<ExtFieldElement> alphas;
  std::size_t dictionary_keys = 0;
  // Keys with at least ell/2 evidence pairs, before the sanity filters.
  std::size_t voted_keys = 0;
  // Voted keys rejected for a repeated prime or an exponent above D.
  std::size_t rejected_keys = 0;
};

// Builds f** with #(g - f**) <= T/2 with probability above 1 - mu, where
// g = f - f_star.
Approximation build_approximation_detailed(const Slp& slp,
                                           const SparsePoly& f_star, u64 T,
                                           const BigInt& D,
                                           const Rational& mu, Rng& rng,
                                           ProbeLedger& ledger);

SparsePoly build_approximation(const Slp& slp, const SparsePoly& f_star,
                               u64 T, const BigInt& D, const Rational& mu,
                               Rng& rng, ProbeLedger& ledger);

// Recovers g = f - f_star assuming it has at most one term: the coefficient
// from g(1), the exponent from images at 2, 3, 5, ... until the product of
// the primes exceeds D. Throws EndgameInconsistent when an image shows more
// than one term or the exponent exceeds D.
SparsePoly single_term_endgame(const Slp& slp, const SparsePoly& f_star,
                               const BigInt& D, ProbeLedger& ledger);

struct PhaseTrace {
  enum class Kind { kRound, kEndgame };

  Kind kind = Kind::kRound;
  u64 T = 0;
  ParamSet params;            // unset for the endgame
  std::size_t candidates = 0; // primes probed by find_primes
  std::size_t terms_built = 0;
  // Half-open range of ledger records produced by this phase.
  std::size_t probe_begin = 0;
  std::size_t probe_end = 0;
  u64 probe_size = 0;
};

struct InterpolationResult {
  SparsePoly poly;
  ProbeLedger ledger;
  std::vector<PhaseTrace> trace;
};

// Interpolates the polynomial computed by slp from bounds T >= #f and
// D >= deg f. Correct with probability at least 1 - epsilon; throws
// EndgameInconsistent when a failure is detected. 0 < epsilon <= 1/2.
InterpolationResult majority_vote_interpolate(const Slp& slp, u64 T,
                                              const BigInt& D,
                                              const Rational& epsilon,
                                              Rng& rng);

}  // namespace sparse_interp
