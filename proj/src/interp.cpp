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

#include "sparse_interp/interp.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "sparse_interp/errors.hpp"
#include "sparse_interp/parallel.hpp"

namespace sparse_interp {
namespace {

// a^{-1} mod m for gcd(a, m) = 1, m >= 2.
u64 inverse_mod(u64 a, u64 m) {
  __int128 r0 = m, r1 = a % m;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 quot = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - quot * r1);
    std::tie(t0, t1) = std::pair(t1, t0 - quot * t1);
  }
  if (r0 != 1) throw UsageError("moduli are not coprime");
  if (t0 < 0) t0 += m;
  return static_cast<u64>(t0);
}

u64 next_prime(u64 n) {
  do {
    ++n;
  } while (!is_prime_u64(n));
  return n;
}

}  // namespace

BigInt crt_combine(std::span<const Congruence> congruences) {
  if (congruences.empty()) throw UsageError("no congruences to combine");
  BigInt x = 0;
  BigInt modulus = 1;
  for (const Congruence& c : congruences) {
    if (c.modulus == 0) throw UsageError("modulus must be positive");
    const u64 r = c.residue % c.modulus;
    const u64 x_mod = mod_u64(x, c.modulus);
    const u64 big_mod = mod_u64(modulus, c.modulus);
    if (big_mod == 0) {
      // The modulus is already covered, e.g. a repeated prime.
      if (x_mod != r) throw UsageError("conflicting congruences");
      continue;
    }
    const u64 m = c.modulus;
    const u64 diff = r >= x_mod ? r - x_mod : r + (m - x_mod);
    const u64 t = static_cast<u64>(static_cast<unsigned __int128>(diff) *
                                   inverse_mod(big_mod, m) % m);
    x += modulus * t;
    modulus *= m;
  }
  return x;
}

// ------------------------------------------------------ evidence dictionary

CoefficientVector::CoefficientVector(std::vector<ExtFieldElement> entries)
    : entries_(std::move(entries)) {
  for (const ExtFieldElement& e : entries_) key_ += e.encode();
}

void EvidenceDict::insert(const CoefficientVector& key, Evidence evidence) {
  std::vector<Evidence>& list = entries_[key];
  if (std::find(list.begin(), list.end(), evidence) == list.end()) {
    list.push_back(evidence);
  }
}

// ------------------------------------------------------ build_approximation

Approximation build_approximation_detailed(const Slp& slp,
                                           const SparsePoly& f_star, u64 T,
                                           const BigInt& D,
                                           const Rational& mu, Rng& rng,
                                           ProbeLedger& ledger) {
  Rng prime_rng = rng.split("find_primes");
  PrimeImages found = find_primes(slp, f_star, T, D, mu, prime_rng, ledger);
  const ParamSet& params = found.params;
  const std::size_t ell = found.primes.size();
  const std::size_t m = params.m;

  Rng modulus_rng = rng.split("modulus");
  const PrimeField base = slp.field();
  ExtFieldPtr field =
      ExtField::create(base, find_irreducible(base, params.s, modulus_rng));

  Rng alpha_rng = rng.split("alphas");
  std::vector<ExtFieldElement> alphas;
  alphas.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    alphas.push_back(random_nonzero(field, alpha_rng));
  }

  // images[i * m + j] = g(alpha_j z) mod (z^{p_i} - 1)
  std::vector<std::optional<CyclicPoly>> images(ell * m);
  parallel_for(ell * m, [&](std::size_t idx) {
    const std::size_t i = idx / m;
    const std::size_t j = idx % m;
    images[idx] = compute_image(slp, f_star, alphas[j], found.primes[i], ledger);
  });

  EvidenceDict tuples;
  for (std::size_t i = 0; i < ell; ++i) {
    const std::size_t p = found.primes[i];
    for (std::size_t e = 0; e < p; ++e) {
      bool present = false;
      for (std::size_t j = 0; j < m && !present; ++j) {
        present = !field->is_zero(images[i * m + j]->coeff_span(e));
      }
      if (!present) continue;
      std::vector<ExtFieldElement> entries;
      entries.reserve(m);
      for (std::size_t j = 0; j < m; ++j) {
        entries.push_back(images[i * m + j]->coeff(e));
      }
      tuples.insert(CoefficientVector(std::move(entries)), {i, e});
    }
  }

  Approximation out{SparsePoly(ExtField::prime(base)), std::move(found),
                    field, std::move(alphas)};
  out.dictionary_keys = tuples.size();
  const std::size_t threshold = ell / 2;
  for (const auto& [key, list] : tuples.entries()) {
    if (list.size() < threshold) continue;
    ++out.voted_keys;
    // A genuine term leaves at most one residue per prime.
    bool repeated = false;
    for (std::size_t k = 1; k < list.size(); ++k) {
      repeated = repeated || list[k].prime_index == list[k - 1].prime_index;
    }
    if (repeated) {
      ++out.rejected_keys;
      continue;
    }
    // Lists are filled in increasing prime index, so the first ell/2 pairs
    // are those with the smallest index.
    std::vector<Congruence> congruences;
    for (std::size_t k = 0; k < threshold; ++k) {
      congruences.push_back(
          {list[k].residue, out.prime_images.primes[list[k].prime_index]});
    }
    const BigInt e = crt_combine(congruences);
    if (e > D) {
      ++out.rejected_keys;
      continue;
    }
    const Evidence& first = list.front();
    out.poly.add_term(
        e, out.prime_images.images[first.prime_index].coeff(first.residue));
  }
  return out;
}

SparsePoly build_approximation(const Slp& slp, const SparsePoly& f_star,
                               u64 T, const BigInt& D, const Rational& mu,
                               Rng& rng, ProbeLedger& ledger) {
  return build_approximation_detailed(slp, f_star, T, D, mu, rng, ledger).poly;
}

// ------------------------------------------------------------------ endgame

SparsePoly single_term_endgame(const Slp& slp, const SparsePoly& f_star,
                               const BigInt& D, ProbeLedger& ledger) {
  const ExtFieldPtr base = ExtField::prime(slp.field());
  const ExtFieldElement one = base->one();
  const ExtFieldElement c = compute_image(slp, f_star, one, 1, ledger).coeff(0);
  if (c.is_zero()) return f_star;

  std::vector<Congruence> congruences;
  BigInt product = 1;
  for (u64 p = 2; product <= D; p = next_prime(p)) {
    const CyclicPoly image = compute_image(slp, f_star, one, p, ledger);
    const std::vector<std::size_t> support = image.support();
    if (support.size() != 1) {
      throw EndgameInconsistent("image modulo z^" + std::to_string(p) +
                                " - 1 has " + std::to_string(support.size()) +
                                " terms, expected 1");
    }
    if (image.coeff(support[0]) != c) {
      throw EndgameInconsistent("coefficient modulo z^" + std::to_string(p) +
                                " - 1 disagrees with g(1)");
    }
    congruences.push_back({support[0], p});
    product *= p;
  }
  const BigInt e = congruences.empty() ? BigInt(0) : crt_combine(congruences);
  if (e > D) {
    throw EndgameInconsistent("recovered exponent " + e.str() +
                              " exceeds the degree bound");
  }
  SparsePoly out = f_star;
  out.add_term(e, c);
  return out;
}

// ---------------------------------------------------------------- driver

InterpolationResult majority_vote_interpolate(const Slp& slp, u64 T,
                                              const BigInt& D,
                                              const Rational& epsilon,
                                              Rng& rng) {
  if (T < 1) throw UsageError("term bound T must be at least 1");
  if (D < 1) throw UsageError("degree bound D must be at least 1");
  if (epsilon <= 0 || epsilon > Rational(1, 2)) {
    throw UsageError("epsilon must lie in (0, 1/2]");
  }

  const u64 rounds_bound = std::max<u64>(1, ceil_log(BigInt(2), BigInt(T)));
  const Rational mu = epsilon / (2 * rounds_bound);
  // compute_params needs D >= 2; a larger bound is still a valid bound.
  const BigInt round_D = std::max(D, BigInt(2));

  InterpolationResult result{SparsePoly(ExtField::prime(slp.field())), {}, {}};
  ProbeLedger& ledger = result.ledger;

  u64 bound = T;
  for (u64 round = 0; bound > 1; ++round) {
    PhaseTrace trace;
    trace.kind = PhaseTrace::Kind::kRound;
    trace.T = bound;
    trace.probe_begin = ledger.probe_count();
    const u64 size_before = ledger.total_probe_size();

    Rng round_rng = rng.split("round", round);
    Approximation approx = build_approximation_detailed(
        slp, result.poly, bound, round_D, mu / 2, round_rng, ledger);
    result.poly += approx.poly;

    trace.params = approx.prime_images.params;
    trace.candidates = approx.prime_images.candidates.size();
    trace.terms_built = approx.poly.term_count();
    trace.probe_end = ledger.probe_count();
    trace.probe_size = ledger.total_probe_size() - size_before;
    result.trace.push_back(trace);
    bound /= 2;
  }

  PhaseTrace endgame;
  endgame.kind = PhaseTrace::Kind::kEndgame;
  endgame.T = 1;
  endgame.probe_begin = ledger.probe_count();
  const u64 size_before = ledger.total_probe_size();
  SparsePoly before = result.poly;
  try {
    result.poly = single_term_endgame(slp, result.poly, D, ledger);
  } catch (const EndgameInconsistent& e) {
    throw EndgameInconsistent(e.what(), ledger.probe_count(),
                              ledger.total_probe_size());
  }
  endgame.terms_built = result.poly == before ? 0 : 1;
  endgame.probe_end = ledger.probe_count();
  endgame.probe_size = ledger.total_probe_size() - size_before;
  result.trace.push_back(endgame);
  return result;
}

}  // namespace sparse_interp
