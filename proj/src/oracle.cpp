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

#include "sparse_interp/oracle.hpp"

#include "sparse_interp/errors.hpp"

namespace sparse_interp::oracle {

std::size_t collision_count(const SparsePoly& g, u64 p) {
  std::map<u64, std::size_t> per_residue;
  for (const auto& [e, c] : g.terms()) ++per_residue[mod_u64(e, p)];
  std::size_t colliding = 0;
  for (const auto& [residue, count] : per_residue) {
    if (count >= 2) colliding += count;
  }
  return colliding;
}

std::vector<TermBucket> term_buckets(const SparsePoly& g, u64 p) {
  std::map<u64, SparsePoly> buckets;
  for (const auto& [e, c] : g.terms()) {
    const u64 u = mod_u64(e, p);
    buckets.try_emplace(u, g.field()).first->second.add_term(e, c);
  }
  std::vector<TermBucket> out;
  for (auto& [u, poly] : buckets) out.push_back({p, u, std::move(poly)});
  return out;
}

SparsePoly dense_interpolate(const Slp& slp, const BigInt& D,
                             ProbeLedger& ledger) {
  if (D < 0) throw UsageError("degree bound must be nonnegative");
  const std::size_t p = static_cast<std::size_t>(to_u64(D + 1));
  const ExtFieldPtr base = ExtField::prime(slp.field());
  return probe(slp, base->one(), p, ledger).to_sparse();
}

SparsePoly dense_interpolate(const Slp& slp, const BigInt& D) {
  ProbeLedger ledger;
  return dense_interpolate(slp, D, ledger);
}

}  // namespace sparse_interp::oracle
