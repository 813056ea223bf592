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
#include <vector>

#include "sparse_interp/bigint.hpp"
#include "sparse_interp/modpoly.hpp"
#include "sparse_interp/slp.hpp"

// Checks that need the unknown polynomial itself. Nothing on the
// interpolation path may call into this namespace.
namespace sparse_interp::oracle {

// Number of terms of g whose exponent shares its residue mod p with another
// term.
std::size_t collision_count(const SparsePoly& g, u64 p);

// The terms of g with exponent = residue (mod p).
struct TermBucket {
  u64 p;
  u64 residue;
  SparsePoly poly;
};

// Nonzero buckets of g for prime p, ordered by residue. They partition the
// terms of g.
std::vector<TermBucket> term_buckets(const SparsePoly& g, u64 p);

// f recovered deterministically from a single probe at alpha = 1 and
// p = D + 1, which is exact because no two exponents <= D collide.
SparsePoly dense_interpolate(const Slp& slp, const BigInt& D,
                             ProbeLedger& ledger);
SparsePoly dense_interpolate(const Slp& slp, const BigInt& D);

}  // namespace sparse_interp::oracle
