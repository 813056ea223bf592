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

#include "sparse_interp/rng.hpp"

#include "sparse_interp/errors.hpp"

namespace sparse_interp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

Rng Rng::split(std::string_view label, std::uint64_t index) const {
  return Rng(splitmix64(splitmix64(seed_ ^ fnv1a64(label)) ^ index));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("Rng::below: empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

BigInt Rng::up_to(const BigInt& bound) {
  if (bound < 0) throw UsageError("Rng::up_to: negative bound");
  if (bound < max()) return BigInt(below(static_cast<std::uint64_t>(bound) + 1));
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    BigInt x = 0;
    for (std::size_t filled = 0; filled < bits; filled += 64) {
      x = (x << 64) | BigInt(next());
    }
    x &= (BigInt(1) << bits) - 1;
    if (x <= bound) return x;
  }
}

}  // namespace sparse_interp
