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

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

#include "sparse_interp/bigint.hpp"

namespace sparse_interp {

// Seeded pseudo-random stream.
//
// Every phase of a run draws from its own stream obtained with split(),
// which depends only on the parent's seed, the phase label and an index:
//
//   child_seed = mix(mix(parent_seed ^ fnv1a64(label)) ^ index)
//
// where mix is the splitmix64 finalizer. Consuming values from a parent never
// changes its children, so concurrent phases cannot perturb each other.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  Rng split(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, bound].
  BigInt up_to(const BigInt& bound);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view text);

}  // namespace sparse_interp
