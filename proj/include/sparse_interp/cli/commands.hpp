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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sparse_interp/bigint.hpp"
#include "sparse_interp/interp.hpp"
#include "sparse_interp/modpoly.hpp"
#include "sparse_interp/slp.hpp"

namespace sparse_interp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitEndgameInconsistent = 3,
  kExitMismatch = 4,
};

struct RunConfig {
  u64 T = 1;
  BigInt D = 1;
  Rational epsilon{1, 10};
  u64 seed = 1;
};

struct GeneratedInstance {
  SparsePoly poly;
  Slp slp;
};

// A polynomial over F_q with exactly t nonzero terms at distinct exponents
// in [0, D], and the program compiled from it. Deterministic in seed.
// Throws UsageError when t > D + 1.
GeneratedInstance cmd_gen(u64 q, u64 t, const BigInt& D, u64 seed);

struct RunReport {
  enum class Status { kOk, kEndgameInconsistent };

  Status status = Status::kOk;
  std::string error;
  u64 q = 0;
  RunConfig config;
  std::optional<SparsePoly> poly;
  std::size_t probe_count = 0;
  u64 total_probe_size = 0;
  std::vector<PhaseTrace> trace;
  double wall_time_ms = 0;
  // Set when a ground truth was supplied.
  std::optional<bool> success;
};

RunReport cmd_interpolate(const Slp& slp, const RunConfig& config,
                          const SparsePoly* expected = nullptr);

struct VerifyResult {
  bool equal = true;
  // "- <coeff> <exp>" for terms only in expected, "+ ..." for terms only in
  // actual; a changed coefficient yields one of each.
  std::vector<std::string> diff;
};

// Throws UsageError when the polynomials live in different fields.
VerifyResult cmd_verify(const SparsePoly& expected, const SparsePoly& actual);

// Ground truth by one probe at alpha = 1, p = D + 1.
SparsePoly cmd_oracle(const Slp& slp, const BigInt& D);

struct BenchCell {
  u64 q = 0;
  u64 T = 0;
  BigInt D;
  u64 terms = 0;
};

struct BenchSuite {
  std::vector<BenchCell> cells;
  u64 trials = 10;
  Rational epsilon{1, 10};
  u64 seed = 1;
};

struct BenchRow {
  BenchCell cell;
  u64 trials = 0;
  u64 successes = 0;
  u64 detected_failures = 0;
  double mean_probe_count = 0;
  double mean_total_probe_size = 0;
  double success_rate = 0;
};

// Seed of trial k in cell c, derived from the suite seed.
u64 bench_trial_seed(u64 suite_seed, std::size_t cell, std::size_t trial);

std::vector<BenchRow> cmd_bench(const BenchSuite& suite);

}  // namespace sparse_interp::cli
