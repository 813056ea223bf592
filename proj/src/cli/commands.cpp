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

#include "sparse_interp/cli/commands.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "sparse_interp/errors.hpp"
#include "sparse_interp/oracle.hpp"

namespace sparse_interp::cli {
namespace {

std::string term_line(const ExtFieldElement& c, const BigInt& e) {
  std::ostringstream out;
  for (u64 r : c.coeffs()) out << r << ' ';
  out << e.str();
  return out.str();
}

}  // namespace

GeneratedInstance cmd_gen(u64 q, u64 t, const BigInt& D, u64 seed) {
  const PrimeField base(q);
  if (D < 0) throw UsageError("degree bound must be nonnegative");
  if (BigInt(t) > D + 1) {
    throw UsageError("cannot place " + std::to_string(t) +
                     " distinct exponents in [0, " + D.str() + "]");
  }
  if (t > 0 && q < 2) throw UsageError("no nonzero coefficients exist");

  Rng rng = Rng(seed).split("gen");
  std::set<BigInt> exponents;
  if (2 * BigInt(t) > D + 1) {
    // Dense request: shuffle the whole (small) range instead of rejecting.
    std::vector<u64> all(to_u64(D) + 1);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (std::size_t i = 0; i < t; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
    }
    for (std::size_t i = 0; i < t; ++i) exponents.insert(BigInt(all[i]));
  } else {
    while (exponents.size() < t) exponents.insert(rng.up_to(D));
  }

  SparsePoly f(ExtField::prime(base));
  for (const BigInt& e : exponents) f.add_term(e, 1 + rng.below(q - 1));
  Slp slp = slp_from_sparse(f);
  return {std::move(f), std::move(slp)};
}

RunReport cmd_interpolate(const Slp& slp, const RunConfig& config,
                          const SparsePoly* expected) {
  RunReport report;
  report.q = slp.field().modulus();
  report.config = config;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  try {
    InterpolationResult result =
        majority_vote_interpolate(slp, config.T, config.D, config.epsilon, rng);
    report.probe_count = result.ledger.probe_count();
    report.total_probe_size = result.ledger.total_probe_size();
    report.trace = std::move(result.trace);
    if (expected) report.success = result.poly == *expected;
    report.poly = std::move(result.poly);
  } catch (const EndgameInconsistent& e) {
    report.status = RunReport::Status::kEndgameInconsistent;
    report.error = e.what();
    report.probe_count = e.probe_count();
    report.total_probe_size = e.total_probe_size();
    if (expected) report.success = false;
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

VerifyResult cmd_verify(const SparsePoly& expected, const SparsePoly& actual) {
  if (!expected.field()->same_as(*actual.field())) {
    throw UsageError("polynomials belong to different fields");
  }
  VerifyResult result;
  for (const auto& [e, c] : expected.terms()) {
    auto it = actual.terms().find(e);
    if (it == actual.terms().end() || it->second != c) {
      result.diff.push_back("- " + term_line(c, e));
    }
    if (it != actual.terms().end() && it->second != c) {
      result.diff.push_back("+ " + term_line(it->second, e));
    }
  }
  for (const auto& [e, c] : actual.terms()) {
    if (expected.terms().count(e) == 0) {
      result.diff.push_back("+ " + term_line(c, e));
    }
  }
  result.equal = result.diff.empty();
  return result;
}

SparsePoly cmd_oracle(const Slp& slp, const BigInt& D) {
  return oracle::dense_interpolate(slp, D);
}

u64 bench_trial_seed(u64 suite_seed, std::size_t cell, std::size_t trial) {
  return Rng(suite_seed).split("bench-cell", cell).split("trial", trial).seed();
}

std::vector<BenchRow> cmd_bench(const BenchSuite& suite) {
  std::vector<BenchRow> rows;
  for (std::size_t c = 0; c < suite.cells.size(); ++c) {
    const BenchCell& cell = suite.cells[c];
    BenchRow row;
    row.cell = cell;
    row.trials = suite.trials;
    double probes = 0;
    double size = 0;
    for (std::size_t k = 0; k < suite.trials; ++k) {
      const u64 seed = bench_trial_seed(suite.seed, c, k);
      GeneratedInstance instance = cmd_gen(cell.q, cell.terms, cell.D, seed);
      RunConfig config{cell.T, cell.D, suite.epsilon, seed};
      RunReport report = cmd_interpolate(instance.slp, config, &instance.poly);
      probes += static_cast<double>(report.probe_count);
      size += static_cast<double>(report.total_probe_size);
      if (report.status == RunReport::Status::kEndgameInconsistent) {
        ++row.detected_failures;
      }
      if (report.success.value_or(false)) ++row.successes;
    }
    if (suite.trials > 0) {
      const double n = static_cast<double>(suite.trials);
      row.mean_probe_count = probes / n;
      row.mean_total_probe_size = size / n;
      row.success_rate = static_cast<double>(row.successes) / n;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sparse_interp::cli
