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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sparse_interp/cli/commands.hpp"
#include "sparse_interp/cli/report.hpp"
#include "sparse_interp/errors.hpp"
#include "sparse_interp/poly_io.hpp"

namespace sparse_interp::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to path, or to out when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

Slp load_slp(const std::string& path) {
  try {
    return parse_slp(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

SparsePoly load_poly(const std::string& path) {
  try {
    return parse_poly(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sparse interpolation of straight-line programs over F_q"};
  app.require_subcommand(1);

  // gen
  u64 q = 0;
  u64 terms = 0;
  std::string degree_bound;
  u64 seed = 1;
  std::string out_path;
  std::string slp_path;
  auto* gen = app.add_subcommand("gen", "random sparse polynomial and its program");
  gen->add_option("--q", q, "field size (prime)")->required();
  gen->add_option("--terms", terms, "number of nonzero terms")->required();
  gen->add_option("--degree-bound", degree_bound, "largest allowed exponent")
      ->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out_path, "polynomial file (stdout if absent)");
  gen->add_option("--slp", slp_path, "program file");

  // compile
  std::string in_path;
  auto* compile = app.add_subcommand("compile", "compile a polynomial file to a program");
  compile->add_option("--in", in_path, "polynomial file")->required();
  compile->add_option("--out", out_path, "program file (stdout if absent)");

  // interpolate
  u64 T = 1;
  std::string D_text;
  std::string epsilon_text = "1/10";
  bool json = false;
  std::string expected_path;
  std::string poly_out;
  auto* interp = app.add_subcommand("interpolate", "recover the polynomial a program computes");
  interp->add_option("--in", in_path, "program file")->required();
  interp->add_option("--T", T, "bound on the number of terms")->required();
  interp->add_option("--D", D_text, "bound on the degree")->required();
  interp->add_option("--epsilon", epsilon_text, "failure probability bound");
  interp->add_option("--seed", seed, "random seed");
  interp->add_option("--out", out_path, "report file (stdout if absent)");
  interp->add_option("--expected", expected_path, "ground truth polynomial file");
  interp->add_option("--poly-out", poly_out, "write the recovered polynomial here");
  interp->add_flag("--json", json, "JSON report");

  // verify
  std::string actual_path;
  auto* verify = app.add_subcommand("verify", "compare two polynomial files");
  verify->add_option("expected", expected_path, "expected polynomial")->required();
  verify->add_option("actual", actual_path, "actual polynomial")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "dense ground truth from a program");
  oracle->add_option("--in", in_path, "program file")->required();
  oracle->add_option("--D", D_text, "bound on the degree")->required();
  oracle->add_option("--out", out_path, "polynomial file (stdout if absent)");

  // bench
  std::vector<u64> bench_q;
  std::vector<u64> bench_T;
  std::vector<std::string> bench_D;
  std::vector<u64> bench_terms;
  u64 trials = 10;
  auto* bench = app.add_subcommand("bench", "probe statistics over seeded trials");
  bench->add_option("--in", in_path, "JSON suite file");
  bench->add_option("--q", bench_q, "field sizes");
  bench->add_option("--T", bench_T, "term bounds");
  bench->add_option("--D", bench_D, "degree bounds");
  bench->add_option("--terms", bench_terms, "actual term counts (default: T)");
  bench->add_option("--trials", trials, "trials per cell");
  bench->add_option("--epsilon", epsilon_text, "failure probability bound");
  bench->add_option("--seed", seed, "suite seed");
  bench->add_option("--out", out_path, "table file (stdout if absent)");
  bench->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      GeneratedInstance instance = cmd_gen(q, terms, parse_bigint(degree_bound), seed);
      emit(out_path, to_text(instance.poly), out);
      if (!slp_path.empty()) emit(slp_path, to_text(instance.slp), out);
      return kExitOk;
    }
    if (*compile) {
      emit(out_path, to_text(slp_from_sparse(load_poly(in_path))), out);
      return kExitOk;
    }
    if (*interp) {
      const Slp slp = load_slp(in_path);
      RunConfig config{T, parse_bigint(D_text), parse_rational(epsilon_text), seed};
      std::optional<SparsePoly> expected;
      if (!expected_path.empty()) expected = load_poly(expected_path);
      RunReport report =
          cmd_interpolate(slp, config, expected ? &*expected : nullptr);
      emit(out_path, json ? format_report_json(report) : format_report(report), out);
      if (!poly_out.empty() && report.poly) emit(poly_out, to_text(*report.poly), out);
      return report.status == RunReport::Status::kOk ? kExitOk
                                                     : kExitEndgameInconsistent;
    }
    if (*verify) {
      VerifyResult result = cmd_verify(load_poly(expected_path), load_poly(actual_path));
      for (const std::string& line : result.diff) out << line << '\n';
      return result.equal ? kExitOk : kExitMismatch;
    }
    if (*oracle) {
      emit(out_path, to_text(cmd_oracle(load_slp(in_path), parse_bigint(D_text))), out);
      return kExitOk;
    }
    if (*bench) {
      BenchSuite suite;
      if (!in_path.empty()) {
        suite = parse_bench_suite(read_file(in_path));
      } else {
        if (bench_q.empty() || bench_T.empty() || bench_D.empty()) {
          throw UsageError("bench needs --in or all of --q, --T and --D");
        }
        suite.trials = trials;
        suite.epsilon = parse_rational(epsilon_text);
        suite.seed = seed;
        for (u64 cq : bench_q) {
          for (u64 cT : bench_T) {
            for (const std::string& cD : bench_D) {
              if (bench_terms.empty()) {
                suite.cells.push_back({cq, cT, parse_bigint(cD), cT});
              } else {
                for (u64 ct : bench_terms) {
                  suite.cells.push_back({cq, cT, parse_bigint(cD), ct});
                }
              }
            }
          }
        }
      }
      auto rows = cmd_bench(suite);
      emit(out_path, json ? format_bench_json(rows) : format_bench(rows), out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sparse_interp::cli
