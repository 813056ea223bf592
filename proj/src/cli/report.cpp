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

#include "sparse_interp/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "sparse_interp/errors.hpp"

namespace sparse_interp::cli {
namespace {

using nlohmann::json;

const char* status_name(RunReport::Status status) {
  return status == RunReport::Status::kOk ? "ok" : "endgame_inconsistent";
}

const char* kind_name(PhaseTrace::Kind kind) {
  return kind == PhaseTrace::Kind::kRound ? "round" : "endgame";
}

std::string coeff_text(const ExtFieldElement& c) {
  std::string out;
  for (u64 r : c.coeffs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(r);
  }
  return out;
}

}  // namespace

std::string format_report(const RunReport& report) {
  std::ostringstream out;
  out << "status " << status_name(report.status) << '\n';
  if (!report.error.empty()) out << "error " << report.error << '\n';
  out << "q " << report.q << '\n';
  out << "T " << report.config.T << '\n';
  out << "D " << report.config.D.str() << '\n';
  out << "epsilon " << report.config.epsilon.str() << '\n';
  out << "seed " << report.config.seed << '\n';
  out << "probe_count " << report.probe_count << '\n';
  out << "total_probe_size " << report.total_probe_size << '\n';
  out << "phases " << report.trace.size() << '\n';
  for (std::size_t k = 0; k < report.trace.size(); ++k) {
    const PhaseTrace& t = report.trace[k];
    out << "phase " << k + 1 << ' ' << kind_name(t.kind) << " T " << t.T;
    if (t.kind == PhaseTrace::Kind::kRound) {
      out << " lambda " << t.params.lambda << " ell " << t.params.ell
          << " gamma " << t.params.gamma << " candidates " << t.candidates
          << " m " << t.params.m << " s " << t.params.s;
    }
    out << " built " << t.terms_built << " probes "
        << t.probe_end - t.probe_begin << " probe_size " << t.probe_size
        << '\n';
  }
  if (report.success) {
    out << "success " << (*report.success ? "true" : "false") << '\n';
  }
  if (report.poly) {
    out << "terms " << report.poly->term_count() << '\n';
    for (const auto& [e, c] : report.poly->terms()) {
      out << coeff_text(c) << ' ' << e.str() << '\n';
    }
  }
  out << "wall_time_ms " << std::fixed << std::setprecision(3)
      << report.wall_time_ms << '\n';
  return out.str();
}

std::string format_report_json(const RunReport& report) {
  json j;
  j["status"] = status_name(report.status);
  if (!report.error.empty()) j["error"] = report.error;
  j["q"] = report.q;
  j["T"] = report.config.T;
  j["D"] = report.config.D.str();
  j["epsilon"] = report.config.epsilon.str();
  j["seed"] = report.config.seed;
  j["probe_count"] = report.probe_count;
  j["total_probe_size"] = report.total_probe_size;
  json phases = json::array();
  for (const PhaseTrace& t : report.trace) {
    json p;
    p["kind"] = kind_name(t.kind);
    p["T"] = t.T;
    if (t.kind == PhaseTrace::Kind::kRound) {
      p["lambda"] = t.params.lambda;
      p["ell"] = t.params.ell;
      p["gamma"] = t.params.gamma;
      p["candidates"] = t.candidates;
      p["m"] = t.params.m;
      p["s"] = t.params.s;
      p["mu"] = t.params.mu.str();
    }
    p["built"] = t.terms_built;
    p["probes"] = t.probe_end - t.probe_begin;
    p["probe_size"] = t.probe_size;
    phases.push_back(p);
  }
  j["phases"] = phases;
  if (report.success) j["success"] = *report.success;
  if (report.poly) {
    json terms = json::array();
    for (const auto& [e, c] : report.poly->terms()) {
      terms.push_back({{"coeff", std::vector<u64>(c.coeffs().begin(),
                                                  c.coeffs().end())},
                       {"exponent", e.str()}});
    }
    j["terms"] = terms;
  }
  j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2) + "\n";
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "q\tT\tD\tterms\ttrials\tmean_probe_count\tmean_total_probe_size"
         "\tsuccess_rate\tdetected_failures\n";
  out << std::fixed << std::setprecision(2);
  for (const BenchRow& r : rows) {
    out << r.cell.q << '\t' << r.cell.T << '\t' << r.cell.D.str() << '\t'
        << r.cell.terms << '\t' << r.trials << '\t' << r.mean_probe_count
        << '\t' << r.mean_total_probe_size << '\t' << std::setprecision(4)
        << r.success_rate << std::setprecision(2) << '\t'
        << r.detected_failures << '\n';
  }
  return out.str();
}

std::string format_bench_json(const std::vector<BenchRow>& rows) {
  json j = json::array();
  for (const BenchRow& r : rows) {
    j.push_back({{"q", r.cell.q},
                 {"T", r.cell.T},
                 {"D", r.cell.D.str()},
                 {"terms", r.cell.terms},
                 {"trials", r.trials},
                 {"successes", r.successes},
                 {"detected_failures", r.detected_failures},
                 {"mean_probe_count", r.mean_probe_count},
                 {"mean_total_probe_size", r.mean_total_probe_size},
                 {"success_rate", r.success_rate}});
  }
  return j.dump(2) + "\n";
}

BenchSuite parse_bench_suite(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad suite file: ") + e.what());
  }
  auto as_text = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  BenchSuite suite;
  try {
    suite.trials = j.value("trials", suite.trials);
    suite.seed = j.value("seed", suite.seed);
    if (j.contains("epsilon")) suite.epsilon = parse_rational(as_text(j["epsilon"]));
    for (const json& c : j.at("cells")) {
      BenchCell cell;
      cell.q = c.at("q").get<u64>();
      cell.T = c.at("T").get<u64>();
      cell.D = parse_bigint(as_text(c.at("D")));
      cell.terms = c.value("terms", cell.T);
      suite.cells.push_back(cell);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad suite file: ") + e.what());
  }
  return suite;
}

}  // namespace sparse_interp::cli
