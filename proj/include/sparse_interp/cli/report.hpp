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

#include <iosfwd>
#include <string>
#include <vector>

#include "sparse_interp/cli/commands.hpp"

namespace sparse_interp::cli {

// Line-oriented key/value report followed by a terms block. The final line
// carries the wall time and is the only field that varies between runs with
// the same inputs.
std::string format_report(const RunReport& report);
std::string format_report_json(const RunReport& report);

std::string format_bench(const std::vector<BenchRow>& rows);
std::string format_bench_json(const std::vector<BenchRow>& rows);

// Parses a JSON suite: {"trials", "epsilon", "seed", "cells": [{"q", "T",
// "D", "terms"}]}. epsilon and D may be strings.
BenchSuite parse_bench_suite(const std::string& json_text);

// Entry point of the sparse-interp tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sparse_interp::cli
