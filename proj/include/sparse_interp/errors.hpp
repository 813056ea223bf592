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
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparse_interp {

// Caller passed arguments that violate an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A value exceeded a declared bound (Kronecker digits, exponents).
class BoundViolation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The single-term endgame observed images that no single term can produce.
// This is a detected Monte Carlo failure of an earlier round.
class EndgameInconsistent : public std::runtime_error {
 public:
  explicit EndgameInconsistent(const std::string& what,
                               std::size_t probe_count = 0,
                               std::uint64_t total_probe_size = 0)
      : std::runtime_error(what),
        probe_count_(probe_count),
        total_probe_size_(total_probe_size) {}

  // Ledger totals of the whole run up to the failure, when known.
  std::size_t probe_count() const { return probe_count_; }
  std::uint64_t total_probe_size() const { return total_probe_size_; }

 private:
  std::size_t probe_count_;
  std::uint64_t total_probe_size_;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sparse_interp
