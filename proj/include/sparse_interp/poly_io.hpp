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
#include <string_view>

#include "sparse_interp/modpoly.hpp"

namespace sparse_interp {

// Sparse polynomial text form:
//
//   q <prime>
//   s <degree>                    (only when s > 1)
//   modulus <c_0> ... <c_s>       (only when s > 1)
//   <r_0> ... <r_{s-1}> <exponent>
//   ...
//
// One term per line in increasing exponent order; each coefficient is its
// residue vector and the exponent is decimal.
void write_poly(std::ostream& out, const SparsePoly& f);
std::string to_text(const SparsePoly& f);

// Throws ParseError with the offending line number.
SparsePoly parse_poly(std::istream& in);
SparsePoly parse_poly(std::string_view text);

}  // namespace sparse_interp
