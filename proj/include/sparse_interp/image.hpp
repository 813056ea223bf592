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

#include "sparse_interp/ff.hpp"
#include "sparse_interp/modpoly.hpp"
#include "sparse_interp/slp.hpp"

namespace sparse_interp {

// (f - f_star)(alpha z) mod (z^p - 1): one probe of the program minus the
// image of the known approximation.
CyclicPoly compute_image(const Slp& slp, const SparsePoly& f_star,
                         const ExtFieldElement& alpha, std::size_t p,
                         ProbeLedger& ledger);

}  // namespace sparse_interp
