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

#include "sparse_interp/image.hpp"

namespace sparse_interp {

CyclicPoly compute_image(const Slp& slp, const SparsePoly& f_star,
                         const ExtFieldElement& alpha, std::size_t p,
                         ProbeLedger& ledger) {
  CyclicPoly image = probe(slp, alpha, p, ledger);
  const ExtFieldPtr& field = alpha.field();
  for (const auto& [e, c] : f_star.terms()) {
    image.add_to_coeff(mod_u64(e, p), -(lift(field, c) * alpha.pow(e)));
  }
  return image;
}

}  // namespace sparse_interp
