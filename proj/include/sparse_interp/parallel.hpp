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
#include <functional>

namespace sparse_interp {

// Worker count from SPARSE_INTERP_THREADS. 0 or 1 means serial; unset means
// the hardware concurrency.
std::size_t worker_count();

// Runs body(0) ... body(n - 1), possibly concurrently. The first exception
// thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sparse_interp
