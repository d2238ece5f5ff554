// Copyright 2026 The symarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>

#include "symarith/taskspec.hpp"

namespace symarith::kernels {

/// Evaluates f(a, b0 + i) for i in [0, len) into out. This is the inner loop
/// of every exact enumeration; out must hold len values.
using BatchFn = void (*)(std::int64_t a, std::int64_t b0, std::size_t len,
                         const TaskSpec& spec, std::int64_t* out);

void batch_apply_scalar(std::int64_t a, std::int64_t b0, std::size_t len,
                        const TaskSpec& spec, std::int64_t* out);

#if defined(__x86_64__) || defined(_M_X64)
/// AVX2 variant, 8 lanes of 32-bit arithmetic. Valid only while the pre-mod
/// value of f stays below 2^31; select_batch_fn enforces that.
void batch_apply_avx2(std::int64_t a, std::int64_t b0, std::size_t len,
                      const TaskSpec& spec, std::int64_t* out);
#endif

/// Largest value f can take before any Mod reduction.
std::int64_t max_premod_value(const TaskSpec& spec);

/// Picks the fastest kernel valid for this spec on this CPU.
BatchFn select_batch_fn(const TaskSpec& spec);

/// Name of the kernel select_batch_fn would return: "scalar" or "avx2".
const char* selected_kernel_name(const TaskSpec& spec);

}  // namespace symarith::kernels
