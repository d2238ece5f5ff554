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

#include "symarith/kernels.hpp"

namespace symarith::kernels {

void batch_apply_scalar(std::int64_t a, std::int64_t b0, std::size_t len,
                        const TaskSpec& spec, std::int64_t* out) {
  const bool add = spec.op == Operator::Add;
  const RuleKind kind = spec.rule.kind;
  const std::int64_t k = spec.rule.value;
  for (std::size_t i = 0; i < len; ++i) {
    std::int64_t b = b0 + static_cast<std::int64_t>(i);
    std::int64_t c = add ? a + b : a * b;
    switch (kind) {
      case RuleKind::None: break;
      case RuleKind::Translate: c += k; break;
      case RuleKind::Scale: c *= k; break;
      case RuleKind::Mod: c %= k; break;
    }
    out[i] = c;
  }
}

std::int64_t max_premod_value(const TaskSpec& spec) {
  std::int64_t m = spec.domain_max();
  std::int64_t top = spec.op == Operator::Add ? m + m : m * m;
  if (spec.rule.kind == RuleKind::Translate) top += spec.rule.value;
  if (spec.rule.kind == RuleKind::Scale) top *= spec.rule.value;
  return top;
}

namespace {

bool avx2_usable(const TaskSpec& spec) {
#if defined(__x86_64__) || defined(_M_X64)
  if (!__builtin_cpu_supports("avx2")) return false;
  // 32-bit lanes: everything up to the pre-mod value must fit in int32.
  return max_premod_value(spec) < (std::int64_t{1} << 31);
#else
  (void)spec;
  return false;
#endif
}

}  // namespace

BatchFn select_batch_fn(const TaskSpec& spec) {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_usable(spec)) return &batch_apply_avx2;
#endif
  return &batch_apply_scalar;
}

const char* selected_kernel_name(const TaskSpec& spec) {
  return avx2_usable(spec) ? "avx2" : "scalar";
}

}  // namespace symarith::kernels
