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

// Compiled with -mavx2; callers gate on runtime CPU support.

#include "symarith/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace symarith::kernels {

void batch_apply_avx2(std::int64_t a, std::int64_t b0, std::size_t len,
                      const TaskSpec& spec, std::int64_t* out) {
  const bool add = spec.op == Operator::Add;
  const RuleKind kind = spec.rule.kind;
  const std::int64_t k = spec.rule.value;

  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vk = _mm256_set1_epi32(static_cast<int>(k));
  __m256i vb = _mm256_add_epi32(
      _mm256_set1_epi32(static_cast<int>(b0)),
      _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
  const __m256i vstep = _mm256_set1_epi32(8);

  std::size_t i = 0;
  alignas(32) int lanes[8];
  for (; i + 8 <= len; i += 8) {
    __m256i vc = add ? _mm256_add_epi32(va, vb) : _mm256_mullo_epi32(va, vb);
    if (kind == RuleKind::Translate) vc = _mm256_add_epi32(vc, vk);
    if (kind == RuleKind::Scale) vc = _mm256_mullo_epi32(vc, vk);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vc);
    if (kind == RuleKind::Mod) {
      for (int j = 0; j < 8; ++j) out[i + j] = lanes[j] % k;
    } else {
      for (int j = 0; j < 8; ++j) out[i + j] = lanes[j];
    }
    vb = _mm256_add_epi32(vb, vstep);
  }
  if (i < len) batch_apply_scalar(a, b0 + static_cast<std::int64_t>(i),
                                  len - i, spec, out + i);
}

}  // namespace symarith::kernels

#endif  // x86_64
