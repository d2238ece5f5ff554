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

#include <doctest.h>

#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "symarith/kernels.hpp"

using namespace symarith;
using namespace symarith::kernels;

namespace {

std::vector<TaskSpec> kernel_specs() {
  std::vector<TaskSpec> out;
  for (Operator op : {Operator::Add, Operator::Mul})
    for (int n : {1, 2, 3})
      for (Rule rule : {Rule{}, Rule{RuleKind::Translate, 115},
                        Rule{RuleKind::Scale, 8}, Rule{RuleKind::Mod, 50},
                        Rule{RuleKind::Mod, 100}}) {
        TaskSpec s;
        s.op = op;
        s.n = n;
        s.rule = rule;
        out.push_back(s);
      }
  return out;
}

}  // namespace

TEST_CASE("scalar kernel matches apply_operator") {
  for (const TaskSpec& s : kernel_specs()) {
    const std::int64_t lo = s.domain_min();
    const std::size_t side = static_cast<std::size_t>(s.domain_side());
    std::vector<std::int64_t> row(side);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> dist(lo, s.domain_max());
    for (int trial = 0; trial < 4; ++trial) {
      std::int64_t a = dist(rng);
      batch_apply_scalar(a, lo, side, s, row.data());
      for (std::size_t i = 0; i < side; i += side / 7 + 1)
        REQUIRE(row[i] ==
                apply_operator(a, lo + static_cast<std::int64_t>(i), s));
    }
  }
}

TEST_CASE("selected kernel is equivalent to the scalar reference") {
  for (const TaskSpec& s : kernel_specs()) {
    BatchFn fast = select_batch_fn(s);
    const std::int64_t lo = s.domain_min();
    const std::size_t side = static_cast<std::size_t>(s.domain_side());
    std::vector<std::int64_t> ref(side), got(side);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(lo, s.domain_max());
    for (int trial = 0; trial < 8; ++trial) {
      std::int64_t a = dist(rng);
      batch_apply_scalar(a, lo, side, s, ref.data());
      fast(a, lo, side, s, got.data());
      REQUIRE(std::memcmp(ref.data(), got.data(),
                          side * sizeof(std::int64_t)) == 0);
    }
    // Odd lengths exercise the scalar tail.
    for (std::size_t len : {std::size_t{1}, std::size_t{7}, side - 1}) {
      std::int64_t a = dist(rng);
      batch_apply_scalar(a, lo, len, s, ref.data());
      fast(a, lo, len, s, got.data());
      REQUIRE(std::memcmp(ref.data(), got.data(),
                          len * sizeof(std::int64_t)) == 0);
    }
  }
}

TEST_CASE("wide values fall back to the scalar kernel") {
  TaskSpec wide;
  wide.op = Operator::Mul;
  wide.n = 5;  // 99999^2 does not fit in 32 bits
  CHECK(max_premod_value(wide) >= (std::int64_t{1} << 31));
  CHECK(std::string(selected_kernel_name(wide)) == "scalar");
  CHECK(select_batch_fn(wide) == &batch_apply_scalar);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernel is selected when the CPU supports it") {
  TaskSpec s;
  s.op = Operator::Mul;
  s.n = 2;
  if (__builtin_cpu_supports("avx2")) {
    CHECK(std::string(selected_kernel_name(s)) == "avx2");
    CHECK(select_batch_fn(s) == &batch_apply_avx2);
  } else {
    CHECK(std::string(selected_kernel_name(s)) == "scalar");
  }
}
#endif
