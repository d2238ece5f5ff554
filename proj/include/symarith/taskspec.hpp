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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace symarith {

enum class Operator { Add, Mul };

enum class RuleKind { None, Translate, Scale, Mod };

/// Rule perturbation applied on top of the base operator: +delta, *lambda,
/// or mod m. `value` is unused for None.
struct Rule {
  RuleKind kind = RuleKind::None;
  std::int64_t value = 0;

  bool operator==(const Rule&) const = default;
};

enum class Format { Plain, NaturalLanguage, RandomString, DisturbedDigits };

/// One arithmetic task: operator, operand width, rule perturbation, prompt
/// format and the seed that drives any sampled operation on it.
struct TaskSpec {
  Operator op = Operator::Add;
  int n = 2;  // operand digit width, >= 1
  Rule rule;
  Format format = Format::Plain;
  std::uint64_t seed = 0;

  /// Smallest operand: 10^(n-1).
  std::int64_t domain_min() const;
  /// Largest operand: 10^n - 1.
  std::int64_t domain_max() const;
  /// Operands per side: 9 * 10^(n-1).
  std::uint64_t domain_side() const;
  /// Total (a, b) pairs: domain_side()^2.
  std::uint64_t domain_pairs() const;

  /// Canonical spec string, e.g. "add:n=2:rule=mod50:fmt=plain".
  /// Always prints every field so it is stable for hashing.
  std::string canonical() const;

  bool operator==(const TaskSpec&) const = default;
};

/// Parses a spec string. Operator and n are required, rule/fmt optional:
///   "add:n=2", "mul:n=3:rule=times8", "add:n=2:rule=mod50:fmt=nl"
/// Rule tokens: none, plus<d>, times<l>, mod<m>. Format tokens: plain, nl,
/// rs, dd. Throws std::invalid_argument on malformed input.
TaskSpec parse_spec(std::string_view text);

/// One rendered (a, b, c) instance.
struct ExampleRecord {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string c_digits;  // zero-padded, width == output_width(spec)
  std::string prompt;
  std::string completion;
  std::string task_id;

  bool operator==(const ExampleRecord&) const = default;
};

/// Ground-truth output with the rule applied. Throws std::domain_error if an
/// operand is outside [domain_min, domain_max].
std::int64_t apply_operator(std::int64_t a, std::int64_t b,
                            const TaskSpec& spec);

/// Fixed output width: digits of m-1 for Mod(m), otherwise digits of the
/// maximum of f over the operand domain.
int output_width(const TaskSpec& spec);

/// Renders an example in the spec's format. Digits of a, b, c are separated
/// by single spaces; c is zero-padded to output_width.
ExampleRecord render_example(std::int64_t a, std::int64_t b,
                             const TaskSpec& spec);

/// Canonicalizes a completion string: strips spaces, validates digit-only
/// content, right-aligns and zero-pads to output_width. Throws
/// std::invalid_argument on non-digit input, std::length_error when the
/// digit count exceeds output_width.
std::string parse_completion(std::string_view text, const TaskSpec& spec);

/// Recovers (a, b) from a rendered prompt, for any format template.
/// Throws std::invalid_argument when the prompt does not match the template.
std::pair<std::int64_t, std::int64_t> parse_prompt(std::string_view prompt,
                                                   const TaskSpec& spec);

/// Stable identifier joining predictions back to ground truth:
/// FNV-1a 64 over "canonical-spec|a|b", printed as 16 hex chars.
std::string task_id(const TaskSpec& spec, std::int64_t a, std::int64_t b);

/// "0408" -> "0 4 0 8".
std::string space_digits(std::string_view digits);

int decimal_width(std::int64_t v);

}  // namespace symarith
