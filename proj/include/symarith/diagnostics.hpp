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
#include <vector>

namespace symarith {

enum class DiagMethod { Standard, Repetitive, Lattice, Egyptian };

/// One atomic sub-task: a standalone multiplication or addition rendered in
/// the digit-spaced plain format at natural width.
struct DiagItem {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool is_mul = true;
  std::int64_t result = 0;
  std::string prompt;
  std::string completion;
};

/// Weighted term referencing an item result; the reconstruction of a set is
/// sum(weight * value) and must evaluate to a * b.
struct ReconTerm {
  std::int64_t weight = 1;
  std::int64_t value = 0;
};

struct DiagnosticSet {
  DiagMethod method = DiagMethod::Standard;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<DiagItem> items;
  std::vector<ReconTerm> reconstruction;
};

std::int64_t evaluate_reconstruction(const DiagnosticSet& set);

/// The four 1-digit x 2-digit partial products of textbook long
/// multiplication: A1 x b, A2 x b, B1 x a, B2 x a. Operands must be
/// two-digit. Reconstruction: 10 * (A1 x b) + (A2 x b).
DiagnosticSet standard_set(std::int64_t a, std::int64_t b);

/// Running-sum chain a, a+a, ... with b-1 addition steps; the final
/// accumulator is a*b. Throws std::length_error past chain_cap.
DiagnosticSet repetitive_set(std::int64_t a, std::int64_t b,
                             std::int64_t chain_cap = 128);

/// Grid cells scaled by their positional powers of ten:
/// (10*A1)(10*B1), (10*A1)*B2, A2*(10*B1), A2*B2; reconstruction is the sum.
DiagnosticSet lattice_set(std::int64_t a, std::int64_t b);

/// Exponents k with bit k set in b; sum of 2^k recovers b. b >= 1.
std::vector<int> binary_decompose(std::int64_t b);

/// Doubling items 2^k * a for k = 0..floor(log2 b); the reconstruction sums
/// the items picked by binary_decompose(b).
DiagnosticSet egyptian_set(std::int64_t a, std::int64_t b);

DiagnosticSet make_diagnostic_set(DiagMethod method, std::int64_t a,
                                  std::int64_t b,
                                  std::int64_t chain_cap = 128);

DiagMethod parse_diag_method(std::string_view name);
const char* diag_method_name(DiagMethod m);

}  // namespace symarith
