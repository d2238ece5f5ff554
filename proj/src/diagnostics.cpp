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

#include "symarith/diagnostics.hpp"

#include <stdexcept>

#include "symarith/taskspec.hpp"

namespace symarith {

namespace {

DiagItem make_item(std::int64_t lhs, std::int64_t rhs, bool is_mul) {
  DiagItem item;
  item.lhs = lhs;
  item.rhs = rhs;
  item.is_mul = is_mul;
  item.result = is_mul ? lhs * rhs : lhs + rhs;
  item.prompt = space_digits(std::to_string(lhs)) +
                (is_mul ? " \xC3\x97 " : " + ") +
                space_digits(std::to_string(rhs)) + " =";
  item.completion = space_digits(std::to_string(item.result));
  return item;
}

void require_two_digit(std::int64_t a, std::int64_t b) {
  if (a < 10 || a > 99 || b < 10 || b > 99)
    throw std::domain_error("operands must be two-digit");
}

}  // namespace

std::int64_t evaluate_reconstruction(const DiagnosticSet& set) {
  std::int64_t sum = 0;
  for (const ReconTerm& t : set.reconstruction) sum += t.weight * t.value;
  return sum;
}

DiagnosticSet standard_set(std::int64_t a, std::int64_t b) {
  require_two_digit(a, b);
  const std::int64_t a1 = a / 10, a2 = a % 10, b1 = b / 10, b2 = b % 10;
  DiagnosticSet set;
  set.method = DiagMethod::Standard;
  set.a = a;
  set.b = b;
  set.items = {make_item(a1, b, true), make_item(a2, b, true),
               make_item(b1, a, true), make_item(b2, a, true)};
  // a*b = 10*(A1*b) + A2*b, the carry-weighted column sum.
  set.reconstruction = {{10, set.items[0].result}, {1, set.items[1].result}};
  return set;
}

DiagnosticSet repetitive_set(std::int64_t a, std::int64_t b,
                             std::int64_t chain_cap) {
  if (a < 1 || b < 1) throw std::domain_error("operands must be positive");
  if (b > chain_cap) throw std::length_error("multiplier exceeds chain cap");
  DiagnosticSet set;
  set.method = DiagMethod::Repetitive;
  set.a = a;
  set.b = b;
  std::int64_t acc = a;
  for (std::int64_t k = 1; k < b; ++k) {
    set.items.push_back(make_item(acc, a, false));
    acc = set.items.back().result;
  }
  set.reconstruction = {{1, acc}};
  return set;
}

DiagnosticSet lattice_set(std::int64_t a, std::int64_t b) {
  require_two_digit(a, b);
  const std::int64_t a1 = a / 10, a2 = a % 10, b1 = b / 10, b2 = b % 10;
  DiagnosticSet set;
  set.method = DiagMethod::Lattice;
  set.a = a;
  set.b = b;
  set.items = {make_item(a1 * 10, b1 * 10, true), make_item(a1 * 10, b2, true),
               make_item(a2, b1 * 10, true), make_item(a2, b2, true)};
  for (const DiagItem& item : set.items)
    set.reconstruction.push_back({1, item.result});
  return set;
}

std::vector<int> binary_decompose(std::int64_t b) {
  if (b < 1) throw std::domain_error("binary_decompose needs b >= 1");
  std::vector<int> exps;
  for (int k = 0; b != 0; ++k, b >>= 1)
    if (b & 1) exps.push_back(k);
  return exps;
}

DiagnosticSet egyptian_set(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::domain_error("operands must be positive");
  DiagnosticSet set;
  set.method = DiagMethod::Egyptian;
  set.a = a;
  set.b = b;
  // All doublings up to floor(log2 b); selection happens in the
  // reconstruction only.
  std::int64_t pow = 1;
  while (pow <= b) {
    set.items.push_back(make_item(pow, a, true));
    pow *= 2;
  }
  for (int k : binary_decompose(b))
    set.reconstruction.push_back({1, set.items[static_cast<std::size_t>(k)].result});
  return set;
}

DiagnosticSet make_diagnostic_set(DiagMethod method, std::int64_t a,
                                  std::int64_t b, std::int64_t chain_cap) {
  switch (method) {
    case DiagMethod::Standard: return standard_set(a, b);
    case DiagMethod::Repetitive: return repetitive_set(a, b, chain_cap);
    case DiagMethod::Lattice: return lattice_set(a, b);
    case DiagMethod::Egyptian: return egyptian_set(a, b);
  }
  throw std::logic_error("unknown diagnostic method");
}

DiagMethod parse_diag_method(std::string_view name) {
  if (name == "standard") return DiagMethod::Standard;
  if (name == "repetitive") return DiagMethod::Repetitive;
  if (name == "lattice") return DiagMethod::Lattice;
  if (name == "egyptian") return DiagMethod::Egyptian;
  throw std::invalid_argument("unknown diagnostic method: " +
                              std::string(name));
}

const char* diag_method_name(DiagMethod m) {
  switch (m) {
    case DiagMethod::Standard: return "standard";
    case DiagMethod::Repetitive: return "repetitive";
    case DiagMethod::Lattice: return "lattice";
    case DiagMethod::Egyptian: return "egyptian";
  }
  return "?";
}

}  // namespace symarith
