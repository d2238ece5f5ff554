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
#include <map>
#include <string>
#include <vector>

#include "symarith/generator.hpp"
#include "symarith/taskspec.hpp"

namespace symarith {

/// Index-set triple linking operand digit positions to output digit
/// positions. Positions are 1-based from the most significant digit; ia/ib
/// may be empty, ic must not be.
struct SubgroupSpec {
  std::vector<int> ia;
  std::vector<int> ib;
  std::vector<int> ic;

  /// "A{1,2}B{}C{3}" form, also accepted by parse_subgroup.
  std::string to_string() const;

  bool operator==(const SubgroupSpec&) const = default;
};

SubgroupSpec parse_subgroup(std::string_view text);

/// Validates a subgroup against the task's widths; throws std::out_of_range
/// or std::invalid_argument.
void validate_subgroup(const SubgroupSpec& s, const TaskSpec& spec);

struct Projection {
  std::string a_digits;
  std::string b_digits;
  std::string c_digits;
};

/// Extracts the digit tuples named by the subgroup.
Projection project(std::int64_t a, std::int64_t b, std::string_view c_digits,
                   const SubgroupSpec& s, const TaskSpec& spec);

/// Joint count table over projected (a', b') -> (c' -> count), keyed by the
/// projected digit strings. Exact over the full operand domain.
using SubgroupCounts =
    std::map<std::pair<std::string, std::string>,
             std::map<std::string, std::uint64_t>>;

SubgroupCounts subgroup_counts(const TaskSpec& spec, const SubgroupSpec& s);

struct QualityReport {
  SubgroupSpec subgroup;
  std::uint64_t domain_cardinality = 0;  // |D_s|
  std::uint64_t label_cardinality = 0;   // |L_s|
  double label_entropy = 0.0;            // H(L_s), bits
  double quality = 0.0;                  // Q(s) in [0, 1]
};

/// Q(s) = sum over cells of the modal count, divided by the total. This is
/// the best achievable hit rate of any deterministic map D_s -> L_s; the
/// conditional-mode map attains it (tested exhaustively in the suite).
QualityReport quality(const TaskSpec& spec, const SubgroupSpec& s);
QualityReport quality_from_counts(const SubgroupCounts& counts,
                                  const SubgroupSpec& s);

/// Lookup predictor realizing Q(s): per observed (a', b') the modal c',
/// ties broken toward the numerically smallest label.
struct OracleModel {
  SubgroupSpec subgroup;
  std::map<std::pair<std::string, std::string>, std::string> table;
  std::string global_mode;  // fallback for unseen cells
};

OracleModel oracle_fit(const Dataset& train, const SubgroupSpec& s);
double oracle_eval(const OracleModel& m, const Dataset& test);

/// Geometric-mean difficulty of per-prediction scores plus their product.
/// Throws std::invalid_argument on a nonpositive entry or length mismatch.
struct DifficultyEstimate {
  double geometric_mean = 0.0;  // h-hat
  double product = 0.0;         // h-hat^m
};

DifficultyEstimate difficulty_estimate(const std::vector<double>& h_values,
                                       std::size_t m);

/// All subgroups with |ia| + |ib| <= max_input_positions and
/// 1 <= |ic| <= ic_size, deterministic order.
std::vector<SubgroupSpec> enumerate_subgroups(const TaskSpec& spec,
                                              int max_input_positions,
                                              int ic_size);

}  // namespace symarith
