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

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "symarith/taskspec.hpp"

namespace symarith {

/// Exact label-space statistics for one task.
struct LabelSpaceStats {
  std::vector<double> per_position_entropy;  // bits, length output_width
  std::uint64_t joint_cardinality = 0;       // |L|
  double joint_entropy = 0.0;                // H(L), bits
  std::uint64_t domain_cardinality = 0;      // pairs counted (|D| in exact mode)
  bool sampled = false;
};

/// Shannon entropy (base 2) of a count table. Zero entries contribute
/// nothing. Counts are summed largest-first so bijective relabelings of the
/// same multiset produce bit-identical results. Throws std::invalid_argument
/// on an empty or all-zero table.
double entropy_bits(std::span<const std::uint64_t> counts);

/// Weighted variant for explicit probability/weight tables.
double entropy_bits(std::span<const double> weights);

struct StatsOptions {
  std::uint64_t exact_budget = 100'000'000;  // max pairs for exact mode
  bool allow_sampling = false;               // fall back to sampling over budget
  std::uint64_t sample_size = 1'000'000;
  std::uint64_t seed = 0;
  bool force_scalar_kernel = false;
};

/// Counts every output value over the operand domain (or a uniform sample
/// when the domain exceeds the budget and sampling is enabled) and derives
/// per-position digit entropies plus joint |L| and H(L).
/// Throws std::length_error when the budget is exceeded without sampling.
LabelSpaceStats label_space_stats(const TaskSpec& spec,
                                  const StatsOptions& opts = {});

/// Exact digit counts at 1-based output position i over the full domain.
std::array<std::uint64_t, 10> positional_distribution(const TaskSpec& spec,
                                                      int position);

/// Exact count of each output value over the full domain, keyed by value.
std::map<std::int64_t, std::uint64_t> label_counts(
    const TaskSpec& spec, bool force_scalar_kernel = false);

}  // namespace symarith
