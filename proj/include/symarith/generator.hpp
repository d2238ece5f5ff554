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
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "symarith/taskspec.hpp"

namespace symarith {

enum class Provenance { Exhaustive, Sampled, Split };

struct Dataset {
  TaskSpec spec;
  std::vector<ExampleRecord> records;
  Provenance provenance = Provenance::Exhaustive;
  std::uint64_t sample_size = 0;  // Sampled only
  std::uint64_t seed = 0;         // Sampled/Split only
};

struct SplitRatios {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;
};

/// Calls fn for every (a, b) in the operand domain, lexicographic order.
void enumerate_domain(
    const TaskSpec& spec,
    const std::function<void(std::int64_t, std::int64_t)>& fn);

/// Renders the full cross product: (9 * 10^(n-1))^2 records.
Dataset exhaustive_dataset(const TaskSpec& spec);

/// Uniform sample of `size` distinct pairs, deterministic in (spec, size,
/// seed); records come out in lexicographic (a, b) order. Throws
/// std::length_error when size exceeds the domain.
Dataset sample_dataset(const TaskSpec& spec, std::uint64_t size,
                       std::uint64_t seed);

/// Disjoint shuffled partition. Val/test get floor(ratio * N); the remainder
/// goes to train. Ratios must be positive and sum to 1 (1e-9). Requires at
/// least 10 records.
std::array<Dataset, 3> split_dataset(const Dataset& d, const SplitRatios& r,
                                     std::uint64_t seed);

/// Line-delimited JSON, one record per line (task_id, a, b, prompt,
/// completion), plus a "<path>.meta.json" sidecar carrying the canonical
/// spec string, provenance and seed.
void write_records(const Dataset& d, const std::string& path);

/// Inverse of write_records. Malformed lines raise std::runtime_error naming
/// the 1-based line number.
Dataset read_records(const std::string& path);

void write_records(const Dataset& d, std::ostream& out);

}  // namespace symarith
