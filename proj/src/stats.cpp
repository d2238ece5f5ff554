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

#include "symarith/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "symarith/kernels.hpp"

namespace symarith {

namespace {

// H = log2(T) - (sum n*log2 n)/T, accumulated largest-first so the result
// depends only on the count multiset, not on label iteration order.
double entropy_from_counts(std::vector<std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw std::invalid_argument("all-zero count table");
  std::sort(counts.begin(), counts.end(), std::greater<>());
  double acc = 0.0;
  for (auto c : counts) {
    if (c == 0) break;
    acc += static_cast<double>(c) * std::log2(static_cast<double>(c));
  }
  double t = static_cast<double>(total);
  return std::log2(t) - acc / t;
}

std::unordered_map<std::int64_t, std::uint64_t> count_values(
    const TaskSpec& spec, bool force_scalar) {
  auto fn = force_scalar ? &kernels::batch_apply_scalar
                         : kernels::select_batch_fn(spec);
  const std::int64_t lo = spec.domain_min();
  const std::int64_t hi = spec.domain_max();
  const std::size_t side = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::int64_t> row(side);
  std::unordered_map<std::int64_t, std::uint64_t> counts;
  for (std::int64_t a = lo; a <= hi; ++a) {
    fn(a, lo, side, spec, row.data());
    for (std::int64_t v : row) ++counts[v];
  }
  return counts;
}

std::unordered_map<std::int64_t, std::uint64_t> count_values_sampled(
    const TaskSpec& spec, std::uint64_t size, std::uint64_t seed) {
  const std::uint64_t pairs = spec.domain_pairs();
  if (size > pairs) throw std::length_error("sample larger than domain");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, pairs - 1);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(size * 2);
  while (chosen.size() < size) chosen.insert(dist(rng));
  const std::int64_t lo = spec.domain_min();
  const std::uint64_t side = spec.domain_side();
  std::unordered_map<std::int64_t, std::uint64_t> counts;
  for (std::uint64_t idx : chosen) {
    std::int64_t a = lo + static_cast<std::int64_t>(idx / side);
    std::int64_t b = lo + static_cast<std::int64_t>(idx % side);
    ++counts[apply_operator(a, b, spec)];
  }
  return counts;
}

}  // namespace

double entropy_bits(std::span<const std::uint64_t> counts) {
  if (counts.empty()) throw std::invalid_argument("empty count table");
  return entropy_from_counts({counts.begin(), counts.end()});
}

double entropy_bits(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("empty weight table");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("negative weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("all-zero weight table");
  std::vector<double> ws(weights.begin(), weights.end());
  std::sort(ws.begin(), ws.end(), std::greater<>());
  double acc = 0.0;
  for (double w : ws)
    if (w > 0.0) acc += w * std::log2(w);
  return std::log2(total) - acc / total;
}

std::map<std::int64_t, std::uint64_t> label_counts(const TaskSpec& spec,
                                                   bool force_scalar_kernel) {
  auto counts = count_values(spec, force_scalar_kernel);
  return {counts.begin(), counts.end()};
}

LabelSpaceStats label_space_stats(const TaskSpec& spec,
                                  const StatsOptions& opts) {
  const std::uint64_t pairs = spec.domain_pairs();
  std::unordered_map<std::int64_t, std::uint64_t> counts;
  LabelSpaceStats stats;
  if (pairs <= opts.exact_budget) {
    counts = count_values(spec, opts.force_scalar_kernel);
    stats.domain_cardinality = pairs;
  } else if (opts.allow_sampling) {
    counts = count_values_sampled(spec, opts.sample_size, opts.seed);
    stats.domain_cardinality = opts.sample_size;
    stats.sampled = true;
  } else {
    throw std::length_error("domain exceeds exact enumeration budget");
  }

  const int width = output_width(spec);
  std::vector<std::array<std::uint64_t, 10>> pos(
      static_cast<std::size_t>(width), std::array<std::uint64_t, 10>{});
  std::vector<std::uint64_t> joint;
  joint.reserve(counts.size());
  for (auto [value, n] : counts) {
    joint.push_back(n);
    std::int64_t v = value;
    for (int i = width - 1; i >= 0; --i) {
      pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(v % 10)] += n;
      v /= 10;
    }
  }
  stats.joint_cardinality = joint.size();
  stats.joint_entropy = entropy_from_counts(std::move(joint));
  stats.per_position_entropy.reserve(static_cast<std::size_t>(width));
  for (const auto& table : pos)
    stats.per_position_entropy.push_back(
        entropy_from_counts({table.begin(), table.end()}));
  return stats;
}

std::array<std::uint64_t, 10> positional_distribution(const TaskSpec& spec,
                                                      int position) {
  const int width = output_width(spec);
  if (position < 1 || position > width)
    throw std::out_of_range("position index out of range");
  auto counts = count_values(spec, false);
  std::array<std::uint64_t, 10> table{};
  // position is 1-based from the most significant digit.
  std::int64_t div = 1;
  for (int i = 0; i < width - position; ++i) div *= 10;
  for (auto [value, n] : counts)
    table[static_cast<std::size_t>((value / div) % 10)] += n;
  return table;
}

}  // namespace symarith
