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

#include "symarith/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "symarith/stats.hpp"

namespace symarith {

namespace {

std::string positions_to_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::vector<int> parse_positions(std::string_view text, std::size_t& pos,
                                 char label) {
  if (pos >= text.size() || text[pos] != label)
    throw std::invalid_argument(std::string("expected '") + label +
                                "' in subgroup expression");
  ++pos;
  if (pos >= text.size() || text[pos] != '{')
    throw std::invalid_argument("expected '{' in subgroup expression");
  ++pos;
  std::vector<int> out;
  int cur = -1;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch >= '0' && ch <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
    } else if (ch == ',') {
      if (cur < 0) throw std::invalid_argument("empty position in subgroup");
      out.push_back(cur);
      cur = -1;
    } else if (ch == '}') {
      if (cur >= 0) out.push_back(cur);
      ++pos;
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    } else {
      throw std::invalid_argument("bad character in subgroup expression");
    }
  }
  throw std::invalid_argument("unterminated '{' in subgroup expression");
}

std::string extract(std::string_view digits, const std::vector<int>& pos) {
  std::string out;
  out.reserve(pos.size());
  for (int p : pos) {
    if (p < 1 || static_cast<std::size_t>(p) > digits.size())
      throw std::out_of_range("subgroup position out of bounds");
    out += digits[static_cast<std::size_t>(p - 1)];
  }
  return out;
}

std::string pad_operand(std::int64_t v, int n) {
  std::string s = std::to_string(v);
  if (static_cast<int>(s.size()) != n)
    throw std::out_of_range("operand width mismatch");
  return s;
}

}  // namespace

std::string SubgroupSpec::to_string() const {
  return "A" + positions_to_string(ia) + "B" + positions_to_string(ib) + "C" +
         positions_to_string(ic);
}

SubgroupSpec parse_subgroup(std::string_view text) {
  std::size_t pos = 0;
  SubgroupSpec s;
  s.ia = parse_positions(text, pos, 'A');
  s.ib = parse_positions(text, pos, 'B');
  s.ic = parse_positions(text, pos, 'C');
  if (pos != text.size())
    throw std::invalid_argument("trailing characters in subgroup expression");
  if (s.ic.empty())
    throw std::invalid_argument("subgroup output set must be nonempty");
  return s;
}

void validate_subgroup(const SubgroupSpec& s, const TaskSpec& spec) {
  if (s.ic.empty())
    throw std::invalid_argument("subgroup output set must be nonempty");
  const int width = output_width(spec);
  for (int p : s.ia)
    if (p < 1 || p > spec.n) throw std::out_of_range("ia position out of range");
  for (int p : s.ib)
    if (p < 1 || p > spec.n) throw std::out_of_range("ib position out of range");
  for (int p : s.ic)
    if (p < 1 || p > width) throw std::out_of_range("ic position out of range");
}

Projection project(std::int64_t a, std::int64_t b, std::string_view c_digits,
                   const SubgroupSpec& s, const TaskSpec& spec) {
  validate_subgroup(s, spec);
  return {extract(pad_operand(a, spec.n), s.ia),
          extract(pad_operand(b, spec.n), s.ib), extract(c_digits, s.ic)};
}

SubgroupCounts subgroup_counts(const TaskSpec& spec, const SubgroupSpec& s) {
  validate_subgroup(s, spec);
  const int width = output_width(spec);
  SubgroupCounts counts;
  enumerate_domain(spec, [&](std::int64_t a, std::int64_t b) {
    std::int64_t c = apply_operator(a, b, spec);
    std::string c_digits = std::to_string(c);
    c_digits.insert(0, static_cast<std::size_t>(width) - c_digits.size(), '0');
    std::string ka = extract(pad_operand(a, spec.n), s.ia);
    std::string kb = extract(pad_operand(b, spec.n), s.ib);
    std::string kc = extract(c_digits, s.ic);
    ++counts[{std::move(ka), std::move(kb)}][kc];
  });
  return counts;
}

QualityReport quality_from_counts(const SubgroupCounts& counts,
                                  const SubgroupSpec& s) {
  if (counts.empty()) throw std::invalid_argument("empty subgroup counts");
  QualityReport rep;
  rep.subgroup = s;
  rep.domain_cardinality = counts.size();

  std::map<std::string, std::uint64_t> marginal;
  std::uint64_t total = 0;
  std::uint64_t hits = 0;
  for (const auto& [cell, labels] : counts) {
    std::uint64_t best = 0;
    for (const auto& [c, n] : labels) {
      marginal[c] += n;
      total += n;
      best = std::max(best, n);
    }
    hits += best;
  }
  rep.label_cardinality = marginal.size();
  std::vector<std::uint64_t> m;
  m.reserve(marginal.size());
  for (const auto& [c, n] : marginal) m.push_back(n);
  rep.label_entropy = entropy_bits(m);
  rep.quality = static_cast<double>(hits) / static_cast<double>(total);
  return rep;
}

QualityReport quality(const TaskSpec& spec, const SubgroupSpec& s) {
  return quality_from_counts(subgroup_counts(spec, s), s);
}

OracleModel oracle_fit(const Dataset& train, const SubgroupSpec& s) {
  if (train.records.empty())
    throw std::invalid_argument("cannot fit oracle on empty dataset");
  validate_subgroup(s, train.spec);

  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::uint64_t>>
      counts;
  std::map<std::string, std::uint64_t> marginal;
  for (const ExampleRecord& rec : train.records) {
    Projection p = project(rec.a, rec.b, rec.c_digits, s, train.spec);
    ++counts[{p.a_digits, p.b_digits}][p.c_digits];
    ++marginal[p.c_digits];
  }

  // std::map iterates labels in ascending order, so taking the strictly
  // larger count realizes the smallest-label tie break.
  auto modal = [](const std::map<std::string, std::uint64_t>& table) {
    std::string best;
    std::uint64_t best_n = 0;
    for (const auto& [c, n] : table)
      if (n > best_n) {
        best = c;
        best_n = n;
      }
    return best;
  };

  OracleModel m;
  m.subgroup = s;
  for (const auto& [cell, labels] : counts) m.table[cell] = modal(labels);
  m.global_mode = modal(marginal);
  return m;
}

double oracle_eval(const OracleModel& m, const Dataset& test) {
  if (test.records.empty())
    throw std::invalid_argument("cannot evaluate on empty dataset");
  std::uint64_t correct = 0;
  for (const ExampleRecord& rec : test.records) {
    Projection p = project(rec.a, rec.b, rec.c_digits, m.subgroup, test.spec);
    auto it = m.table.find({p.a_digits, p.b_digits});
    const std::string& pred = it != m.table.end() ? it->second : m.global_mode;
    if (pred == p.c_digits) ++correct;
  }
  return static_cast<double>(correct) /
         static_cast<double>(test.records.size());
}

DifficultyEstimate difficulty_estimate(const std::vector<double>& h_values,
                                       std::size_t m) {
  if (h_values.size() != m || m == 0)
    throw std::invalid_argument("difficulty vector length mismatch");
  double log_sum = 0.0;
  for (double h : h_values) {
    if (h <= 0.0) throw std::invalid_argument("difficulty must be positive");
    log_sum += std::log(h);
  }
  DifficultyEstimate est;
  est.geometric_mean = std::exp(log_sum / static_cast<double>(m));
  est.product = std::exp(log_sum);
  return est;
}

std::vector<SubgroupSpec> enumerate_subgroups(const TaskSpec& spec,
                                              int max_input_positions,
                                              int ic_size) {
  if (max_input_positions < 0 || ic_size < 0)
    throw std::invalid_argument("subgroup caps must be nonnegative");
  const int n = spec.n;
  const int width = output_width(spec);

  auto subsets = [](int limit, int max_size) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << limit); ++mask) {
      if (std::popcount(mask) > max_size) continue;
      std::vector<int> v;
      for (int i = 0; i < limit; ++i)
        if (mask & (1u << i)) v.push_back(i + 1);
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) {
                return x.size() != y.size() ? x.size() < y.size() : x < y;
              });
    return out;
  };

  auto ia_opts = subsets(n, max_input_positions);
  auto ic_opts = subsets(width, ic_size);

  std::vector<SubgroupSpec> out;
  for (const auto& ia : ia_opts)
    for (const auto& ib : ia_opts) {
      if (static_cast<int>(ia.size() + ib.size()) > max_input_positions)
        continue;
      for (const auto& ic : ic_opts) {
        if (ic.empty()) continue;
        out.push_back({ia, ib, ic});
      }
    }
  return out;
}

}  // namespace symarith
