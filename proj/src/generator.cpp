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

#include "symarith/generator.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace symarith {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Exhaustive: return "exhaustive";
    case Provenance::Sampled: return "sampled";
    case Provenance::Split: return "split";
  }
  return "?";
}

Provenance provenance_from(const std::string& s) {
  if (s == "exhaustive") return Provenance::Exhaustive;
  if (s == "sampled") return Provenance::Sampled;
  if (s == "split") return Provenance::Split;
  throw std::runtime_error("unknown provenance: " + s);
}

}  // namespace

void enumerate_domain(
    const TaskSpec& spec,
    const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const std::int64_t lo = spec.domain_min();
  const std::int64_t hi = spec.domain_max();
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t b = lo; b <= hi; ++b) fn(a, b);
}

Dataset exhaustive_dataset(const TaskSpec& spec) {
  Dataset d;
  d.spec = spec;
  d.provenance = Provenance::Exhaustive;
  d.records.reserve(spec.domain_pairs());
  enumerate_domain(spec, [&](std::int64_t a, std::int64_t b) {
    d.records.push_back(render_example(a, b, spec));
  });
  return d;
}

Dataset sample_dataset(const TaskSpec& spec, std::uint64_t size,
                       std::uint64_t seed) {
  const std::uint64_t pairs = spec.domain_pairs();
  if (size > pairs) throw std::length_error("sample size exceeds domain size");

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> picked;
  picked.reserve(size);
  if (size * 2 >= pairs) {
    // Dense draw: partial Fisher-Yates over the whole index range.
    std::vector<std::uint64_t> all(pairs);
    std::iota(all.begin(), all.end(), 0);
    for (std::uint64_t i = 0; i < size; ++i) {
      std::uniform_int_distribution<std::uint64_t> dist(i, pairs - 1);
      std::swap(all[i], all[dist(rng)]);
    }
    picked.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  } else {
    std::uniform_int_distribution<std::uint64_t> dist(0, pairs - 1);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(size * 2);
    while (seen.size() < size) {
      std::uint64_t idx = dist(rng);
      if (seen.insert(idx).second) picked.push_back(idx);
    }
  }
  std::sort(picked.begin(), picked.end());

  Dataset d;
  d.spec = spec;
  d.provenance = Provenance::Sampled;
  d.sample_size = size;
  d.seed = seed;
  d.records.reserve(size);
  const std::int64_t lo = spec.domain_min();
  const std::uint64_t side = spec.domain_side();
  for (std::uint64_t idx : picked) {
    std::int64_t a = lo + static_cast<std::int64_t>(idx / side);
    std::int64_t b = lo + static_cast<std::int64_t>(idx % side);
    d.records.push_back(render_example(a, b, spec));
  }
  return d;
}

std::array<Dataset, 3> split_dataset(const Dataset& d, const SplitRatios& r,
                                     std::uint64_t seed) {
  if (d.records.empty()) throw std::invalid_argument("empty dataset");
  if (d.records.size() < 10)
    throw std::invalid_argument("need at least 10 records to split");
  if (r.train <= 0 || r.val <= 0 || r.test <= 0)
    throw std::invalid_argument("split ratios must be positive");
  if (std::abs(r.train + r.val + r.test - 1.0) > 1e-9)
    throw std::invalid_argument("split ratios must sum to 1");

  const std::size_t n = d.records.size();
  const auto n_val = static_cast<std::size_t>(r.val * static_cast<double>(n));
  const auto n_test = static_cast<std::size_t>(r.test * static_cast<double>(n));
  const std::size_t n_train = n - n_val - n_test;  // remainder to train

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::array<Dataset, 3> out;
  for (auto& part : out) {
    part.spec = d.spec;
    part.provenance = Provenance::Split;
    part.seed = seed;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const ExampleRecord& rec = d.records[order[i]];
    if (i < n_train) out[0].records.push_back(rec);
    else if (i < n_train + n_val) out[1].records.push_back(rec);
    else out[2].records.push_back(rec);
  }
  return out;
}

void write_records(const Dataset& d, std::ostream& out) {
  for (const ExampleRecord& rec : d.records) {
    ordered_json j;
    j["task_id"] = rec.task_id;
    j["a"] = rec.a;
    j["b"] = rec.b;
    j["prompt"] = rec.prompt;
    j["completion"] = rec.completion;
    out << j.dump() << '\n';
  }
}

void write_records(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_records(d, out);

  ordered_json meta;
  meta["spec"] = d.spec.canonical();
  meta["provenance"] = provenance_name(d.provenance);
  meta["sample_size"] = d.sample_size;
  meta["seed"] = d.seed;
  meta["records"] = d.records.size();
  std::ofstream mout(path + ".meta.json", std::ios::binary);
  if (!mout) throw std::runtime_error("cannot write sidecar for: " + path);
  mout << meta.dump(2) << '\n';
}

Dataset read_records(const std::string& path) {
  std::ifstream min(path + ".meta.json");
  if (!min) throw std::runtime_error("missing sidecar: " + path + ".meta.json");
  ordered_json meta = ordered_json::parse(min);

  Dataset d;
  d.spec = parse_spec(meta.at("spec").get<std::string>());
  d.provenance = provenance_from(meta.at("provenance").get<std::string>());
  d.sample_size = meta.at("sample_size").get<std::uint64_t>();
  d.seed = meta.at("seed").get<std::uint64_t>();

  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      ordered_json j = ordered_json::parse(line);
      ExampleRecord rec;
      rec.task_id = j.at("task_id").get<std::string>();
      rec.a = j.at("a").get<std::int64_t>();
      rec.b = j.at("b").get<std::int64_t>();
      rec.prompt = j.at("prompt").get<std::string>();
      rec.completion = j.at("completion").get<std::string>();
      rec.c_digits = parse_completion(rec.completion, d.spec);
      d.records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": malformed record: " << e.what();
      throw std::runtime_error(msg.str());
    }
  }
  return d;
}

}  // namespace symarith
