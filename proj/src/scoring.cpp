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

#include "symarith/scoring.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace symarith {

ScoreReport score(const std::vector<PredictionRecord>& predictions,
                  const TaskSpec& spec) {
  if (predictions.empty())
    throw std::invalid_argument("no predictions to score");
  const auto width = static_cast<std::size_t>(output_width(spec));

  ScoreReport rep;
  rep.n_records = predictions.size();
  std::vector<std::size_t> pos_correct(width, 0);
  std::size_t exact = 0;
  std::size_t failures = 0;

  for (const PredictionRecord& p : predictions) {
    if (p.expected.size() != width)
      throw std::invalid_argument("expected string has wrong width");
    std::string predicted;
    try {
      predicted = parse_completion(p.predicted_raw, spec);
    } catch (const std::exception&) {
      ++failures;  // scores zero at every position
      continue;
    }
    bool all = true;
    for (std::size_t i = 0; i < width; ++i) {
      if (predicted[i] == p.expected[i]) ++pos_correct[i];
      else all = false;
    }
    if (all) ++exact;
  }

  const double n = static_cast<double>(rep.n_records);
  rep.exact_match = static_cast<double>(exact) / n;
  rep.parse_failure_rate = static_cast<double>(failures) / n;
  rep.position_accuracy.reserve(width);
  for (std::size_t c : pos_correct)
    rep.position_accuracy.push_back(static_cast<double>(c) / n);
  return rep;
}

std::vector<PredictionRecord> join_predictions(
    const Dataset& dataset,
    const std::vector<std::pair<std::string, std::string>>& predictions) {
  std::unordered_map<std::string, const std::string*> by_id;
  for (const auto& [id, text] : predictions) by_id[id] = &text;

  std::vector<PredictionRecord> out;
  out.reserve(dataset.records.size());
  for (const ExampleRecord& rec : dataset.records) {
    PredictionRecord p;
    p.task_id = rec.task_id;
    p.expected = rec.c_digits;
    auto it = by_id.find(rec.task_id);
    if (it != by_id.end()) p.predicted_raw = *it->second;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_predictions(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      out.emplace_back(j.at("task_id").get<std::string>(),
                       j.at("prediction").get<std::string>());
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": malformed prediction: " << e.what();
      throw std::runtime_error(msg.str());
    }
  }
  return out;
}

ScoreDelta accuracy_delta(const ScoreReport& before, const ScoreReport& after) {
  if (before.position_accuracy.size() != after.position_accuracy.size())
    throw std::invalid_argument("output width mismatch between reports");
  ScoreDelta d;
  d.exact_match = after.exact_match - before.exact_match;
  d.per_position.reserve(before.position_accuracy.size());
  for (std::size_t i = 0; i < before.position_accuracy.size(); ++i)
    d.per_position.push_back(after.position_accuracy[i] -
                             before.position_accuracy[i]);
  return d;
}

void ucurve_export(
    const std::vector<std::pair<std::string, ScoreReport>>& runs,
    std::ostream& out) {
  if (runs.empty()) throw std::invalid_argument("no runs to export");
  const std::size_t width = runs.front().second.position_accuracy.size();
  out << "run";
  for (std::size_t i = 1; i <= width; ++i) out << ",C" << i;
  out << '\n';
  out.precision(6);
  out << std::fixed;
  for (const auto& [label, rep] : runs) {
    if (rep.position_accuracy.size() != width)
      throw std::invalid_argument("output width mismatch across runs");
    out << label;
    for (double acc : rep.position_accuracy) out << ',' << acc;
    out << '\n';
  }
}

}  // namespace symarith
