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

#include <iosfwd>
#include <string>
#include <vector>

#include "symarith/generator.hpp"
#include "symarith/taskspec.hpp"

namespace symarith {

/// Expected vs. predicted completion for one example. `predicted_raw` is the
/// untouched model output; parsing happens at scoring time.
struct PredictionRecord {
  std::string task_id;
  std::string expected;  // canonical digit string
  std::string predicted_raw;
};

struct ScoreReport {
  std::size_t n_records = 0;
  double exact_match = 0.0;
  std::vector<double> position_accuracy;  // length output_width
  double parse_failure_rate = 0.0;
};

/// Scores predictions against expected digit strings. Unparseable
/// predictions count as wrong at every position (never dropped, so N stays
/// comparable across reports).
ScoreReport score(const std::vector<PredictionRecord>& predictions,
                  const TaskSpec& spec);

/// Joins a prediction file (task_id -> raw text) to a dataset by task_id.
/// Dataset records without a prediction get an empty raw text, which scores
/// as a parse failure. Predictions with unknown task_ids are ignored.
std::vector<PredictionRecord> join_predictions(
    const Dataset& dataset,
    const std::vector<std::pair<std::string, std::string>>& predictions);

/// Reads a line-delimited prediction file: one JSON object per line with
/// fields task_id and prediction. Malformed lines raise std::runtime_error
/// naming the line number.
std::vector<std::pair<std::string, std::string>> read_predictions(
    const std::string& path);

struct ScoreDelta {
  double exact_match = 0.0;
  std::vector<double> per_position;
};

/// after - before, overall and per position. Throws std::invalid_argument
/// on a width mismatch.
ScoreDelta accuracy_delta(const ScoreReport& before, const ScoreReport& after);

/// CSV matrix of position accuracies: one row per labeled run, one column
/// per output position. All runs must share the output width.
void ucurve_export(
    const std::vector<std::pair<std::string, ScoreReport>>& runs,
    std::ostream& out);

}  // namespace symarith
