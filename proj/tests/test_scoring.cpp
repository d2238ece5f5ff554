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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "symarith/scoring.hpp"

using namespace symarith;

namespace {

TaskSpec add2() {
  TaskSpec s;
  s.op = Operator::Add;
  s.n = 2;
  return s;
}

std::vector<PredictionRecord> perfect_predictions(const Dataset& d) {
  std::vector<PredictionRecord> out;
  for (const auto& rec : d.records)
    out.push_back({rec.task_id, rec.c_digits, rec.completion});
  return out;
}

}  // namespace

TEST_CASE("all-correct predictions") {
  Dataset d = sample_dataset(add2(), 100, 3);
  ScoreReport rep = score(perfect_predictions(d), d.spec);
  CHECK(rep.exact_match == 1.0);
  CHECK(rep.parse_failure_rate == 0.0);
  for (double p : rep.position_accuracy) CHECK(p == 1.0);
}

TEST_CASE("planted per-position error rates are recovered") {
  Dataset d = sample_dataset(add2(), 200, 4);
  auto preds = perfect_predictions(d);
  // corrupt the middle digit in exactly half the records
  for (std::size_t i = 0; i < preds.size(); i += 2) {
    std::string wrong = preds[i].expected;
    wrong[1] = wrong[1] == '9' ? '0' : wrong[1] + 1;
    preds[i].predicted_raw = wrong;
  }
  ScoreReport rep = score(preds, d.spec);
  CHECK(rep.position_accuracy[0] == 1.0);
  CHECK(rep.position_accuracy[1] == 0.5);
  CHECK(rep.position_accuracy[2] == 1.0);
  CHECK(rep.exact_match == 0.5);
}

TEST_CASE("missing leading zeros still score correct") {
  TaskSpec spec = add2();
  Dataset d = sample_dataset(spec, 50, 5);
  std::vector<PredictionRecord> preds;
  for (const auto& rec : d.records) {
    std::string trimmed = rec.c_digits;
    trimmed.erase(0, trimmed.find_first_not_of('0'));
    if (trimmed.empty()) trimmed = "0";
    preds.push_back({rec.task_id, rec.c_digits, trimmed});
  }
  ScoreReport rep = score(preds, spec);
  CHECK(rep.exact_match == 1.0);
}

TEST_CASE("unparseable predictions score zero everywhere") {
  Dataset d = sample_dataset(add2(), 20, 6);
  std::vector<PredictionRecord> preds;
  for (const auto& rec : d.records)
    preds.push_back({rec.task_id, rec.c_digits, "i refuse"});
  ScoreReport rep = score(preds, d.spec);
  CHECK(rep.parse_failure_rate == 1.0);
  CHECK(rep.exact_match == 0.0);
  for (double p : rep.position_accuracy) CHECK(p == 0.0);
}

TEST_CASE("exact match is consistent with positional accuracy") {
  std::mt19937_64 rng(99);
  Dataset d = sample_dataset(add2(), 50, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    auto preds = perfect_predictions(d);
    std::uniform_int_distribution<int> coin(0, 3);
    std::size_t manual_exact = 0;
    for (auto& p : preds) {
      int r = coin(rng);
      if (r == 1) {
        std::string wrong = p.expected;
        std::uniform_int_distribution<std::size_t> pos(0, wrong.size() - 1);
        std::size_t i = pos(rng);
        wrong[i] = wrong[i] == '9' ? '0' : wrong[i] + 1;
        p.predicted_raw = wrong;
      } else if (r == 2) {
        p.predicted_raw = "garbage";
      } else {
        ++manual_exact;
      }
    }
    ScoreReport rep = score(preds, d.spec);
    REQUIRE(rep.exact_match ==
            static_cast<double>(manual_exact) /
                static_cast<double>(preds.size()));
    double min_pos = *std::min_element(rep.position_accuracy.begin(),
                                       rep.position_accuracy.end());
    REQUIRE(rep.exact_match <= min_pos + 1e-15);
  }
}

TEST_CASE("record order does not matter") {
  Dataset d = sample_dataset(add2(), 64, 8);
  auto preds = perfect_predictions(d);
  preds[3].predicted_raw = "junk";
  preds[9].predicted_raw = "junk";
  ScoreReport before = score(preds, d.spec);
  std::mt19937_64 rng(1);
  std::shuffle(preds.begin(), preds.end(), rng);
  ScoreReport after = score(preds, d.spec);
  CHECK(before.exact_match == after.exact_match);
  CHECK(before.position_accuracy == after.position_accuracy);
  CHECK(before.parse_failure_rate == after.parse_failure_rate);
}

TEST_CASE("accuracy_delta") {
  ScoreReport before{100, 0.50, {0.9, 0.8, 0.7}, 0.0};
  ScoreReport after{100, 0.54, {0.95, 0.8, 0.65}, 0.0};
  ScoreDelta d = accuracy_delta(before, after);
  CHECK(d.exact_match == doctest::Approx(0.04));
  CHECK(d.per_position[0] == doctest::Approx(0.05));
  CHECK(d.per_position[2] == doctest::Approx(-0.05));

  ScoreDelta zero = accuracy_delta(before, before);
  CHECK(zero.exact_match == 0.0);

  ScoreReport wider{100, 0.5, {0.9, 0.8, 0.7, 0.6}, 0.0};
  CHECK_THROWS_AS(accuracy_delta(before, wider), std::invalid_argument);
}

TEST_CASE("ucurve export round trips planted accuracies") {
  std::vector<std::pair<std::string, ScoreReport>> runs;
  runs.emplace_back("6480", ScoreReport{10, 0.1, {1.0, 0.5, 1.0}, 0.0});
  runs.emplace_back("12960", ScoreReport{10, 0.2, {1.0, 0.75, 1.0}, 0.0});
  std::ostringstream out;
  ucurve_export(runs, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "run,C1,C2,C3");
  std::getline(in, line);
  CHECK(line == "6480,1.000000,0.500000,1.000000");
  std::getline(in, line);
  CHECK(line == "12960,1.000000,0.750000,1.000000");
  CHECK(!std::getline(in, line));

  ScoreReport wider{10, 0.1, {1.0, 1.0}, 0.0};
  runs.emplace_back("x", wider);
  std::ostringstream out2;
  CHECK_THROWS_AS(ucurve_export(runs, out2), std::invalid_argument);
}

TEST_CASE("join matches by task_id, not row order") {
  Dataset d = sample_dataset(add2(), 10, 11);
  std::vector<std::pair<std::string, std::string>> file;
  for (const auto& rec : d.records)
    file.emplace_back(rec.task_id, rec.completion);
  std::reverse(file.begin(), file.end());
  file.emplace_back("ffffffffffffffff", "1 2 3");  // unknown id, ignored
  auto joined = join_predictions(d, file);
  REQUIRE(joined.size() == d.records.size());
  ScoreReport rep = score(joined, d.spec);
  CHECK(rep.exact_match == 1.0);

  // a record without a prediction scores as a parse failure
  file.erase(file.begin());
  auto partial = join_predictions(d, file);
  ScoreReport rep2 = score(partial, d.spec);
  CHECK(rep2.parse_failure_rate == doctest::Approx(0.1));
}
