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

#include <random>
#include <stdexcept>

#include "symarith/taskspec.hpp"

using namespace symarith;

namespace {

TaskSpec make(Operator op, int n, Rule rule = {}, Format fmt = Format::Plain) {
  TaskSpec s;
  s.op = op;
  s.n = n;
  s.rule = rule;
  s.format = fmt;
  return s;
}

}  // namespace

TEST_CASE("apply_operator base and rule variants") {
  CHECK(apply_operator(12, 34, make(Operator::Mul, 2)) == 408);
  CHECK(apply_operator(13, 27, make(Operator::Mul, 2, {RuleKind::Scale, 8})) ==
        2808);
  CHECK(apply_operator(10, 10,
                       make(Operator::Add, 2, {RuleKind::Translate, 115})) ==
        135);
  CHECK(apply_operator(57, 68, make(Operator::Add, 2, {RuleKind::Mod, 100})) ==
        25);
}

TEST_CASE("apply_operator rejects out-of-domain operands") {
  TaskSpec s = make(Operator::Add, 2);
  CHECK_THROWS_AS(apply_operator(9, 34, s), std::domain_error);
  CHECK_THROWS_AS(apply_operator(12, 100, s), std::domain_error);
}

TEST_CASE("output_width") {
  CHECK(output_width(make(Operator::Add, 2)) == 3);
  CHECK(output_width(make(Operator::Mul, 2, {RuleKind::Scale, 2})) == 5);
  CHECK(output_width(make(Operator::Add, 2, {RuleKind::Mod, 10})) == 1);
  CHECK(output_width(make(Operator::Mul, 2)) == 4);
  CHECK(output_width(make(Operator::Add, 2, {RuleKind::Mod, 100})) == 2);
}

TEST_CASE("output_width is monotone under scaling") {
  for (Operator op : {Operator::Add, Operator::Mul})
    for (int n : {1, 2, 3}) {
      int w0 = output_width(make(op, n));
      int w2 = output_width(make(op, n, {RuleKind::Scale, 2}));
      int w8 = output_width(make(op, n, {RuleKind::Scale, 8}));
      CHECK(w8 >= w2);
      CHECK(w2 >= w0);
    }
}

TEST_CASE("render_example plain format") {
  auto rec = render_example(12, 34, make(Operator::Mul, 2));
  CHECK(rec.completion == "0 4 0 8");
  CHECK(rec.c_digits == "0408");
  auto rec2 = render_example(13, 10, make(Operator::Mul, 2));
  CHECK(rec2.prompt.find("1 3 \xC3\x97 1 0 =") != std::string::npos);
  auto rec3 = render_example(12, 34, make(Operator::Add, 2));
  CHECK(rec3.prompt == "1 2 + 3 4 =");
  CHECK(rec3.completion == "0 4 6");
}

TEST_CASE("render_example template formats") {
  auto nl = render_example(12, 34,
                           make(Operator::Add, 2, {}, Format::NaturalLanguage));
  CHECK(nl.prompt == "What is 1 2 add 3 4? Answer:");
  auto nlm = render_example(12, 34,
                            make(Operator::Mul, 2, {}, Format::NaturalLanguage));
  CHECK(nlm.prompt == "What is 1 2 multiply 3 4? Answer:");
  auto rs = render_example(12, 34,
                           make(Operator::Add, 2, {}, Format::RandomString));
  CHECK(rs.prompt == "fafr if 1 2 hfk 3 4? Ffhjar:");
  auto dd = render_example(12, 34,
                           make(Operator::Add, 2, {}, Format::DisturbedDigits));
  CHECK(dd.prompt == "3.123 34 1 2 461 3 4? 952414:");
}

TEST_CASE("parse_completion canonicalization") {
  TaskSpec s = make(Operator::Mul, 2);  // width 4
  CHECK(parse_completion("0 4 0 8", s) == "0408");
  CHECK(parse_completion("408", s) == "0408");
  CHECK_THROWS_AS(parse_completion("4 0 8 9 9", s), std::length_error);
  CHECK_THROWS_AS(parse_completion("4x8", s), std::invalid_argument);
  CHECK_THROWS_AS(parse_completion("   ", s), std::invalid_argument);
}

TEST_CASE("prompt de-rendering recovers operands for every format") {
  std::mt19937_64 rng(11);
  for (Format fmt : {Format::Plain, Format::NaturalLanguage,
                     Format::RandomString, Format::DisturbedDigits})
    for (Operator op : {Operator::Add, Operator::Mul}) {
      TaskSpec s = make(op, 3, {}, fmt);
      std::uniform_int_distribution<std::int64_t> dist(s.domain_min(),
                                                       s.domain_max());
      for (int i = 0; i < 50; ++i) {
        std::int64_t a = dist(rng), b = dist(rng);
        auto rec = render_example(a, b, s);
        auto [pa, pb] = parse_prompt(rec.prompt, s);
        CHECK(pa == a);
        CHECK(pb == b);
      }
    }
}

TEST_CASE("completion round trip, exhaustive for n <= 2") {
  for (Operator op : {Operator::Add, Operator::Mul})
    for (Rule rule : {Rule{}, Rule{RuleKind::Translate, 15},
                      Rule{RuleKind::Scale, 8}, Rule{RuleKind::Mod, 50}})
      for (int n : {1, 2}) {
        TaskSpec s = make(op, n, rule);
        int width = output_width(s);
        for (std::int64_t a = s.domain_min(); a <= s.domain_max(); ++a)
          for (std::int64_t b = s.domain_min(); b <= s.domain_max(); ++b) {
            auto rec = render_example(a, b, s);
            std::string expect = std::to_string(apply_operator(a, b, s));
            expect.insert(0, width - expect.size(), '0');
            REQUIRE(parse_completion(rec.completion, s) == expect);
          }
      }
}

TEST_CASE("mod results stay in range") {
  TaskSpec s = make(Operator::Mul, 2, {RuleKind::Mod, 50});
  for (std::int64_t a = 10; a <= 99; ++a)
    for (std::int64_t b = 10; b <= 99; ++b) {
      std::int64_t c = apply_operator(a, b, s);
      REQUIRE(c >= 0);
      REQUIRE(c < 50);
    }
}

TEST_CASE("spec string grammar round trips") {
  for (const char* str :
       {"add:n=2:rule=none:fmt=plain", "mul:n=3:rule=times8:fmt=nl",
        "add:n=2:rule=mod50:fmt=plain", "mul:n=1:rule=plus115:fmt=dd"}) {
    TaskSpec s = parse_spec(str);
    CHECK(s.canonical() == str);
  }
  CHECK(parse_spec("add:n=2") == make(Operator::Add, 2));
  CHECK(parse_spec("add:n=2:rule=mod50").rule == Rule{RuleKind::Mod, 50});
  CHECK_THROWS_AS(parse_spec("sub:n=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("add"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("add:n=2:rule=mod1"), std::invalid_argument);
}

TEST_CASE("task_id is stable and distinguishes pairs") {
  TaskSpec s = make(Operator::Add, 2);
  CHECK(task_id(s, 12, 34) == task_id(s, 12, 34));
  CHECK(task_id(s, 12, 34) != task_id(s, 34, 12));
  TaskSpec t = make(Operator::Mul, 2);
  CHECK(task_id(s, 12, 34) != task_id(t, 12, 34));
}
