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

#include "symarith/taskspec.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace symarith {

namespace {

std::int64_t pow10_i64(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// Format templates. Rendered text is pre + spaced(a) + mid + spaced(b) + post,
// followed by the spaced completion. Template byte content is fixed.
struct Template {
  std::string_view pre, mid, post;
};

Template format_template(const TaskSpec& spec) {
  switch (spec.format) {
    case Format::Plain:
      return {"", spec.op == Operator::Add ? " + " : " \xC3\x97 ", " ="};
    case Format::NaturalLanguage:
      return {"What is ",
              spec.op == Operator::Add ? " add " : " multiply ",
              "? Answer:"};
    case Format::RandomString:
      return {"fafr if ", " hfk ", "? Ffhjar:"};
    case Format::DisturbedDigits:
      return {"3.123 34 ", " 461 ", "? 952414:"};
  }
  throw std::logic_error("unknown format");
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument("bad integer: " + std::string(s));
  return v;
}

}  // namespace

int decimal_width(std::int64_t v) {
  int w = 1;
  while (v >= 10) {
    v /= 10;
    ++w;
  }
  return w;
}

std::int64_t TaskSpec::domain_min() const { return pow10_i64(n - 1); }
std::int64_t TaskSpec::domain_max() const { return pow10_i64(n) - 1; }
std::uint64_t TaskSpec::domain_side() const {
  return static_cast<std::uint64_t>(domain_max() - domain_min() + 1);
}
std::uint64_t TaskSpec::domain_pairs() const {
  return domain_side() * domain_side();
}

std::string TaskSpec::canonical() const {
  std::string s = op == Operator::Add ? "add" : "mul";
  s += ":n=" + std::to_string(n) + ":rule=";
  switch (rule.kind) {
    case RuleKind::None: s += "none"; break;
    case RuleKind::Translate: s += "plus" + std::to_string(rule.value); break;
    case RuleKind::Scale: s += "times" + std::to_string(rule.value); break;
    case RuleKind::Mod: s += "mod" + std::to_string(rule.value); break;
  }
  s += ":fmt=";
  switch (format) {
    case Format::Plain: s += "plain"; break;
    case Format::NaturalLanguage: s += "nl"; break;
    case Format::RandomString: s += "rs"; break;
    case Format::DisturbedDigits: s += "dd"; break;
  }
  return s;
}

TaskSpec parse_spec(std::string_view text) {
  TaskSpec spec;
  std::vector<std::string_view> parts;
  while (!text.empty()) {
    auto pos = text.find(':');
    parts.push_back(text.substr(0, pos));
    text = pos == std::string_view::npos ? std::string_view{}
                                         : text.substr(pos + 1);
  }
  if (parts.size() < 2) throw std::invalid_argument("spec needs op and n=");

  if (parts[0] == "add") spec.op = Operator::Add;
  else if (parts[0] == "mul") spec.op = Operator::Mul;
  else throw std::invalid_argument("unknown operator: " + std::string(parts[0]));

  bool have_n = false;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string_view p = parts[i];
    if (p.starts_with("n=")) {
      std::int64_t n = parse_int(p.substr(2));
      if (n < 1 || n > 9) throw std::invalid_argument("n out of range");
      spec.n = static_cast<int>(n);
      have_n = true;
    } else if (p.starts_with("rule=")) {
      std::string_view r = p.substr(5);
      if (r == "none") {
        spec.rule = {};
      } else if (r.starts_with("plus")) {
        std::int64_t d = parse_int(r.substr(4));
        if (d < 0) throw std::invalid_argument("plus delta must be >= 0");
        spec.rule = {RuleKind::Translate, d};
      } else if (r.starts_with("times")) {
        std::int64_t l = parse_int(r.substr(5));
        if (l < 2) throw std::invalid_argument("times factor must be >= 2");
        spec.rule = {RuleKind::Scale, l};
      } else if (r.starts_with("mod")) {
        std::int64_t m = parse_int(r.substr(3));
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        spec.rule = {RuleKind::Mod, m};
      } else {
        throw std::invalid_argument("unknown rule: " + std::string(r));
      }
    } else if (p.starts_with("fmt=")) {
      std::string_view f = p.substr(4);
      if (f == "plain") spec.format = Format::Plain;
      else if (f == "nl") spec.format = Format::NaturalLanguage;
      else if (f == "rs") spec.format = Format::RandomString;
      else if (f == "dd") spec.format = Format::DisturbedDigits;
      else throw std::invalid_argument("unknown format: " + std::string(f));
    } else if (p.starts_with("seed=")) {
      spec.seed = static_cast<std::uint64_t>(parse_int(p.substr(5)));
    } else {
      throw std::invalid_argument("unknown spec field: " + std::string(p));
    }
  }
  if (!have_n) throw std::invalid_argument("spec needs n=");
  return spec;
}

std::int64_t apply_operator(std::int64_t a, std::int64_t b,
                            const TaskSpec& spec) {
  if (a < spec.domain_min() || a > spec.domain_max() ||
      b < spec.domain_min() || b > spec.domain_max())
    throw std::domain_error("operand outside task domain");
  std::int64_t c = spec.op == Operator::Add ? a + b : a * b;
  switch (spec.rule.kind) {
    case RuleKind::None: break;
    case RuleKind::Translate: c += spec.rule.value; break;
    case RuleKind::Scale: c *= spec.rule.value; break;
    case RuleKind::Mod: c %= spec.rule.value; break;
  }
  return c;
}

int output_width(const TaskSpec& spec) {
  if (spec.rule.kind == RuleKind::Mod)
    return decimal_width(spec.rule.value - 1);
  // f is monotone in both operands for Add/Mul with Translate/Scale.
  std::int64_t m = spec.domain_max();
  std::int64_t top = spec.op == Operator::Add ? m + m : m * m;
  if (spec.rule.kind == RuleKind::Translate) top += spec.rule.value;
  if (spec.rule.kind == RuleKind::Scale) top *= spec.rule.value;
  return decimal_width(top);
}

std::string space_digits(std::string_view digits) {
  std::string out;
  out.reserve(digits.size() * 2);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ' ';
    out += digits[i];
  }
  return out;
}

std::string task_id(const TaskSpec& spec, std::int64_t a, std::int64_t b) {
  std::string key =
      spec.canonical() + "|" + std::to_string(a) + "|" + std::to_string(b);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExampleRecord render_example(std::int64_t a, std::int64_t b,
                             const TaskSpec& spec) {
  std::int64_t c = apply_operator(a, b, spec);
  int width = output_width(spec);
  std::string c_digits = std::to_string(c);
  c_digits.insert(0, width - c_digits.size(), '0');

  Template t = format_template(spec);
  ExampleRecord rec;
  rec.a = a;
  rec.b = b;
  rec.c_digits = c_digits;
  rec.prompt = std::string(t.pre) + space_digits(std::to_string(a)) +
               std::string(t.mid) + space_digits(std::to_string(b)) +
               std::string(t.post);
  rec.completion = space_digits(c_digits);
  rec.task_id = task_id(spec, a, b);
  return rec;
}

std::string parse_completion(std::string_view text, const TaskSpec& spec) {
  std::string digits;
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("non-digit in completion");
    digits += ch;
  }
  if (digits.empty()) throw std::invalid_argument("empty completion");
  std::size_t width = static_cast<std::size_t>(output_width(spec));
  if (digits.size() > width)
    throw std::length_error("completion wider than output width");
  digits.insert(0, width - digits.size(), '0');
  return digits;
}

std::pair<std::int64_t, std::int64_t> parse_prompt(std::string_view prompt,
                                                   const TaskSpec& spec) {
  Template t = format_template(spec);
  if (!prompt.starts_with(t.pre) || !prompt.ends_with(t.post))
    throw std::invalid_argument("prompt does not match template");
  std::string_view body = prompt.substr(
      t.pre.size(), prompt.size() - t.pre.size() - t.post.size());
  // Operand digits are single characters separated by spaces, so the mid
  // literal cannot occur inside an operand rendering.
  auto pos = body.find(t.mid);
  if (pos == std::string_view::npos)
    throw std::invalid_argument("prompt does not match template");
  auto strip = [](std::string_view s) {
    std::string d;
    for (char ch : s) {
      if (ch == ' ') continue;
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("non-digit in operand");
      d += ch;
    }
    if (d.empty()) throw std::invalid_argument("empty operand");
    return parse_int(d);
  };
  return {strip(body.substr(0, pos)), strip(body.substr(pos + t.mid.size()))};
}

}  // namespace symarith
