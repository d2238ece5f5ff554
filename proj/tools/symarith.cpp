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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symarith/diagnostics.hpp"
#include "symarith/generator.hpp"
#include "symarith/scoring.hpp"
#include "symarith/stats.hpp"
#include "symarith/subgroup.hpp"
#include "symarith/taskspec.hpp"

namespace {

using namespace symarith;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SYMARITH_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

// "--out -" means stdout.
struct OutStream {
  std::ofstream file;
  std::ostream& ref;

  explicit OutStream(const std::string& path)
      : file(), ref(open(path)) {}

 private:
  std::ostream& open(const std::string& path) {
    if (path == "-" || path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    return file;
  }
};

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Symbolic format signature mirroring the published table layout, e.g.
// "A1A2+B1B2=C1C2C3" or "What is A1A2 add B1B2? Answer: C1C2C3".
std::string format_signature(const TaskSpec& spec) {
  auto run = [](char label, int count) {
    std::string s;
    for (int i = 1; i <= count; ++i) s += label + std::to_string(i);
    return s;
  };
  std::string a = run('A', spec.n);
  std::string b = run('B', spec.n);
  std::string c = run('C', output_width(spec));
  switch (spec.format) {
    case Format::Plain:
      return a + (spec.op == Operator::Add ? "+" : "\xC3\x97") + b + "=" + c;
    case Format::NaturalLanguage:
      return "What is " + a +
             (spec.op == Operator::Add ? " add " : " multiply ") + b +
             "? Answer: " + c;
    case Format::RandomString:
      return "fafr if " + a + " hfk " + b + "? Ffhjar: " + c;
    case Format::DisturbedDigits:
      return "3.123 34 " + a + " 461 " + b + "? 952414: " + c;
  }
  return "?";
}

std::string rule_expression(const TaskSpec& spec) {
  std::string base = spec.op == Operator::Add ? "a+b" : "a*b";
  switch (spec.rule.kind) {
    case RuleKind::None: return base;
    case RuleKind::Translate:
      return base + "+" + std::to_string(spec.rule.value);
    case RuleKind::Scale: return base + "*" + std::to_string(spec.rule.value);
    case RuleKind::Mod:
      return "(" + base + ") mod " + std::to_string(spec.rule.value);
  }
  return base;
}

void print_stats_row(std::ostream& out, const TaskSpec& spec,
                     const LabelSpaceStats& st) {
  out << rule_expression(spec) << ',' << format_signature(spec);
  for (std::size_t i = 0; i < 5; ++i)
    out << ','
        << (i < st.per_position_entropy.size()
                ? fmt4(st.per_position_entropy[i])
                : std::string("-"));
  out << ',' << st.joint_cardinality << ',' << fmt4(st.joint_entropy) << '\n';
}

int run_gen(const std::string& spec_str, bool all, std::uint64_t size,
            std::uint64_t seed, const std::string& out_path,
            const std::string& split_arg) {
  TaskSpec spec = parse_spec(spec_str);
  Dataset d = all ? exhaustive_dataset(spec) : sample_dataset(spec, size, seed);
  if (!split_arg.empty()) {
    SplitRatios r;
    if (std::sscanf(split_arg.c_str(), "%lf,%lf,%lf", &r.train, &r.val,
                    &r.test) != 3)
      throw std::invalid_argument("bad --split, expected t,v,s");
    auto parts = split_dataset(d, r, seed);
    if (out_path == "-")
      throw std::invalid_argument("--split needs a file path for --out");
    write_records(parts[0], out_path + ".train");
    write_records(parts[1], out_path + ".val");
    write_records(parts[2], out_path + ".test");
    std::cerr << "wrote " << parts[0].records.size() << "/"
              << parts[1].records.size() << "/" << parts[2].records.size()
              << " records\n";
    return 0;
  }
  if (out_path == "-") {
    write_records(d, std::cout);
  } else {
    write_records(d, out_path);
    std::cerr << "wrote " << d.records.size() << " records to " << out_path
              << '\n';
  }
  return 0;
}

std::vector<TaskSpec> table_rule_sweep(const TaskSpec& base) {
  std::vector<Rule> add_rules = {
      {}, {RuleKind::Translate, 1}, {RuleKind::Translate, 15},
      {RuleKind::Translate, 115}, {RuleKind::Mod, 100}, {RuleKind::Mod, 50},
      {RuleKind::Mod, 10}};
  std::vector<Rule> mul_rules = {
      {}, {RuleKind::Scale, 2}, {RuleKind::Scale, 4}, {RuleKind::Scale, 8},
      {RuleKind::Mod, 100}, {RuleKind::Mod, 50}, {RuleKind::Mod, 10}};
  std::vector<TaskSpec> out;
  for (Operator op : {Operator::Add, Operator::Mul}) {
    for (const Rule& r : (op == Operator::Add ? add_rules : mul_rules)) {
      TaskSpec s = base;
      s.op = op;
      s.rule = r;
      out.push_back(s);
    }
  }
  return out;
}

int run_stats(const std::string& spec_str, bool all_rules,
              std::uint64_t budget, bool sampled, std::uint64_t sample_size,
              std::uint64_t seed, const std::string& out_path) {
  TaskSpec spec = parse_spec(spec_str);
  StatsOptions opts;
  opts.exact_budget = budget;
  opts.allow_sampling = sampled;
  opts.sample_size = sample_size;
  opts.seed = seed;

  OutStream out(out_path);
  out.ref << "task,format,H(C1),H(C2),H(C3),H(C4),H(C5),|L|,H(L)\n";
  auto emit = [&](const TaskSpec& s) {
    LabelSpaceStats st = label_space_stats(s, opts);
    print_stats_row(out.ref, s, st);
    if (st.sampled)
      std::cerr << "note: " << rule_expression(s) << " sampled "
                << st.domain_cardinality << " pairs, seed " << opts.seed
                << '\n';
  };
  if (all_rules) {
    for (const TaskSpec& s : table_rule_sweep(spec)) emit(s);
  } else {
    emit(spec);
  }
  return 0;
}

int run_quality(const std::string& spec_str,
                const std::vector<std::string>& exprs, bool enumerate,
                int max_inputs, int ic_size, const std::string& out_path) {
  TaskSpec spec = parse_spec(spec_str);
  std::vector<SubgroupSpec> subgroups;
  for (const std::string& e : exprs) subgroups.push_back(parse_subgroup(e));
  if (enumerate) {
    auto more = enumerate_subgroups(spec, max_inputs, ic_size);
    subgroups.insert(subgroups.end(), more.begin(), more.end());
  }
  if (subgroups.empty())
    throw std::invalid_argument("no subgroups given; use --subgroup or --enumerate");

  OutStream out(out_path);
  out.ref << "subgroup,|D|,|L|,H(L),Q\n";
  for (const SubgroupSpec& s : subgroups) {
    QualityReport rep = quality(spec, s);
    out.ref << s.to_string() << ',' << rep.domain_cardinality << ','
            << rep.label_cardinality << ',' << fmt4(rep.label_entropy) << ','
            << fmt4(rep.quality) << '\n';
  }
  return 0;
}

void emit_diag_set(const DiagnosticSet& set, std::ostream& items,
                   std::ostream& audit) {
  std::string base = std::string(diag_method_name(set.method)) + ":" +
                     std::to_string(set.a) + "x" + std::to_string(set.b);
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    const DiagItem& item = set.items[i];
    items << "{\"task_id\":\"" << base << ":" << i << "\",\"a\":" << item.lhs
          << ",\"b\":" << item.rhs << ",\"prompt\":\"" << item.prompt
          << "\",\"completion\":\"" << item.completion << "\"}\n";
  }
  std::int64_t got = evaluate_reconstruction(set);
  std::int64_t want = set.a * set.b;
  audit << base << ',' << set.items.size() << ',' << want << ',' << got << ','
        << (got == want ? "ok" : "MISMATCH") << '\n';
}

int run_diag(const std::string& method_str, const std::string& pair_arg,
             const std::string& dataset_path, std::int64_t chain_cap,
             const std::string& out_path) {
  DiagMethod method = parse_diag_method(method_str);
  OutStream items(out_path);
  std::ofstream audit_file;
  std::ostringstream audit_stdout;
  std::ostream* audit = &audit_stdout;
  if (out_path != "-" && !out_path.empty()) {
    audit_file.open(out_path + ".audit.csv", std::ios::binary);
    if (!audit_file) throw std::runtime_error("cannot write audit file");
    audit = &audit_file;
  }
  *audit << "set,items,expected,reconstructed,status\n";

  bool failed = false;
  auto handle = [&](std::int64_t a, std::int64_t b) {
    DiagnosticSet set = make_diagnostic_set(method, a, b, chain_cap);
    emit_diag_set(set, items.ref, *audit);
    if (evaluate_reconstruction(set) != a * b) failed = true;
  };

  if (!pair_arg.empty()) {
    std::int64_t a = 0, b = 0;
    if (std::sscanf(pair_arg.c_str(), "%lld,%lld",
                    reinterpret_cast<long long*>(&a),
                    reinterpret_cast<long long*>(&b)) != 2)
      throw std::invalid_argument("bad --pair, expected a,b");
    handle(a, b);
  } else if (!dataset_path.empty()) {
    Dataset d = read_records(dataset_path);
    for (const ExampleRecord& rec : d.records) handle(rec.a, rec.b);
  } else {
    throw std::invalid_argument("need --pair or --dataset");
  }
  if (audit == &audit_stdout) std::cerr << audit_stdout.str();
  return failed ? 1 : 0;
}

int run_score(const std::string& dataset_path,
              const std::string& predictions_path,
              const std::vector<std::string>& runs,
              const std::string& ucurve_path, const std::string& out_path) {
  Dataset d = read_records(dataset_path);

  if (!runs.empty()) {
    std::vector<std::pair<std::string, ScoreReport>> reports;
    for (const std::string& r : runs) {
      auto eq = r.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("bad --run, expected label=file");
      auto preds = join_predictions(d, read_predictions(r.substr(eq + 1)));
      reports.emplace_back(r.substr(0, eq), score(preds, d.spec));
    }
    OutStream out(ucurve_path.empty() ? out_path : ucurve_path);
    ucurve_export(reports, out.ref);
    return 0;
  }

  if (predictions_path.empty())
    throw std::invalid_argument("need --predictions or --run");
  auto preds = join_predictions(d, read_predictions(predictions_path));
  ScoreReport rep = score(preds, d.spec);

  OutStream out(out_path);
  out.ref << "records: " << rep.n_records << '\n'
          << "exact_match: " << fmt4(rep.exact_match) << '\n'
          << "parse_failure_rate: " << fmt4(rep.parse_failure_rate) << '\n';
  out.ref << "position_accuracy:";
  for (double p : rep.position_accuracy) out.ref << ' ' << fmt4(p);
  out.ref << '\n';
  out.ref << "csv,exact_match,parse_failure_rate";
  for (std::size_t i = 1; i <= rep.position_accuracy.size(); ++i)
    out.ref << ",C" << i;
  out.ref << '\n' << "csv," << fmt4(rep.exact_match) << ','
          << fmt4(rep.parse_failure_rate);
  for (double p : rep.position_accuracy) out.ref << ',' << fmt4(p);
  out.ref << '\n';
  return 0;
}

int run_difficulty(const std::string& spec_str, const std::string& h_arg,
                   const std::string& out_path) {
  std::vector<double> h;
  if (!h_arg.empty()) {
    std::stringstream ss(h_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) h.push_back(std::stod(tok));
  } else {
    TaskSpec spec = parse_spec(spec_str);
    h = label_space_stats(spec).per_position_entropy;
  }
  DifficultyEstimate est = difficulty_estimate(h, h.size());
  OutStream out(out_path);
  out.ref << "h:";
  for (double v : h) out.ref << ' ' << fmt4(v);
  out.ref << '\n'
          << "h_hat: " << fmt4(est.geometric_mean) << '\n'
          << "product: " << fmt4(est.product) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic-task dataset generation and label-space analysis"};
  app.require_subcommand(1);

  std::string spec_str, out_path = "-";
  std::uint64_t seed = default_seed();
  std::uint64_t size = 0;
  bool all = false;
  std::string split_arg;

  auto* gen = app.add_subcommand("gen", "Generate a dataset");
  gen->add_option("spec", spec_str, "Task spec, e.g. add:n=2:rule=mod50")
      ->required();
  gen->add_flag("--all", all, "Enumerate the full operand domain");
  gen->add_option("--size", size, "Sample size (without replacement)");
  gen->add_option("--seed", seed, "RNG seed (default $SYMARITH_SEED or 0)");
  gen->add_option("--out", out_path, "Output path, - for stdout")->required();
  gen->add_option("--split", split_arg, "train,val,test ratios, e.g. 0.8,0.1,0.1");

  bool all_rules = false, exact = false;
  std::uint64_t budget = 100'000'000, sample_size = 1'000'000;
  auto* stats = app.add_subcommand("stats", "Label-space statistics");
  stats->add_option("spec", spec_str)->required();
  stats->add_flag("--all-rules", all_rules, "Sweep the full rule table");
  stats->add_option("--budget", budget, "Max pairs for exact enumeration");
  stats->add_flag("--exact", exact, "Fail instead of sampling over budget");
  stats->add_option("--sample-size", sample_size);
  stats->add_option("--seed", seed);
  stats->add_option("--out", out_path);

  std::vector<std::string> subgroup_exprs;
  bool enumerate = false;
  int max_inputs = 2, ic_size = 1;
  auto* quality = app.add_subcommand("quality", "Subgroup quality Q(s)");
  quality->add_option("spec", spec_str)->required();
  quality->add_option("--subgroup", subgroup_exprs,
                      "Subgroup expression, e.g. A{1,2}B{1}C{3}");
  quality->add_flag("--enumerate", enumerate, "Enumerate capped subgroups");
  quality->add_option("--max-inputs", max_inputs, "Cap on |ia|+|ib|");
  quality->add_option("--ic-size", ic_size, "Cap on |ic|");
  quality->add_option("--out", out_path);

  std::string method_str, pair_arg, dataset_path;
  std::int64_t chain_cap = 128;
  auto* diag = app.add_subcommand("diag", "Partial-product diagnostic sets");
  diag->add_option("--method", method_str,
                   "standard|repetitive|lattice|egyptian")
      ->required();
  diag->add_option("--pair", pair_arg, "Single source pair a,b");
  diag->add_option("--dataset", dataset_path, "Dataset file of source pairs");
  diag->add_option("--chain-cap", chain_cap, "Repetitive chain cap");
  diag->add_option("--out", out_path);

  std::string predictions_path, ucurve_path;
  std::vector<std::string> run_args;
  auto* score = app.add_subcommand("score", "Score prediction files");
  score->add_option("--dataset", dataset_path)->required();
  score->add_option("--predictions", predictions_path);
  score->add_option("--run", run_args,
                    "label=predictions file (repeatable, emits a U-curve matrix)");
  score->add_option("--ucurve-out", ucurve_path);
  score->add_option("--out", out_path);

  std::string h_arg;
  auto* difficulty = app.add_subcommand("difficulty", "Difficulty aggregate");
  difficulty->add_option("spec", spec_str);
  difficulty->add_option("--values", h_arg,
                         "Explicit per-prediction difficulties");
  difficulty->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (gen->parsed()) {
      if (all == (gen->count("--size") > 0))
        throw std::invalid_argument("need exactly one of --all / --size");
      return run_gen(spec_str, all, size, seed, out_path, split_arg);
    }
    if (stats->parsed())
      return run_stats(spec_str, all_rules, budget, !exact, sample_size,
                       seed, out_path);
    if (quality->parsed())
      return run_quality(spec_str, subgroup_exprs, enumerate, max_inputs,
                         ic_size, out_path);
    if (diag->parsed())
      return run_diag(method_str, pair_arg, dataset_path, chain_cap, out_path);
    if (score->parsed())
      return run_score(dataset_path, predictions_path, run_args, ucurve_path,
                       out_path);
    if (difficulty->parsed()) {
      if (spec_str.empty() && h_arg.empty())
        throw std::invalid_argument("need a spec or --values");
      return run_difficulty(spec_str, h_arg, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
