// Copyright 2026 The treesub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "treesub/descent.hpp"
#include "treesub/error.hpp"
#include "treesub/generate.hpp"
#include "treesub/instance_io.hpp"
#include "treesub/property_checker.hpp"
#include "treesub/weak_encoder.hpp"

namespace treesub::cli {

using nlohmann::ordered_json;

namespace {

ordered_json Rational(Value num, Value den) {
  ordered_json r;
  r["num"] = num;
  r["den"] = den;
  return r;
}

Labeling ParseLabeling(const std::string& text) {
  Labeling x;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      x.push_back(static_cast<Node>(std::stoi(tok, &used)));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad label '" + tok + "' in --start");
    }
  }
  return x;
}

void Emit(const ordered_json& report, const std::string& out_path,
          std::ostream& out) {
  const std::string text = CanonicalJson(report);
  if (out_path.empty()) {
    out << text;
  } else {
    WriteFile(out_path, text);
  }
}

// --ops: a builtin name or a JSON file {"ops": [{"first": [[..]], "second":
// [[..]]}, ...]} with one entry per tree, rows indexed by the first argument.
std::vector<OpTable> LoadOps(const std::string& spec, const ProductDomain& domain) {
  std::vector<OpTable> ops;
  if (spec == "meet-join" || spec == "wedge-vee" || spec == "projections") {
    for (const RootedTree& t : domain.trees()) {
      ops.push_back(spec == "meet-join"   ? MeetJoinTable(t)
                    : spec == "wedge-vee" ? WedgeVeeTable(t)
                                          : ProjectionTable(t));
    }
    return ops;
  }
  std::ifstream in(spec);
  if (!in) throw InputError(spec + ": cannot open operation tables");
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(spec + ": " + e.what());
  }
  try {
    for (const auto& entry : root.at("ops")) {
      OpTable table;
      const auto& first = entry.at("first");
      const auto& second = entry.at("second");
      table.size = static_cast<int>(first.size());
      if (second.size() != first.size()) throw InputError(spec + ": table shapes differ");
      for (std::size_t a = 0; a < first.size(); ++a) {
        if (first[a].size() != first.size() || second[a].size() != first.size()) {
          throw InputError(spec + ": operation tables must be square");
        }
        for (std::size_t b = 0; b < first.size(); ++b) {
          table.first.push_back(first[a][b].get<Node>());
          table.second.push_back(second[a][b].get<Node>());
        }
      }
      ops.push_back(std::move(table));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(spec + ": malformed operation tables: " + e.what());
  }
  return ops;
}

ordered_json WitnessJson(const ViolationWitness& w, Value den) {
  ordered_json j;
  j["x"] = w.x;
  j["y"] = w.y;
  if (w.d) j["d"] = *w.d;
  j["first"] = w.first;
  j["second"] = w.second;
  j["lhs"] = Rational(w.lhs, den);
  j["rhs"] = Rational(w.rhs, den);
  return j;
}

struct CheckArgs {
  std::string instance;
  std::string property = "strong";
  std::string mode = "exhaustive";
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  std::string ops = "meet-join";
};

int RunCheck(const CheckArgs& args, std::ostream& out) {
  const InstanceDocument doc = ReadInstanceFile(args.instance);
  const Property property = ParseProperty(args.property);
  CheckOptions options;
  if (args.mode == "sampled") {
    options = CheckOptions::Sampled(args.samples, args.seed);
  } else if (args.mode != "exhaustive") {
    throw InputError("unknown mode '" + args.mode + "'");
  }
  const CheckReport report =
      property == Property::kMultimorphism
          ? CheckMultimorphism(doc.function(), doc.domain(),
                               LoadOps(args.ops, doc.domain()), options)
          : Check(property, doc.function(), doc.domain(), options);
  ordered_json j;
  j["command"] = "check";
  j["property"] = PropertyName(property);
  if (property == Property::kMultimorphism) j["ops"] = args.ops;
  j["mode"] = report.exhaustive ? "exhaustive" : "sampled";
  if (!report.exhaustive) {
    j["samples"] = args.samples;
    j["seed"] = args.seed;
  }
  j["holds"] = report.holds();
  j["pairs_checked"] = report.pairs_checked;
  j["note"] = report.note;
  if (report.witness) {
    j["witness"] = WitnessJson(*report.witness, doc.function().denominator());
  }
  Emit(j, "", out);
  return report.holds() ? kOk : kViolation;
}

struct MinimizeArgs {
  std::string instance;
  std::string solver = "descent";
  std::string engine = "brute";
  std::string start;
  bool trace = false;
  bool diagnostics = false;
};

ordered_json TraceJson(const DescentTrace& trace, Value den) {
  ordered_json j;
  j["values"] = ordered_json::array();
  for (Value v : trace.values) j["values"].push_back(Rational(v, den));
  j["steps"] = ordered_json::array();
  for (const DescentStep& s : trace.steps) {
    ordered_json step;
    step["stage"] = s.stage;
    step["x"] = s.x;
    step["value"] = Rational(s.value, den);
    if (s.rho_minus) step["rho_minus"] = *s.rho_minus;
    if (s.rho_plus) step["rho_plus"] = *s.rho_plus;
    if (s.inward_optimal) step["inward_optimal"] = *s.inward_optimal;
    j["steps"].push_back(std::move(step));
  }
  if (trace.start_rho_minus) j["start_rho_minus"] = *trace.start_rho_minus;
  if (trace.start_rho_plus) j["start_rho_plus"] = *trace.start_rho_plus;
  return j;
}

int RunMinimize(const MinimizeArgs& args, std::ostream& out) {
  const InstanceDocument doc = ReadInstanceFile(args.instance);
  const Value den = doc.function().denominator();
  ordered_json j;
  j["command"] = "minimize";
  j["solver"] = args.solver;
  if (args.engine != "brute" && args.engine != "minnorm") {
    throw InputError("unknown engine '" + args.engine + "'");
  }
  if (args.solver == "brute") {
    const BruteResult r = BruteForceMinimize(doc.function(), doc.domain());
    j["minimizer"] = r.minimizer;
    j["value"] = Rational(r.value, den);
  } else if (args.solver == "weak") {
    if (args.engine != "brute") {
      throw InputError("the weak solver only supports --engine brute");
    }
    const WeakResult r = MinimizeWeak(doc.function(), doc.domain());
    j["minimizer"] = r.minimizer;
    j["value"] = Rational(r.value, den);
  } else if (args.solver == "descent") {
    DescentOptions options;
    options.engine = args.engine == "minnorm" ? Engine::kMinNorm : Engine::kBrute;
    options.diagnostics = args.diagnostics;
    if (!args.start.empty()) options.start = ParseLabeling(args.start);
    const DescentResult r = Minimize(doc.function(), doc.domain(), options);
    j["engine"] = args.engine;
    j["minimizer"] = r.minimizer;
    j["value"] = Rational(r.value, den);
    j["s1_steps"] = r.trace.s1_steps;
    j["s2_steps"] = r.trace.s2_steps;
    j["K"] = r.trace.K;
    ordered_json cert;
    cert["inward_optimal"] = r.trace.inward_optimal;
    cert["outward_optimal"] = r.trace.outward_optimal;
    j["certificate"] = cert;
    if (args.trace || args.diagnostics) j["trace"] = TraceJson(r.trace, den);
  } else {
    throw InputError("unknown solver '" + args.solver + "'");
  }
  Emit(j, "", out);
  return kOk;
}

struct GenerateArgs {
  std::string kind;
  int n = 2;
  std::string tree_spec = "chain:5";
  std::uint64_t seed = 0;
  std::string out;
  std::string name;
  Value max_value = 20;
  std::uint64_t attempts = 10'000;
  int pair_percent = 50;
  bool whole_table = false;
  std::string start;
};

int RunGenerate(const GenerateArgs& args, std::ostream& out) {
  const GeneratorKind kind = ParseGeneratorKind(args.kind);
  GenerateParams params;
  Rng tree_rng(args.seed ^ 0x7472656573756221ULL);
  if (kind != GeneratorKind::kFixtureCatalog) {
    if (args.n < 1) throw InputError("--n must be positive");
    params.trees = ParseTreeSpec(args.tree_spec, args.n, tree_rng);
  }
  params.max_value = args.max_value;
  params.attempt_budget = args.attempts;
  params.pair_percent = args.pair_percent;
  params.whole_table = args.whole_table;
  params.verify_all = true;
  params.fixture_name = args.name;
  // GenerationFailure carries the acceptance rate in its message.
  const InstanceFixture fixture = Generate(kind, params, args.seed);
  InstanceDocument doc = ToDocument(fixture, args.kind);
  if (!args.start.empty()) {
    const Labeling x = ParseLabeling(args.start);
    doc.domain().Validate(x);
    doc.metadata["start"] = x;
  }
  const std::string text = SerializeInstance(doc);
  if (args.out.empty()) {
    out << text;
  } else {
    WriteFile(args.out, text);
  }
  return kOk;
}

struct BenchArgs {
  std::string suite;
  std::string out;
  std::string format = "json";
  bool diagnostics = false;
  bool timing = false;
  int jobs = 1;
};

struct BenchRow {
  ordered_json json;
  bool violation = false;
};

BenchRow BenchOne(const std::filesystem::path& path, const BenchArgs& args) {
  BenchRow row;
  row.json["instance"] = path.filename().string();
  try {
    const InstanceDocument doc = ReadInstanceFile(path.string());
    row.json["n"] = doc.domain().n();
    row.json["K"] = doc.domain().max_label_count();
    if (!doc.domain().all_binary()) {
      row.json["status"] = "skipped: non-binary tree";
      return row;
    }
    DescentOptions options;
    options.diagnostics = args.diagnostics;
    if (doc.metadata.is_object() && doc.metadata.contains("start")) {
      options.start = doc.metadata["start"].get<Labeling>();
    }
    const auto t0 = std::chrono::steady_clock::now();
    const DescentResult r = Minimize(doc.function(), doc.domain(), options);
    const auto t1 = std::chrono::steady_clock::now();
    const int K = r.trace.K;
    const bool bound_ok = r.trace.s1_steps <= K && r.trace.s2_steps <= K;
    row.violation = !bound_ok;
    row.json["s1_steps"] = r.trace.s1_steps;
    row.json["s2_steps"] = r.trace.s2_steps;
    row.json["value"] = Rational(r.value, doc.function().denominator());
    row.json["certified"] = r.trace.certified();
    row.json["bound_ok"] = bound_ok;
    row.json["status"] = "ok";
    if (args.diagnostics) {
      ordered_json rho_minus = ordered_json::array();
      rho_minus.push_back(*r.trace.start_rho_minus);
      for (const DescentStep& s : r.trace.steps) {
        if (s.stage == 1) rho_minus.push_back(*s.rho_minus);
      }
      row.json["rho_minus_s1"] = rho_minus;
      ordered_json rho_plus = ordered_json::array();
      rho_plus.push_back(*r.trace.start_rho_plus);
      for (const DescentStep& s : r.trace.steps) rho_plus.push_back(*s.rho_plus);
      row.json["rho_plus"] = rho_plus;
    }
    if (args.timing) {
      row.json["wall_ms"] =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
  } catch (const IterationBoundViolation& e) {
    row.violation = true;
    row.json["bound_ok"] = false;
    row.json["status"] = std::string("bound violation: ") + e.what();
  } catch (const Error& e) {
    row.json["status"] = std::string("error: ") + e.what();
  }
  return row;
}

int RunBench(const BenchArgs& args, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(args.suite)) {
    throw InputError(args.suite + ": suite directory not found");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.suite)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows(files.size());
  const int jobs = std::max(1, std::min<int>(args.jobs, files.size()));
  std::vector<std::thread> workers;
  std::size_t next = 0;
  std::mutex mu;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        std::size_t idx;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= files.size()) return;
          idx = next++;
        }
        rows[idx] = BenchOne(files[idx], args);
      }
    });
  }
  for (std::thread& t : workers) t.join();

  bool violation = false;
  for (const BenchRow& r : rows) violation |= r.violation;
  if (args.format == "tsv") {
    std::ostringstream table;
    table << "instance\tn\tK\ts1_steps\ts2_steps\tbound_ok\tstatus";
    if (args.timing) table << "\twall_ms";
    table << "\n";
    for (const BenchRow& r : rows) {
      const ordered_json& j = r.json;
      auto field = [&](const char* key) {
        return j.contains(key) ? j[key].dump() : std::string("-");
      };
      table << j["instance"].get<std::string>() << "\t" << field("n") << "\t"
            << field("K") << "\t" << field("s1_steps") << "\t"
            << field("s2_steps") << "\t" << field("bound_ok") << "\t"
            << j["status"].get<std::string>();
      if (args.timing) table << "\t" << field("wall_ms");
      table << "\n";
    }
    if (args.out.empty()) {
      out << table.str();
    } else {
      WriteFile(args.out, table.str());
    }
  } else if (args.format == "json") {
    ordered_json report;
    report["command"] = "bench";
    report["rows"] = ordered_json::array();
    for (BenchRow& r : rows) report["rows"].push_back(std::move(r.json));
    report["all_bounds_ok"] = !violation;
    Emit(report, args.out, out);
  } else {
    throw InputError("unknown format '" + args.format + "'");
  }
  return violation ? kViolation : kOk;
}

int RunEncodeWeak(const std::string& instance, const std::string& tree_spec,
                  std::ostream& out) {
  std::vector<RootedTree> trees;
  if (!instance.empty()) {
    trees = ReadInstanceFile(instance).domain().trees();
  } else {
    Rng rng(0);
    trees = ParseTreeSpec(tree_spec, 0, rng);
  }
  ordered_json report;
  report["command"] = "encode-weak";
  report["trees"] = ordered_json::array();
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto r = Recognize(trees[i]);
    if (auto* bad = std::get_if<NotFork>(&r)) {
      throw UnsupportedStructure("tree " + std::to_string(i) +
                                 " is not a fork tree: " + bad->reason);
    }
    const ForkTree& fork = std::get<ForkTree>(r);
    ordered_json t;
    t["tree"] = i;
    t["K"] = fork.K;
    t["fork"] = fork.has_fork();
    t["psi"] = ordered_json::array();
    for (Node v = 0; v < trees[i].node_count(); ++v) {
      ordered_json row;
      row["label"] = v;
      row["code"] = Psi(fork, v);
      t["psi"].push_back(std::move(row));
    }
    report["trees"].push_back(std::move(t));
  }
  Emit(report, "", out);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimize and verify tree-submodular functions", "treesub"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Verify a submodularity property");
  check_cmd->add_option("instance", check.instance, "Instance file")->required();
  check_cmd->add_option("--property", check.property,
                        "strong | weak | translation | multimorphism");
  check_cmd->add_option("--mode", check.mode, "exhaustive | sampled");
  check_cmd->add_option("--samples", check.samples, "Pairs drawn in sampled mode");
  check_cmd->add_option("--seed", check.seed, "Seed for sampled mode");
  check_cmd->add_option("--ops", check.ops,
                        "meet-join | wedge-vee | projections | tables.json");

  MinimizeArgs minimize;
  auto* min_cmd = app.add_subcommand("minimize", "Minimize an instance");
  min_cmd->add_option("instance", minimize.instance, "Instance file")->required();
  min_cmd->add_option("--solver", minimize.solver, "brute | descent | weak");
  min_cmd->add_option("--engine", minimize.engine, "brute | minnorm (experimental)");
  min_cmd->add_option("--start", minimize.start, "Start labeling, e.g. 2,0,1");
  min_cmd->add_flag("--trace", minimize.trace, "Include the step trace");
  min_cmd->add_flag("--diagnostics", minimize.diagnostics,
                    "Track rho-/rho+ along the run (exponential)");
  min_cmd->add_flag("--weak", [&](std::int64_t) { minimize.solver = "weak"; },
                    "Shorthand for --solver weak");

  GenerateArgs generate;
  auto* gen_cmd = app.add_subcommand("generate", "Generate a verified instance");
  gen_cmd->add_option("--kind", generate.kind,
                      "random-verified-strong | random-verified-weak | "
                      "chain-separable | fixture-catalog")
      ->required();
  gen_cmd->add_option("--n", generate.n, "Number of variables");
  gen_cmd->add_option("--tree-spec", generate.tree_spec,
                      "chain:N | bisub | fork:K | binary:H | t7 | "
                      "random-binary:N | parents:p0,p1,... (';'-separated)");
  gen_cmd->add_option("--seed", generate.seed, "64-bit seed");
  gen_cmd->add_option("--out", generate.out, "Output file (default stdout)");
  gen_cmd->add_option("--name", generate.name, "Catalog fixture name");
  gen_cmd->add_option("--max-value", generate.max_value, "Table entries in [0, M]");
  gen_cmd->add_option("--attempts", generate.attempts, "Rejection attempt budget");
  gen_cmd->add_option("--pair-percent", generate.pair_percent,
                      "Chance of a coupling term per variable pair");
  gen_cmd->add_flag("--whole-table", generate.whole_table,
                    "Sample whole dense tables instead of terms");
  gen_cmd->add_option("--start", generate.start,
                      "Record a descent start labeling in the metadata");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run descent over a corpus");
  bench_cmd->add_option("--suite", bench.suite, "Directory of instance files")
      ->required();
  bench_cmd->add_option("--out", bench.out, "Report file (default stdout)");
  bench_cmd->add_option("--format", bench.format, "json | tsv");
  bench_cmd->add_flag("--diagnostics", bench.diagnostics, "Record rho trajectories");
  bench_cmd->add_flag("--timing", bench.timing, "Include wall-clock times");
  bench_cmd->add_option("--jobs", bench.jobs, "Instances run concurrently");

  std::string encode_instance;
  std::string encode_spec;
  auto* enc_cmd = app.add_subcommand("encode-weak", "Dump fork-tree encodings");
  enc_cmd->add_option("instance", encode_instance, "Instance file");
  enc_cmd->add_option("--tree-spec", encode_spec, "Trees instead of an instance");

  std::string canon_instance;
  std::string canon_out;
  auto* canon_cmd = app.add_subcommand("canonicalize", "Rewrite an instance canonically");
  canon_cmd->add_option("instance", canon_instance, "Instance file")->required();
  canon_cmd->add_option("--out", canon_out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "treesub: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check_cmd->parsed()) return RunCheck(check, out);
    if (min_cmd->parsed()) return RunMinimize(minimize, out);
    if (gen_cmd->parsed()) return RunGenerate(generate, out);
    if (bench_cmd->parsed()) return RunBench(bench, out);
    if (enc_cmd->parsed()) {
      if (encode_instance.empty() == encode_spec.empty()) {
        throw InputError("encode-weak needs exactly one of an instance or --tree-spec");
      }
      return RunEncodeWeak(encode_instance, encode_spec, out);
    }
    if (canon_cmd->parsed()) {
      const std::string text = SerializeInstance(ReadInstanceFile(canon_instance));
      if (canon_out.empty()) {
        out << text;
      } else {
        WriteFile(canon_out, text);
      }
      return kOk;
    }
  } catch (const InputError& e) {
    err << "treesub: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "treesub: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedStructure& e) {
    err << "treesub: unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "treesub: failure: " << e.what() << "\n";
    return kSolverFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "treesub: input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace treesub::cli
