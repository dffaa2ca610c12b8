// Copyright 2026 The tabsynth authors
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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tabsynth/tabsynth.hpp"

namespace {

// Exit codes: 0 success/equivalent, 1 not equivalent or verify failure,
// 2 usage/parse/I-O error, 3 unverifiable at desk scale, 4 internal
// invariant violation.
constexpr int kExitOk = 0;
constexpr int kExitNotEqual = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnverifiable = 3;
constexpr int kExitInternal = 4;

std::string sibling_csv_path(const std::string& json_path) {
  const std::string suffix = ".json";
  if (json_path.size() > suffix.size() &&
      json_path.compare(json_path.size() - suffix.size(), suffix.size(),
                        suffix) == 0)
    return json_path.substr(0, json_path.size() - suffix.size()) + ".csv";
  return json_path + ".csv";
}

int cmd_optimize(const std::string& in_path, const std::string& out_path,
                 const std::string& strategy_str, bool verify,
                 const std::string& report_path, std::uint64_t seed) {
  const tabsynth::Strategy strategy = tabsynth::parse_strategy(strategy_str);
  const tabsynth::Circuit input = tabsynth::load_qasm_file(in_path);
  tabsynth::CircuitRecord rec;
  rec.name = std::filesystem::path(in_path).stem().string();
  rec.n = input.n;
  rec.strategy = strategy;
  rec.pre = tabsynth::count_gates(input);
  tabsynth::OptimizeRun run = tabsynth::run_optimize(input, strategy);
  rec.post = tabsynth::count_gates(run.output);
  rec.runtime_ms = run.runtime_ms;
  rec.overhead_pct = tabsynth::overhead_2q_pct(rec.pre, rec.post);

  int status = kExitOk;
  if (verify) {
    const tabsynth::EquivalenceReport eq =
        tabsynth::check_equivalent(input, run.output, seed);
    switch (eq.verdict) {
      case tabsynth::EquivalenceVerdict::Equal:
        rec.verified = "true";
        break;
      case tabsynth::EquivalenceVerdict::NotEqual:
        rec.verified = "false";
        status = kExitNotEqual;
        break;
      case tabsynth::EquivalenceVerdict::Unverifiable:
        rec.verified = "skipped";
        break;
    }
    std::cerr << "verify: " << rec.verified << " (" << eq.method << ")\n";
  }

  tabsynth::write_text_file(out_path, tabsynth::write_qasm(run.output));
  if (!report_path.empty()) {
    tabsynth::Report rep;
    rep.records.push_back(rec);
    tabsynth::write_text_file(report_path,
                              tabsynth::report_to_json(rep).dump(2) + "\n");
  }
  std::cout << rec.name << ": t " << rec.pre.t_count << " -> "
            << rec.post.t_count << ", 2q " << rec.pre.twoq_count << " -> "
            << rec.post.twoq_count << " ("
            << (rec.overhead_pct
                    ? tabsynth::format_one_decimal(*rec.overhead_pct) + "%"
                    : std::string("n/a"))
            << " 2q overhead, " << tabsynth::strategy_name(strategy) << ")\n";
  return status;
}

int cmd_compare(const std::string& corpus_dir, const std::string& report_path,
                std::size_t jobs, bool verify) {
  std::vector<std::pair<std::string, tabsynth::Circuit>> corpus;
  std::vector<tabsynth::CircuitRecord> failures;
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".qasm")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  for (const std::string& f : files) {
    const std::string name = std::filesystem::path(f).stem().string();
    try {
      corpus.emplace_back(name, tabsynth::load_qasm_file(f));
    } catch (const std::exception& ex) {
      tabsynth::CircuitRecord r;
      r.name = name;
      r.error = ex.what();
      failures.push_back(std::move(r));
    }
  }

  tabsynth::Report rep = tabsynth::compare_corpus(corpus, verify, jobs);
  for (tabsynth::CircuitRecord& r : failures)
    rep.records.push_back(std::move(r));

  tabsynth::write_text_file(report_path,
                            tabsynth::report_to_json(rep).dump(2) + "\n");
  tabsynth::write_text_file(sibling_csv_path(report_path),
                            tabsynth::report_to_csv(rep));

  std::size_t errors = 0;
  for (const tabsynth::CircuitRecord& r : rep.records)
    if (!r.error.empty()) ++errors;
  std::cout << "compared " << corpus.size() << " circuit(s), " << errors
            << " failure(s); report: " << report_path << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& in_path) {
  const tabsynth::Circuit c = tabsynth::load_qasm_file(in_path);
  const tabsynth::Metrics m = tabsynth::count_gates(c);
  std::cout << "n: " << c.n << "\n"
            << "t_count: " << m.t_count << "\n"
            << "twoq_count: " << m.twoq_count << "\n"
            << "h_count: " << m.h_count << "\n"
            << "total: " << m.total << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& a_path, const std::string& b_path,
               std::uint64_t seed) {
  const tabsynth::Circuit a = tabsynth::load_qasm_file(a_path);
  const tabsynth::Circuit b = tabsynth::load_qasm_file(b_path);
  if (a.n != b.n) {
    std::cout << "not equivalent (qubit counts differ)\n";
    return kExitNotEqual;
  }
  const tabsynth::EquivalenceReport eq = tabsynth::check_equivalent(a, b, seed);
  switch (eq.verdict) {
    case tabsynth::EquivalenceVerdict::Equal:
      std::cout << "equivalent (" << eq.method << ")\n";
      return kExitOk;
    case tabsynth::EquivalenceVerdict::NotEqual:
      std::cout << "not equivalent (" << eq.method << ")\n";
      return kExitNotEqual;
    case tabsynth::EquivalenceVerdict::Unverifiable:
      break;
  }
  std::cout << "unverifiable at desk scale (> " << tabsynth::kSampledMaxQubits
            << " qubits with non-Clifford gates)\n";
  return kExitUnverifiable;
}

int cmd_gen(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto corpus = tabsynth::synthetic_corpus();
  for (const tabsynth::NamedCircuit& nc : corpus) {
    const std::string path =
        (std::filesystem::path(out_dir) / (nc.name + ".qasm")).string();
    tabsynth::write_text_file(path, tabsynth::write_qasm(nc.circuit));
  }
  std::cout << "wrote " << corpus.size() << " circuits to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford+T T-count optimizer with tableau resynthesis"};
  app.require_subcommand(1);

  std::string in_path, out_path, report_path, strategy = "lazy";
  std::string corpus_dir, a_path, b_path, gen_dir;
  bool verify = false;
  bool compare_verify = false;
  std::size_t jobs = 1;
  std::uint64_t seed = 0x7ab5u;

  CLI::App* opt = app.add_subcommand("optimize", "Optimize one QASM file");
  opt->add_option("--in", in_path, "input QASM file")->required();
  opt->add_option("--out", out_path, "output QASM file")->required();
  opt->add_option("--strategy", strategy, "eager | lazy (default lazy)")
      ->check(CLI::IsMember({"eager", "lazy"}));
  opt->add_flag("--verify", verify, "check equivalence of input and output");
  opt->add_option("--report", report_path, "write a JSON report");
  opt->add_option("--seed", seed, "seed for sampled verification");

  CLI::App* cmp = app.add_subcommand("compare",
                                     "Run both strategies over a corpus dir");
  cmp->add_option("--corpus", corpus_dir, "directory of .qasm files")
      ->required();
  cmp->add_option("--report", report_path, "JSON report path (CSV written beside it)")
      ->required();
  cmp->add_option("--jobs", jobs, "parallel workers (default 1)");
  cmp->add_flag("--verify", compare_verify, "verify every output");

  CLI::App* st = app.add_subcommand("stats", "Print gate metrics of a file");
  st->add_option("--in", in_path, "input QASM file")->required();

  CLI::App* ver = app.add_subcommand("verify", "Check two files for equivalence");
  ver->add_option("--a", a_path, "first QASM file")->required();
  ver->add_option("--b", b_path, "second QASM file")->required();
  ver->add_option("--seed", seed, "seed for sampled verification");

  CLI::App* gen = app.add_subcommand("gen", "Write the synthetic corpus");
  gen->add_option("--out", gen_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (opt->parsed())
      return cmd_optimize(in_path, out_path, strategy, verify, report_path,
                          seed);
    if (cmp->parsed())
      return cmd_compare(corpus_dir, report_path, jobs, compare_verify);
    if (st->parsed()) return cmd_stats(in_path);
    if (ver->parsed()) return cmd_verify(a_path, b_path, seed);
    if (gen->parsed()) return cmd_gen(gen_dir);
  } catch (const tabsynth::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
