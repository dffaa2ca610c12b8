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

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tabsynth/circuit.hpp"
#include "tabsynth/pipeline.hpp"
#include "tabsynth/qasm.hpp"
#include "tabsynth/resynth.hpp"
#include "tabsynth/verify.hpp"

namespace tabsynth {

enum class Strategy { Eager, Lazy };

inline const char* strategy_name(Strategy s) {
  return s == Strategy::Eager ? "eager" : "lazy";
}

inline Strategy parse_strategy(const std::string& s) {
  if (s == "eager") return Strategy::Eager;
  if (s == "lazy") return Strategy::Lazy;
  throw std::invalid_argument("unknown strategy: " + s);
}

struct OptimizeRun {
  Circuit output;
  double runtime_ms = 0.0;
};

/// Full optimization pass, timed around partition + fold + extraction
/// only (parsing and verification are excluded from runtime_ms).
inline OptimizeRun run_optimize(const Circuit& input, Strategy strategy) {
  const auto t0 = std::chrono::steady_clock::now();
  Pipeline p = optimize_tcount(partition(input));
  Circuit out = strategy == Strategy::Eager ? eager_resynthesize(p)
                                            : lazy_resynthesize(p);
  const auto t1 = std::chrono::steady_clock::now();
  return {std::move(out),
          std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

/// 2Q-gate overhead percentage; empty when the input has no 2Q gates.
inline std::optional<double> overhead_2q_pct(const Metrics& pre,
                                             const Metrics& post) {
  if (pre.twoq_count == 0) return std::nullopt;
  return 100.0 *
         (static_cast<double>(post.twoq_count) -
          static_cast<double>(pre.twoq_count)) /
         static_cast<double>(pre.twoq_count);
}

/// Render with one decimal place, the form used in reports: 409 -> 610
/// gives "49.1".
inline std::string format_one_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

struct CircuitRecord {
  std::string name;
  std::size_t n = 0;
  Metrics pre;
  Metrics post;
  Strategy strategy = Strategy::Eager;
  std::optional<double> overhead_pct;
  double runtime_ms = 0.0;
  std::string verified = "skipped";  // "true" | "false" | "skipped"
  std::string error;                 // nonempty: record is a failure
};

inline CircuitRecord make_record(const std::string& name, const Circuit& input,
                                 Strategy strategy, bool verify) {
  CircuitRecord r;
  r.name = name;
  r.n = input.n;
  r.strategy = strategy;
  r.pre = count_gates(input);
  OptimizeRun run = run_optimize(input, strategy);
  r.post = count_gates(run.output);
  r.runtime_ms = run.runtime_ms;
  r.overhead_pct = overhead_2q_pct(r.pre, r.post);
  if (verify) {
    const EquivalenceReport eq = check_equivalent(input, run.output);
    r.verified = eq.verdict == EquivalenceVerdict::Unverifiable
                     ? "skipped"
                     : (eq.verdict == EquivalenceVerdict::Equal ? "true"
                                                                : "false");
  }
  return r;
}

struct Report {
  std::vector<CircuitRecord> records;
};

/// Mean overhead over the successful records of one strategy.
inline std::optional<double> average_overhead(const Report& rep, Strategy s) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const CircuitRecord& r : rep.records) {
    if (!r.error.empty() || r.strategy != s || !r.overhead_pct) continue;
    sum += *r.overhead_pct;
    ++count;
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

/// Geometric mean of per-circuit lazy/eager runtime ratios, over
/// circuits where both strategies succeeded.
inline std::optional<double> geomean_runtime_ratio(const Report& rep) {
  double log_sum = 0.0;
  std::size_t count = 0;
  for (const CircuitRecord& la : rep.records) {
    if (la.strategy != Strategy::Lazy || !la.error.empty()) continue;
    for (const CircuitRecord& ea : rep.records) {
      if (ea.strategy != Strategy::Eager || ea.name != la.name ||
          !ea.error.empty())
        continue;
      const double num = std::max(la.runtime_ms, 1e-6);
      const double den = std::max(ea.runtime_ms, 1e-6);
      log_sum += std::log(num / den);
      ++count;
      break;
    }
  }
  if (count == 0) return std::nullopt;
  return std::exp(log_sum / static_cast<double>(count));
}

inline nlohmann::json report_to_json(const Report& rep) {
  nlohmann::json j;
  j["schema"] = 1;
  j["records"] = nlohmann::json::array();
  for (const CircuitRecord& r : rep.records) {
    nlohmann::json e;
    e["name"] = r.name;
    if (r.error.empty()) {
      e["n"] = r.n;
      e["pre"] = {{"t", r.pre.t_count},
                  {"twoq", r.pre.twoq_count},
                  {"h", r.pre.h_count},
                  {"total", r.pre.total}};
      e["post"] = {{"t", r.post.t_count},
                   {"twoq", r.post.twoq_count},
                   {"h", r.post.h_count},
                   {"total", r.post.total}};
      e["strategy"] = strategy_name(r.strategy);
      if (r.overhead_pct)
        e["overhead_2q_pct"] = *r.overhead_pct;
      else
        e["overhead_2q_pct"] = nullptr;
      e["runtime_ms"] = r.runtime_ms;
      e["verified"] = r.verified;
    } else {
      e["error"] = r.error;
    }
    j["records"].push_back(std::move(e));
  }
  nlohmann::json agg;
  const auto avg_e = average_overhead(rep, Strategy::Eager);
  const auto avg_l = average_overhead(rep, Strategy::Lazy);
  agg["average_overhead_pct"]["eager"] =
      avg_e ? nlohmann::json(*avg_e) : nlohmann::json(nullptr);
  agg["average_overhead_pct"]["lazy"] =
      avg_l ? nlohmann::json(*avg_l) : nlohmann::json(nullptr);
  const auto ratio = geomean_runtime_ratio(rep);
  agg["geomean_runtime_ratio_lazy_vs_eager"] =
      ratio ? nlohmann::json(*ratio) : nlohmann::json(nullptr);
  j["aggregate"] = std::move(agg);
  return j;
}

inline constexpr const char* kCsvHeader =
    "name,n,pre_t,pre_2q,post_t,post_2q,overhead_pct,runtime_ms,strategy,"
    "verified";

/// Per-circuit rows plus one trailing AVERAGE row per strategy, Table
/// II style (only overhead_pct and strategy populated).
inline std::string report_to_csv(const Report& rep) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const CircuitRecord& r : rep.records) {
    if (!r.error.empty()) continue;
    out << r.name << ',' << r.n << ',' << r.pre.t_count << ','
        << r.pre.twoq_count << ',' << r.post.t_count << ',' << r.post.twoq_count
        << ',' << (r.overhead_pct ? format_one_decimal(*r.overhead_pct) : "")
        << ',' << format_one_decimal(r.runtime_ms) << ','
        << strategy_name(r.strategy) << ',' << r.verified << "\n";
  }
  for (Strategy s : {Strategy::Eager, Strategy::Lazy}) {
    const auto avg = average_overhead(rep, s);
    if (!avg) continue;
    out << "AVERAGE,,,,,," << format_one_decimal(*avg) << ",,"
        << strategy_name(s) << ",\n";
  }
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

inline Circuit load_qasm_file(const std::string& path) {
  return parse_qasm(read_text_file(path));
}

/**
 * Run both strategies over a corpus of (name, circuit) pairs. Files
 * are processed in parallel up to `jobs` workers; record order stays
 * the corpus order regardless of scheduling. Per-circuit failures are
 * recorded as error records and do not stop the run.
 */
inline Report compare_corpus(const std::vector<std::pair<std::string, Circuit>>& corpus,
                             bool verify, std::size_t jobs) {
  Report rep;
  rep.records.resize(corpus.size() * 2);
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      for (Strategy s : {Strategy::Eager, Strategy::Lazy}) {
        const std::size_t slot = 2 * i + (s == Strategy::Lazy ? 1 : 0);
        try {
          rep.records[slot] =
              make_record(corpus[i].first, corpus[i].second, s, verify);
        } catch (const std::exception& ex) {
          CircuitRecord r;
          r.name = corpus[i].first;
          r.strategy = s;
          r.error = ex.what();
          rep.records[slot] = std::move(r);
        }
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return rep;
}

}  // namespace tabsynth
