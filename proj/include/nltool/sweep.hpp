// Copyright 2026 The nltool Authors.
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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nltool/boolean_function.hpp"
#include "nltool/f2_solver.hpp"

namespace nltool {

enum class Method { kFwt, kNnf, kF2, kQLoop };

std::string_view method_name(Method m);
// Accepts "fwt", "nnf", "f2", "q-loop"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);
std::vector<Method> parse_method_list(std::string_view csv);

struct RunCounters {
  std::uint64_t additions = 0;
  std::uint64_t generators_checked = 0;
  std::uint64_t generators_sufficient = 0;
};

struct RunReport {
  Method method = Method::kFwt;
  int n = 0;
  std::int64_t nonlinearity = 0;
  std::int64_t micros = 0;
  RunCounters counters;
  // one entry per system J_t solved, f2 method only
  std::vector<SimonettiTrace> systems;
};

RunReport run_method(const BooleanFunction& f, Method method);

// {n, tt, nl, method, counters, micros}; keys are emitted sorted.
nlohmann::json report_to_json(const BooleanFunction& f, const RunReport& report);

// Thread cap from NLTOOL_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

struct SweepOptions {
  int n = 3;
  bool exhaustive = true;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::vector<Method> methods{Method::kFwt, Method::kNnf};
  unsigned threads = 0;  // 0 = default_thread_count()
  bool keep_reports = false;
};

// Per system J_t aggregate over the functions of one nonlinearity class.
struct SystemStats {
  std::uint64_t runs = 0;
  std::uint64_t total_checked = 0;
  std::uint64_t total_sufficient = 0;
  std::uint64_t min_sufficient = 0;
  std::uint64_t max_sufficient = 0;
  std::uint64_t min_checked = 0;
  std::uint64_t max_checked = 0;

  double mean_checked() const { return runs ? static_cast<double>(total_checked) / static_cast<double>(runs) : 0.0; }
  double mean_sufficient() const {
    return runs ? static_cast<double>(total_sufficient) / static_cast<double>(runs) : 0.0;
  }
};

struct ClassStats {
  std::uint64_t count = 0;
  std::uint64_t total_additions = 0;
  std::map<int, SystemStats> systems;  // keyed by t
};

struct SweepItem {
  BooleanFunction f;
  std::vector<RunReport> reports;
};

struct SweepResult {
  std::uint64_t functions = 0;
  std::uint64_t mismatches = 0;
  // S <= C violated by some run; stays false by construction
  bool sufficient_exceeds_checked = false;
  std::map<std::int64_t, ClassStats> classes;
  std::optional<std::string> first_mismatch;
  std::vector<SweepItem> items;  // filled when keep_reports is set
};

// The index-th function of the sweep: its truth table for exhaustive sweeps,
// otherwise a random function from a per-index seed split.
BooleanFunction sweep_function(const SweepOptions& options, std::uint64_t index);

SweepResult sweep(const SweepOptions& options);

std::string format_sweep_table(const SweepResult& result, int n);

struct BenchRow {
  Method method = Method::kFwt;
  bool skipped = false;
  std::uint64_t reps = 0;
  double mean_micros = 0;
  double min_micros = 0;
  double max_micros = 0;
};

// f2 is skipped above this arity: J_t has C(2^n, t) generators.
inline constexpr int kF2BenchMaxVars = 4;

std::vector<BenchRow> bench(int n, std::uint64_t reps, const std::vector<Method>& methods, std::uint64_t seed);

}  // namespace nltool
