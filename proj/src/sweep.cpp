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


#include "nltool/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nltool/io.hpp"
#include "nltool/nl_poly.hpp"
#include "nltool/transforms.hpp"

namespace nltool {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kFwt: return "fwt";
    case Method::kNnf: return "nnf";
    case Method::kF2: return "f2";
    case Method::kQLoop: return "q-loop";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "fwt") return Method::kFwt;
  if (name == "nnf") return Method::kNnf;
  if (name == "f2") return Method::kF2;
  if (name == "q-loop" || name == "qloop") return Method::kQLoop;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::vector<Method> parse_method_list(std::string_view csv) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto token = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!token.empty()) {
      const Method m = parse_method(token);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty method list");
  return out;
}

RunReport run_method(const BooleanFunction& f, Method method) {
  RunReport report;
  report.method = method;
  report.n = f.num_vars();
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case Method::kFwt:
      report.nonlinearity = nonlinearity_fwt(f);
      break;
    case Method::kNnf:
      if (is_affine(f)) {
        report.nonlinearity = 0;
      } else {
        BuildCounters build;
        report.nonlinearity = nl_evaluations(build_nl_poly(f, &build)).minCoeff();
        report.counters.additions = build.total();
      }
      break;
    case Method::kF2:
      report.nonlinearity = simonetti_nonlinearity(f, {}, &report.systems);
      for (const auto& s : report.systems) {
        report.counters.generators_checked += s.counters.generators_checked;
        report.counters.generators_sufficient += s.counters.generators_sufficient;
      }
      break;
    case Method::kQLoop: {
      BuildCounters build;
      const IntVector evaluations = nl_evaluations(build_nl_poly(f, &build));
      std::int64_t j = 0;
      while (!variety_nonempty_q(evaluations, j)) ++j;
      report.nonlinearity = j;
      report.counters.additions = build.total();
      break;
    }
  }
  report.micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json report_to_json(const BooleanFunction& f, const RunReport& report) {
  nlohmann::json counters = {{"additions", report.counters.additions},
                             {"generators_checked", report.counters.generators_checked},
                             {"generators_sufficient", report.counters.generators_sufficient}};
  return {{"n", report.n},
          {"tt", format_tt_hex(f)},
          {"nl", report.nonlinearity},
          {"method", std::string(method_name(report.method))},
          {"counters", counters},
          {"micros", report.micros}};
}

unsigned default_thread_count() {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NLTOOL_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

BooleanFunction sweep_function(const SweepOptions& options, std::uint64_t index) {
  if (options.exhaustive) {
    BitVector table(table_size(options.n));
    table.words()[0] = index;
    return {options.n, std::move(table)};
  }
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  return BooleanFunction::random(options.n, rng);
}

SweepResult sweep(const SweepOptions& options) {
  if (options.methods.empty()) throw std::invalid_argument("sweep needs at least one method");
  std::uint64_t total = 0;
  if (options.exhaustive) {
    if (options.n < 1 || options.n > 4) throw std::domain_error("exhaustive sweeps support 1 <= n <= 4");
    total = std::uint64_t{1} << (std::size_t{1} << options.n);
  } else {
    total = options.sample;
  }

  std::vector<SweepItem> items(total);
  const unsigned threads =
      std::max<unsigned>(1, std::min<std::uint64_t>(options.threads ? options.threads : default_thread_count(), total));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < total; i += threads) {
        SweepItem& item = items[i];
        item.f = sweep_function(options, i);
        for (Method m : options.methods) item.reports.push_back(run_method(item.f, m));
      }
    });
  }
  for (auto& t : pool) t.join();

  SweepResult result;
  result.functions = total;
  for (const SweepItem& item : items) {
    const std::int64_t nl = item.reports.front().nonlinearity;
    bool agree = true;
    for (const auto& r : item.reports) agree = agree && r.nonlinearity == nl;
    if (!agree) {
      ++result.mismatches;
      if (!result.first_mismatch) {
        std::ostringstream msg;
        msg << "tt:" << format_tt_hex(item.f);
        for (const auto& r : item.reports) msg << ' ' << method_name(r.method) << '=' << r.nonlinearity;
        result.first_mismatch = msg.str();
      }
    }
    ClassStats& cls = result.classes[nl];
    ++cls.count;
    for (const auto& r : item.reports) {
      cls.total_additions += r.counters.additions;
      for (const auto& sys : r.systems) {
        SystemStats& s = cls.systems[sys.t];
        const auto checked = sys.counters.generators_checked;
        const auto sufficient = sys.counters.generators_sufficient;
        if (sufficient > checked) result.sufficient_exceeds_checked = true;
        if (s.runs == 0) {
          s.min_checked = s.max_checked = checked;
          s.min_sufficient = s.max_sufficient = sufficient;
        }
        ++s.runs;
        s.total_checked += checked;
        s.total_sufficient += sufficient;
        s.min_checked = std::min(s.min_checked, checked);
        s.max_checked = std::max(s.max_checked, checked);
        s.min_sufficient = std::min(s.min_sufficient, sufficient);
        s.max_sufficient = std::max(s.max_sufficient, sufficient);
      }
    }
  }
  if (options.keep_reports) result.items = std::move(items);
  return result;
}

std::string format_sweep_table(const SweepResult& result, int n) {
  std::ostringstream out;
  out << "functions " << result.functions << "  mismatches " << result.mismatches << '\n';
  out << std::setw(4) << "NL" << std::setw(10) << "count" << '\n';
  for (const auto& [nl, cls] : result.classes) out << std::setw(4) << nl << std::setw(10) << cls.count << '\n';

  int max_t = 0;
  for (const auto& [nl, cls] : result.classes)
    for (const auto& [t, s] : cls.systems) max_t = std::max(max_t, t);
  if (max_t == 0) return out.str();

  out << "\nsystems J_t^" << n << ": #S mean sufficient, m/M min/max sufficient, #C mean checked\n";
  out << std::fixed << std::setprecision(2);
  for (int t = 1; t <= max_t; ++t) {
    out << "J_" << t << '\n';
    out << std::setw(4) << "NL" << std::setw(10) << "#S" << std::setw(6) << "m" << std::setw(6) << "M"
        << std::setw(12) << "#C" << '\n';
    for (const auto& [nl, cls] : result.classes) {
      const auto it = cls.systems.find(t);
      const SystemStats s = it == cls.systems.end() ? SystemStats{} : it->second;
      out << std::setw(4) << nl << std::setw(10) << s.mean_sufficient() << std::setw(6) << s.min_sufficient
          << std::setw(6) << s.max_sufficient << std::setw(12) << s.mean_checked() << '\n';
    }
  }
  return out.str();
}

std::vector<BenchRow> bench(int n, std::uint64_t reps, const std::vector<Method>& methods, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BooleanFunction> inputs;
  for (std::uint64_t r = 0; r < reps; ++r) inputs.push_back(BooleanFunction::random(n, rng));

  std::vector<BenchRow> rows;
  for (Method m : methods) {
    BenchRow row;
    row.method = m;
    if (m == Method::kF2 && n > kF2BenchMaxVars) {
      row.skipped = true;
      rows.push_back(row);
      continue;
    }
    double total = 0;
    for (const auto& f : inputs) {
      const auto start = std::chrono::steady_clock::now();
      run_method(f, m);
      const double us =
          std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
      total += us;
      row.min_micros = row.reps == 0 ? us : std::min(row.min_micros, us);
      row.max_micros = std::max(row.max_micros, us);
      ++row.reps;
    }
    row.mean_micros = row.reps ? total / static_cast<double>(row.reps) : 0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nltool
