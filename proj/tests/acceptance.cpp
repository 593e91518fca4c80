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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// hard failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nltool/f2_solver.hpp"
#include "nltool/io.hpp"
#include "nltool/nl_poly.hpp"
#include "nltool/sweep.hpp"
#include "nltool/transforms.hpp"
#include "oracles.hpp"

namespace {

using namespace nltool;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::int64_t> to_std(const IntVector& v) { return {v.begin(), v.end()}; }

Outcome golden_example() {
  const auto start = Clock::now();
  const auto f = parse_anf("x1*x2 + 1", 2);
  const auto p = build_nl_poly(f);
  const bool poly_ok = to_std(p.poly.coeffs) == std::vector<std::int64_t>{3, -2, 0, 0, 0, 0, -2, 4};
  const bool evals_ok = to_std(nl_evaluations(p)) == std::vector<std::int64_t>{3, 1, 3, 1, 3, 1, 1, 3};
  const std::int64_t fwt = nonlinearity_fwt(f);
  const std::int64_t nnf = nonlinearity_nnf(f);
  const std::int64_t qloop = nonlinearity_q_loop(f);
  const std::int64_t f2 = simonetti_nonlinearity(f);
  const double elapsed = seconds_since(start);
  const bool nl_ok = fwt == 1 && nnf == 1 && qloop == 1 && f2 == 1;
  return {poly_ok && evals_ok && nl_ok && elapsed < 1e-3,
          "n_f = " + format_polynomial(p.poly) + ", NL(fwt,nnf,q,f2) = " + std::to_string(fwt) + "," +
              std::to_string(nnf) + "," + std::to_string(qloop) + "," + std::to_string(f2) + ", " +
              std::to_string(elapsed * 1e3) + " ms (limit 1 ms)"};
}

Outcome agreement_n3() {
  const auto start = Clock::now();
  std::uint64_t mismatches = 0;
  for (const auto& f : oracle::all_functions(3)) {
    const auto fwt = nonlinearity_fwt(f);
    if (nonlinearity_nnf(f) != fwt || nonlinearity_q_loop(f) != fwt || simonetti_nonlinearity(f) != fwt) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 10,
          "256 functions, " + std::to_string(mismatches) + " mismatches, " + std::to_string(elapsed) + " s (limit 10 s)"};
}

Outcome agreement_n4() {
  auto start = Clock::now();
  std::uint64_t mismatches = 0;
  for (const auto& f : oracle::all_functions(4)) {
    const auto fwt = nonlinearity_fwt(f);
    if (nonlinearity_nnf(f) != fwt || nonlinearity_q_loop(f) != fwt) ++mismatches;
  }
  const double transform_s = seconds_since(start);

  start = Clock::now();
  std::mt19937_64 rng(20260416);
  std::uint64_t f2_mismatches = 0;
  constexpr int kSamples = 200;
  for (int i = 0; i < kSamples; ++i) {
    const auto f = BooleanFunction::random(4, rng);
    if (simonetti_nonlinearity(f) != nonlinearity_fwt(f)) ++f2_mismatches;
  }
  const double f2_s = seconds_since(start);
  return {mismatches == 0 && f2_mismatches == 0 && transform_s < 60 && f2_s < 120,
          "65536 fwt/nnf/q-loop: " + std::to_string(mismatches) + " mismatches in " + std::to_string(transform_s) +
              " s (limit 60 s); 200 f2: " + std::to_string(f2_mismatches) + " mismatches in " + std::to_string(f2_s) +
              " s (limit 120 s)"};
}

Outcome bound_check() {
  std::int64_t max3 = 0;
  std::int64_t max4 = 0;
  for (const auto& f : oracle::all_functions(3)) max3 = std::max(max3, nonlinearity_fwt(f));
  for (const auto& f : oracle::all_functions(4)) max4 = std::max(max4, nonlinearity_fwt(f));
  return {max3 == 2 && max4 == 6, "max NL n=3: " + std::to_string(max3) + ", n=4: " + std::to_string(max4)};
}

Outcome operation_budget() {
  std::mt19937_64 rng(5);
  std::string detail;
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    BuildCounters counters;
    build_nl_poly(BooleanFunction::random(n, rng), &counters);
    const std::uint64_t size = std::uint64_t{1} << n;
    // (3/2) n 2^n + 2^(n+1), kept in integers
    const std::uint64_t limit = 3 * n * size / 2 + 2 * size;
    if (counters.total() > limit) ok = false;
    if (n == 3 || n == 12)
      detail += "n=" + std::to_string(n) + ": " + std::to_string(counters.total()) + " <= " + std::to_string(limit) + "; ";
  }
  return {ok, detail + "checked 3 <= n <= 12"};
}

Outcome solver_dimension() {
  const auto start = Clock::now();
  std::uint64_t failures = 0;
  for (const auto& f : oracle::all_functions(3)) {
    const auto distances = oracle::affine_distances(f);
    for (int t = 1; t <= 8; ++t) {
      std::uint64_t expected = 0;
      for (auto d : distances) expected += d <= t - 1;
      if (solve_simonetti_system(f, t, false).solution_count() != expected) ++failures;
    }
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < 60,
          "2048 (f, t) pairs, " + std::to_string(failures) + " failures, " + std::to_string(elapsed) + " s (limit 60 s)"};
}

Outcome transform_properties() {
  std::uint64_t failures = 0;
  auto check_function = [&](const BooleanFunction& f) {
    if (mobius(mobius(f.truth_table())) != f.truth_table()) ++failures;
    const IntVector values = to_integer_values(f);
    const auto nnf = nnf_from_evaluations(values);
    if (evaluations_from_nnf(nnf) != values) ++failures;
    const auto p = build_nl_poly(f);
    const IntVector evals = nl_evaluations(p);
    if (nnf_from_evaluations(evals) != p.poly) ++failures;
    const std::int64_t full = static_cast<std::int64_t>(f.size());
    for (Eigen::Index a = 0; a < evals.size(); a += 2)
      if (evals(a) + evals(a + 1) != full) ++failures;
    auto sorted = to_std(evals);
    std::vector<std::int64_t> from_walsh;
    for (auto w : walsh_spectrum(f)) {
      from_walsh.push_back(full / 2 - w / 2);
      from_walsh.push_back(full / 2 + w / 2);
    }
    std::sort(sorted.begin(), sorted.end());
    std::sort(from_walsh.begin(), from_walsh.end());
    if (sorted != from_walsh) ++failures;
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : oracle::all_functions(n)) {
      check_function(f);
      // NNF of a Boolean function evaluates into {0,1} and reproduces f
      const auto evals = evaluations_from_nnf(nnf_from_evaluations(to_integer_values(f)));
      for (std::size_t x = 0; x < f.size(); ++x)
        if (evals(static_cast<Eigen::Index>(x)) != (f[x] ? 1 : 0)) ++failures;
    }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto f = BooleanFunction::random(8, rng);
    check_function(f);
    const auto evals = evaluations_from_nnf(nnf_from_evaluations(to_integer_values(f)));
    for (std::size_t x = 0; x < f.size(); ++x)
      if (evals(static_cast<Eigen::Index>(x)) != (f[x] ? 1 : 0)) ++failures;
  }
  return {failures == 0, "exhaustive n<=3 + 1000 random n=8, " + std::to_string(failures) + " failures"};
}

Outcome instrumentation() {
  SweepOptions options;
  options.n = 3;
  options.methods = {Method::kFwt, Method::kNnf, Method::kF2};
  const auto result = sweep(options);
  const auto& affine = result.classes.at(0);
  const double checked_t1 = affine.systems.at(1).mean_checked();
  const bool min_max_ok = affine.systems.at(1).min_checked == 8 && affine.systems.at(1).max_checked == 8;
  return {result.mismatches == 0 && !result.sufficient_exceeds_checked && checked_t1 == 8.0 && min_max_ok,
          "#S <= #C on every run: " + std::string(result.sufficient_exceeds_checked ? "no" : "yes") +
              "; #C(J_1, NL=0) = " + std::to_string(checked_t1) + " (expected 2^3 = 8)"};
}

Outcome performance_sanity(bool& hard_fail) {
  std::mt19937_64 rng(9);
  const auto f = BooleanFunction::random(20, rng);
  const auto start = Clock::now();
  const auto nl = nonlinearity_fwt(f);
  const double elapsed = seconds_since(start);
  hard_fail = elapsed >= 4.0;
  return {elapsed < 2.0, "n=20 NL=" + std::to_string(nl) + " in " + std::to_string(elapsed) + " s (limit 2 s, informational)"};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const Outcome& o, bool hard = true) {
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : (hard ? "FAIL" : "WARN"), id, name, o.detail.c_str());
    if (!o.pass && hard) ++failed;
  };

  report(1, "golden example n=2", golden_example());
  report(2, "cross-method agreement n=3", agreement_n3());
  report(3, "cross-method agreement n=4", agreement_n4());
  report(4, "maximum nonlinearity bound", bound_check());
  report(5, "nonlinearity polynomial operation budget", operation_budget());
  report(6, "solver dimension vs distance oracle", solver_dimension());
  report(7, "transform properties", transform_properties());
  report(8, "solver instrumentation", instrumentation());
  bool perf_hard_fail = false;
  const auto perf = performance_sanity(perf_hard_fail);
  report(9, "fast Walsh performance", perf, perf_hard_fail);

  std::printf("%s\n", failed ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED");
  return failed ? 1 : 0;
}
