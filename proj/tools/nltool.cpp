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


// nltool: nonlinearity of Boolean functions by Walsh transform, nonlinearity
// polynomial and F2 polynomial systems.

#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nltool/f2_solver.hpp"
#include "nltool/io.hpp"
#include "nltool/nl_poly.hpp"
#include "nltool/sweep.hpp"
#include "nltool/transforms.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;

struct InputArgs {
  std::string spec;
  int n = 0;
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("--in", args.spec, "tt:<hex> | anf:<expr> | random:<seed>")->required();
  cmd->add_option("--n", args.n, "number of variables")->required()->check(CLI::Range(1, nltool::kMaxVars));
  cmd->add_option("--format", args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

int cmd_nl(const InputArgs& in, const std::string& method_text) {
  const auto f = nltool::parse_function_spec(in.spec, in.n);
  const auto method = nltool::parse_method(method_text);
  const auto report = nltool::run_method(f, method);
  if (in.format == "json")
    std::cout << nltool::report_to_json(f, report).dump() << '\n';
  else
    std::cout << report.nonlinearity << '\n';
  return 0;
}

int cmd_nlpoly(const InputArgs& in) {
  const auto f = nltool::parse_function_spec(in.spec, in.n);
  const auto p = nltool::build_nl_poly(f);
  if (in.format == "json") {
    auto j = nltool::polynomial_to_json(p.poly);
    j["n"] = p.n;
    j["tt"] = nltool::format_tt_hex(f);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << nltool::format_polynomial(p.poly) << '\n';
  }
  return 0;
}

int cmd_spectrum(const InputArgs& in, const std::string& kind) {
  const auto f = nltool::parse_function_spec(in.spec, in.n);
  std::vector<std::int64_t> values;
  if (kind == "walsh") {
    const auto w = nltool::walsh_spectrum(f);
    values.assign(w.begin(), w.end());
  } else {
    values = nltool::distance_spectrum(f);
  }
  if (in.format == "json") {
    nlohmann::json j = {{"n", in.n}, {"tt", nltool::format_tt_hex(f)}, {"kind", kind}, {"values", values}};
    std::cout << j.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
    std::cout << '\n';
  }
  return 0;
}

int cmd_sweep(nltool::SweepOptions options, const std::string& methods, const std::string& format) {
  options.methods = nltool::parse_method_list(methods);
  options.keep_reports = format == "json";
  const auto result = nltool::sweep(options);
  if (format == "json") {
    for (const auto& item : result.items)
      for (const auto& r : item.reports) std::cout << nltool::report_to_json(item.f, r).dump() << '\n';
  } else {
    std::cout << nltool::format_sweep_table(result, options.n);
  }
  if (result.mismatches) {
    std::cerr << "method mismatch on " << result.mismatches << " function(s); first: " << *result.first_mismatch
              << '\n';
    return kExitMismatch;
  }
  return 0;
}

int cmd_bench(int n, std::uint64_t reps, const std::string& methods, std::uint64_t seed) {
  const auto rows = nltool::bench(n, reps, nltool::parse_method_list(methods), seed);
  std::cout << std::left << std::setw(8) << "method" << std::right << std::setw(8) << "reps" << std::setw(14)
            << "mean_us" << std::setw(14) << "min_us" << std::setw(14) << "max_us" << '\n';
  std::cout << std::fixed << std::setprecision(1);
  for (const auto& row : rows) {
    std::cout << std::left << std::setw(8) << nltool::method_name(row.method) << std::right;
    if (row.skipped) {
      std::cout << "  skipped (n > " << nltool::kF2BenchMaxVars << ")\n";
      continue;
    }
    std::cout << std::setw(8) << row.reps << std::setw(14) << row.mean_micros << std::setw(14) << row.min_micros
              << std::setw(14) << row.max_micros << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinearity of Boolean functions"};
  app.require_subcommand(1);

  InputArgs nl_in;
  std::string method = "fwt";
  auto* nl = app.add_subcommand("nl", "print the nonlinearity");
  add_input_options(nl, nl_in);
  nl->add_option("--method", method, "fwt | nnf | f2 | q-loop");

  InputArgs poly_in;
  auto* nlpoly = app.add_subcommand("nlpoly", "print the nonlinearity polynomial");
  add_input_options(nlpoly, poly_in);

  InputArgs spec_in;
  std::string kind = "walsh";
  auto* spectrum = app.add_subcommand("spectrum", "print the Walsh or distance spectrum");
  add_input_options(spectrum, spec_in);
  spectrum->add_option("--kind", kind, "walsh | distance")->check(CLI::IsMember({"walsh", "distance"}));

  nltool::SweepOptions sweep_opts;
  std::string sweep_methods = "fwt,nnf";
  std::string sweep_format = "text";
  bool exhaustive = false;
  auto* sweep = app.add_subcommand("sweep", "cross-check methods over many functions");
  sweep->add_option("--n", sweep_opts.n, "number of variables")->required()->check(CLI::Range(1, nltool::kMaxVars));
  auto* exhaustive_flag = sweep->add_flag("--exhaustive", exhaustive, "all 2^(2^n) functions");
  auto* sample_opt = sweep->add_option("--sample", sweep_opts.sample, "number of random functions");
  sweep->add_option("--seed", sweep_opts.seed, "seed for --sample");
  sweep->add_option("--methods", sweep_methods, "comma-separated methods");
  sweep->add_option("--format", sweep_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  exhaustive_flag->excludes(sample_opt);

  int bench_n = 10;
  std::uint64_t reps = 10;
  std::uint64_t bench_seed = 1;
  std::string bench_methods = "fwt,nnf,q-loop,f2";
  auto* bench = app.add_subcommand("bench", "timing table per method");
  bench->add_option("--n", bench_n, "number of variables")->required()->check(CLI::Range(1, nltool::kMaxVars));
  bench->add_option("--reps", reps, "random functions per method")->required();
  bench->add_option("--seed", bench_seed, "seed");
  bench->add_option("--methods", bench_methods, "comma-separated methods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*nl) return cmd_nl(nl_in, method);
    if (*nlpoly) return cmd_nlpoly(poly_in);
    if (*spectrum) return cmd_spectrum(spec_in, kind);
    if (*sweep) {
      if (!exhaustive && sweep_opts.sample == 0) {
        std::cerr << "sweep: pass --exhaustive or --sample N\n";
        return kExitParse;
      }
      sweep_opts.exhaustive = exhaustive;
      return cmd_sweep(sweep_opts, sweep_methods, sweep_format);
    }
    if (*bench) return cmd_bench(bench_n, reps, bench_methods, bench_seed);
  } catch (const nltool::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
