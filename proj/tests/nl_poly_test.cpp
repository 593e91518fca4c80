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


#include "nltool/nl_poly.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "nltool/transforms.hpp"
#include "oracles.hpp"

namespace nltool {
namespace {

BooleanFunction ExampleFunction() { return BooleanFunction::from_bits(2, {1, 1, 1, 0}); }

std::vector<std::int64_t> ToStd(const IntVector& v) { return {v.begin(), v.end()}; }

TEST(BuildNlPoly, WorkedExample) {
  const auto p = build_nl_poly(ExampleFunction());
  EXPECT_EQ(p.n, 2);
  EXPECT_EQ(p.poly.num_vars, 3);
  // 4 a0 a1 a2 - 2 a0 - 2 a1 a2 + 3
  EXPECT_EQ(ToStd(p.poly.coeffs), (std::vector<std::int64_t>{3, -2, 0, 0, 0, 0, -2, 4}));
}

TEST(BuildNlPoly, ZeroFunctionOneVariable) {
  // 2 a0 + a1 - 2 a0 a1
  const auto p = build_nl_poly(BooleanFunction::zero(1));
  EXPECT_EQ(ToStd(p.poly.coeffs), (std::vector<std::int64_t>{0, 2, 1, -2}));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(nl_evaluations(build_nl_poly(BooleanFunction::zero(n)))(0), 0);
}

TEST(BuildNlPoly, MatchesComponentSumExhaustive) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : oracle::all_functions(n))
      ASSERT_EQ(ToStd(build_nl_poly(f).poly.coeffs), oracle::nl_poly_by_components(f));
}

TEST(BuildNlPoly, MatchesWalshRoute) {
  // independent construction: distances from the Walsh spectrum, then the
  // signed NNF butterfly
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 12; ++n) {
    const auto f = BooleanFunction::random(n, rng);
    const auto w = walsh_spectrum(f);
    const std::int64_t half = std::int64_t{1} << (n - 1);
    IntVector distances(2 * w.size());
    for (Eigen::Index v = 0; v < w.size(); ++v) {
      distances(2 * v) = half - w(v) / 2;
      distances(2 * v + 1) = half + w(v) / 2;
    }
    ASSERT_EQ(build_nl_poly(f).poly, nnf_from_evaluations(distances)) << "n=" << n;
  }
}

TEST(BuildNlPoly, CoefficientAndValueBounds) {
  std::mt19937_64 rng(22);
  for (int n = 1; n <= 10; ++n) {
    const auto f = BooleanFunction::random(n, rng);
    const auto p = build_nl_poly(f);
    const std::int64_t full = std::int64_t{1} << n;
    EXPECT_LE(p.poly.coeffs.cwiseAbs().maxCoeff(), full);
    EXPECT_EQ(p.poly.coeff(0), static_cast<std::int64_t>(f.weight()));
    const auto values = nl_evaluations(p);
    EXPECT_GE(values.minCoeff(), 0);
    EXPECT_LE(values.maxCoeff(), full);
  }
}

TEST(BuildNlPoly, OperationBudget) {
  std::mt19937_64 rng(23);
  for (int n = 3; n <= 12; ++n) {
    BuildCounters counters;
    build_nl_poly(BooleanFunction::random(n, rng), &counters);
    const std::uint64_t size = std::uint64_t{1} << n;
    EXPECT_EQ(counters.sums, n * size / 2 + size);
    EXPECT_EQ(counters.doublings, n * size / 2 + size);
    EXPECT_LE(2 * counters.total(), 3 * n * size + 4 * size);
  }
}

TEST(NlEvaluations, Examples) {
  EXPECT_EQ(ToStd(nl_evaluations(build_nl_poly(ExampleFunction()))),
            (std::vector<std::int64_t>{3, 1, 3, 1, 3, 1, 1, 3}));
  EXPECT_EQ(ToStd(nl_evaluations(build_nl_poly(BooleanFunction::zero(1)))), (std::vector<std::int64_t>{0, 2, 1, 1}));
}

TEST(NlEvaluations, SumIsFourToTheN) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : oracle::all_functions(n))
      ASSERT_EQ(nl_evaluations(build_nl_poly(f)).sum(), std::int64_t{1} << (2 * n));
}

TEST(NlEvaluations, AreAffineDistances) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : oracle::all_functions(n))
      ASSERT_EQ(ToStd(nl_evaluations(build_nl_poly(f))), oracle::affine_distances(f));
  std::mt19937_64 rng(24);
  for (int n = 4; n <= 8; ++n) {
    const auto f = BooleanFunction::random(n, rng);
    ASSERT_EQ(ToStd(nl_evaluations(build_nl_poly(f))), oracle::affine_distances(f));
  }
}

TEST(NlEvaluations, ComplementIdentity) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : oracle::all_functions(n)) {
      const auto values = nl_evaluations(build_nl_poly(f));
      for (Eigen::Index a = 0; a < values.size(); a += 2) ASSERT_EQ(values(a) + values(a + 1), std::int64_t{1} << n);
    }
}

TEST(NlEvaluations, WalshMultisetEquality) {
  auto check = [](const BooleanFunction& f) {
    auto values = ToStd(nl_evaluations(build_nl_poly(f)));
    const auto w = walsh_spectrum(f);
    const std::int64_t half = std::int64_t{1} << (f.num_vars() - 1);
    std::vector<std::int64_t> expected;
    for (auto x : w) {
      expected.push_back(half - x / 2);
      expected.push_back(half + x / 2);
    }
    std::sort(values.begin(), values.end());
    std::sort(expected.begin(), expected.end());
    return values == expected;
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : oracle::all_functions(n)) ASSERT_TRUE(check(f));
  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) ASSERT_TRUE(check(BooleanFunction::random(1 + i % 8, rng)));
}

TEST(NlEvaluations, RoundTrip) {
  std::mt19937_64 rng(26);
  for (int n = 1; n <= 8; ++n) {
    const auto p = build_nl_poly(BooleanFunction::random(n, rng));
    EXPECT_EQ(nnf_from_evaluations(nl_evaluations(p)), p.poly);
  }
}

TEST(NonlinearityNnf, Examples) {
  EXPECT_EQ(nonlinearity_nnf(ExampleFunction()), 1);
  EXPECT_EQ(nonlinearity_nnf(affine_function({3, 0b1011})), 0);
  F2Polynomial anf(4);
  anf.toggle(0b0011);
  anf.toggle(0b1100);
  EXPECT_EQ(nonlinearity_nnf(function_of(anf)), 6);
}

TEST(NonlinearityQLoop, ExampleTestsZeroThenOne) {
  std::vector<std::int64_t> tested;
  EXPECT_EQ(nonlinearity_q_loop(ExampleFunction(), &tested), 1);
  EXPECT_EQ(tested, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(nonlinearity_q_loop(affine_function({2, 0b101})), 0);
}

TEST(NonlinearityQLoop, AgreesWithOtherMethods) {
  for (const auto& f : oracle::all_functions(3)) {
    const auto expected = nonlinearity_fwt(f);
    ASSERT_EQ(nonlinearity_q_loop(f), expected);
    ASSERT_EQ(nonlinearity_nnf(f), expected);
  }
}

TEST(VarietyNonemptyQ, Examples) {
  const auto f = ExampleFunction();
  EXPECT_TRUE(variety_nonempty_q(f, 3));
  EXPECT_FALSE(variety_nonempty_q(f, 0));
  EXPECT_FALSE(variety_nonempty_q(f, 5));
  EXPECT_THROW(variety_nonempty_q(f, -1), std::domain_error);
}

TEST(DistanceSpectrum, Examples) {
  EXPECT_EQ(distance_spectrum(ExampleFunction()), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(distance_spectrum(BooleanFunction::zero(1)), (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(DistanceSpectrum, MinimumAndAffineMembership) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 7;
    const auto f = BooleanFunction::random(n, rng);
    const auto spectrum = distance_spectrum(f);
    EXPECT_LE(spectrum.size(), std::size_t{2} << n);
    EXPECT_TRUE(std::is_sorted(spectrum.begin(), spectrum.end()));
    const bool affine = is_affine(f);
    EXPECT_EQ(spectrum.front() == 0, affine);
    if (!affine) {
      EXPECT_EQ(spectrum.front(), nonlinearity_fwt(f));
    }
  }
}

}  // namespace
}  // namespace nltool
