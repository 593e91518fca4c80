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
#include <vector>

#include "nltool/boolean_function.hpp"
#include "nltool/polynomial.hpp"

namespace nltool {

/// Integer nonlinearity polynomial of an n-variable Boolean function.
///
/// A polynomial in a_0..a_n (a_0 at mask bit 0, a_i at bit i) whose value
/// at a binary point a is the distance from f to a_0 + sum a_i x_i. Its
/// evaluation vector therefore lists the distances to all 2^(n+1) affine
/// functions, in AffineCoefficients mask order.
struct NlPolynomial {
  int n = 0;
  IntPolynomial poly;
};

/// Integer operation tally for build_nl_poly. A doubling x -> 2x (or -2x)
/// is counted separately from a general sum.
struct BuildCounters {
  std::uint64_t sums = 0;
  std::uint64_t doublings = 0;

  std::uint64_t total() const { return sums + doublings; }
};

/// Builds the nonlinearity polynomial in n 2^n + 2^(n+1) integer sums and
/// doublings.
///
/// With W(u) the number of points x >= u where f is 1, the coefficient of
/// the a_0-free monomial a^u is W(0) for u = 0 and
/// (-2)^|u| W(u) + (-1)^(|u|-1) 2^(n-1) otherwise. One butterfly pass
/// (lo, hi) -> (lo + hi, -2 hi) per variable yields (-2)^|u| W(u) directly.
/// Coefficients that contain a_0 follow from d(f, g+1) = 2^n - d(f, g):
/// 2^n [u = 0] - 2 c_u.
NlPolynomial build_nl_poly(const BooleanFunction& f, BuildCounters* counters = nullptr);

// Evaluations at every binary point; entry at mask a is d(f, affine(a)).
IntVector nl_evaluations(const NlPolynomial& p);

// Algorithm with an explicit affine branch, then the minimum evaluation.
std::int64_t nonlinearity_nnf(const BooleanFunction& f);

// True iff some affine function lies at distance exactly t from f, i.e. the
// system {E[A], n_f - t} has a binary solution.
bool variety_nonempty_q(const BooleanFunction& f, std::int64_t t);
bool variety_nonempty_q(const IntVector& evaluations, std::int64_t t);

// Smallest t >= 0 with a nonempty variety. `tested`, if given, receives every
// t that was checked, in order.
std::int64_t nonlinearity_q_loop(const BooleanFunction& f, std::vector<std::int64_t>* tested = nullptr);

// Sorted distinct distances from f to the affine functions.
std::vector<std::int64_t> distance_spectrum(const BooleanFunction& f);

}  // namespace nltool
