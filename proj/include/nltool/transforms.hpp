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

#include <bit>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

#include "nltool/bit_vector.hpp"
#include "nltool/boolean_function.hpp"
#include "nltool/polynomial.hpp"

namespace nltool {

/// Number of variables m such that 2^m == length; throws std::domain_error
/// for lengths that are not a power of two.
inline int log2_exact(std::size_t length) {
  if (length == 0 || !std::has_single_bit(length)) throw std::domain_error("length is not a power of two");
  return std::countr_zero(length);
}

/// Runs `op(lo, hi)` over every butterfly pair of a length-2^m vector, one
/// variable at a time in ascending bit order. `hi` is the partner of `lo`
/// with that variable set.
template <typename Derived, typename PairOp>
void butterfly(Eigen::MatrixBase<Derived>& v, PairOp op) {
  const Eigen::Index len = v.size();
  log2_exact(static_cast<std::size_t>(len));
  for (Eigen::Index half = 1; half < len; half <<= 1)
    for (Eigen::Index block = 0; block < len; block += 2 * half)
      for (Eigen::Index i = block; i < block + half; ++i) op(v(i), v(i + half));
}

/// Unnormalized Walsh-Hadamard transform in place.
template <typename Derived>
void walsh_inplace(Eigen::MatrixBase<Derived>& v) {
  butterfly(v, [](auto& lo, auto& hi) {
    const auto a = lo;
    lo = a + hi;
    hi = a - hi;
  });
}

/// Values -> NNF coefficients: lambda_u = (-1)^|u| sum_{a <= u} (-1)^|a| v(a).
template <typename Derived>
void nnf_inplace(Eigen::MatrixBase<Derived>& v) {
  butterfly(v, [](const auto& lo, auto& hi) { hi -= lo; });
}

/// NNF coefficients -> values: v(u) = sum_{a <= u} lambda_a.
template <typename Derived>
void subset_sum_inplace(Eigen::MatrixBase<Derived>& v) {
  butterfly(v, [](const auto& lo, auto& hi) { hi += lo; });
}

template <typename Scalar>
MultilinearPoly<Scalar> nnf_from_evaluations(Vector<Scalar> values) {
  const int m = log2_exact(static_cast<std::size_t>(values.size()));
  nnf_inplace(values);
  return {m, std::move(values)};
}

template <typename Scalar>
Vector<Scalar> evaluations_from_nnf(const MultilinearPoly<Scalar>& p) {
  Vector<Scalar> values = p.coeffs;
  subset_sum_inplace(values);
  return values;
}

// Fast Moebius transform over F2 on a packed vector (truth table <-> ANF).
BitVector mobius(BitVector bits);

using WalshSpectrum = IntVector;

WalshSpectrum walsh_spectrum(const BooleanFunction& f);

// N(f) = 2^(n-1) - max_v |W_f(v)| / 2. The absolute value covers the
// complemented affine functions a_0 = 1.
std::int64_t nonlinearity_fwt(const BooleanFunction& f);

// Truth table as 0/1 integers, for NNF work on Boolean inputs.
IntVector to_integer_values(const BooleanFunction& f);

}  // namespace nltool
