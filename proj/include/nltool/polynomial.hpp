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
#include <stdexcept>

#include <Eigen/Core>

#include "nltool/bit_vector.hpp"

namespace nltool {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntVector = Vector<std::int64_t>;

inline constexpr int kMaxVars = 26;

inline std::size_t table_size(int num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars) throw std::domain_error("variable count out of range");
  return std::size_t{1} << num_vars;
}

/// Square-free polynomial over F2 in `num_vars` variables. Coefficient of the
/// monomial prod_{j in mask} x_{j+1} lives at index `mask`. The quotient by
/// the field equations is structural: no monomial carries a squared variable.
class F2Polynomial {
 public:
  F2Polynomial() = default;
  explicit F2Polynomial(int num_vars) : num_vars_(num_vars), coeffs_(table_size(num_vars)) {}
  F2Polynomial(int num_vars, BitVector coeffs) : num_vars_(num_vars), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != table_size(num_vars)) throw std::invalid_argument("coefficient vector length must be 2^m");
  }

  static F2Polynomial constant(int num_vars, bool value) {
    F2Polynomial p(num_vars);
    p.coeffs_.set(0, value);
    return p;
  }
  static F2Polynomial variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars) throw std::domain_error("variable index out of range");
    F2Polynomial p(num_vars);
    p.coeffs_.set(std::size_t{1} << index);
    return p;
  }

  int num_vars() const { return num_vars_; }
  bool coeff(std::size_t mask) const { return coeffs_.get(mask); }
  void toggle(std::size_t mask) { coeffs_.flip(mask); }
  bool is_zero() const { return coeffs_.none(); }
  const BitVector& coeffs() const { return coeffs_; }
  BitVector& coeffs() { return coeffs_; }

  F2Polynomial& operator+=(const F2Polynomial& rhs) {
    coeffs_ ^= rhs.coeffs_;
    return *this;
  }
  friend F2Polynomial operator+(F2Polynomial lhs, const F2Polynomial& rhs) { return lhs += rhs; }
  bool operator==(const F2Polynomial&) const = default;

 private:
  int num_vars_ = 0;
  BitVector coeffs_;
};

/// Multilinear polynomial with coefficients in Scalar, indexed by monomial
/// mask like F2Polynomial. Holds numerical normal forms and the
/// nonlinearity polynomial.
template <typename Scalar>
struct MultilinearPoly {
  int num_vars = 0;
  Vector<Scalar> coeffs;

  MultilinearPoly() = default;
  MultilinearPoly(int m, Vector<Scalar> c) : num_vars(m), coeffs(std::move(c)) {
    if (static_cast<std::size_t>(coeffs.size()) != table_size(m))
      throw std::invalid_argument("coefficient vector length must be 2^m");
  }

  Scalar coeff(std::size_t mask) const { return coeffs(static_cast<Eigen::Index>(mask)); }
  bool operator==(const MultilinearPoly& rhs) const {
    return num_vars == rhs.num_vars && coeffs == rhs.coeffs;
  }
};

using IntPolynomial = MultilinearPoly<std::int64_t>;

// Product of two square-free F2 polynomials modulo the field equations.
// Schoolbook over masks; meant for small operands and cross-checks.
F2Polynomial multiply(const F2Polynomial& lhs, const F2Polynomial& rhs);

// x_h * p modulo the field equations (0-based variable index h).
F2Polynomial multiply_by_variable(const F2Polynomial& p, int h);

}  // namespace nltool
