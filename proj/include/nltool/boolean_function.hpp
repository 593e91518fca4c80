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
#include <random>
#include <vector>

#include "nltool/bit_vector.hpp"
#include "nltool/polynomial.hpp"

namespace nltool {

/// Boolean function on F2^n stored as its truth table.
///
/// Points are enumerated little-endian: table index i is the point whose
/// coordinate x_j equals bit (j-1) of i, so x_1 varies fastest. For n = 2
/// the order is (0,0), (1,0), (0,1), (1,1).
class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(int num_vars, BitVector table);

  static BooleanFunction zero(int num_vars);
  static BooleanFunction from_bits(int num_vars, const std::vector<int>& bits);
  static BooleanFunction random(int num_vars, std::mt19937_64& rng);

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return table_.size(); }
  // 0-based point index
  bool operator[](std::size_t index) const { return table_.get(index); }
  const BitVector& truth_table() const { return table_; }
  std::size_t weight() const { return table_.popcount(); }

  BooleanFunction complement() const { return {num_vars_, ~table_}; }

  bool operator==(const BooleanFunction&) const = default;

 private:
  int num_vars_ = 0;
  BitVector table_;
};

/// Coefficients (a_0, ..., a_n) of the affine function a_0 + sum a_i x_i,
/// packed as a mask with a_i at bit i. Shares the index convention of the
/// nonlinearity polynomial's evaluation vector.
struct AffineCoefficients {
  int num_vars = 0;
  std::uint64_t mask = 0;

  static AffineCoefficients from_bits(const std::vector<int>& a);
  bool operator==(const AffineCoefficients&) const = default;
};

// f(op_p) with p 1-based; throws std::domain_error when p is outside [1, 2^n].
bool evaluate(const BooleanFunction& f, std::size_t p);

std::size_t distance(const BooleanFunction& f, const BooleanFunction& g);

F2Polynomial anf_of(const BooleanFunction& f);
BooleanFunction function_of(const F2Polynomial& anf);

// The zero polynomial has degree 0.
int algebraic_degree(const F2Polynomial& anf);

bool is_affine(const BooleanFunction& f);

BooleanFunction affine_function(const AffineCoefficients& a);

}  // namespace nltool
