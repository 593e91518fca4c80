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


#include "nltool/boolean_function.hpp"

#include <bit>
#include <stdexcept>

#include "nltool/transforms.hpp"

namespace nltool {

BooleanFunction::BooleanFunction(int num_vars, BitVector table) : num_vars_(num_vars), table_(std::move(table)) {
  if (num_vars < 1) throw std::domain_error("a Boolean function needs at least one variable");
  if (table_.size() != table_size(num_vars)) throw std::invalid_argument("truth table length must be 2^n");
}

BooleanFunction BooleanFunction::zero(int num_vars) { return {num_vars, BitVector(table_size(num_vars))}; }

BooleanFunction BooleanFunction::from_bits(int num_vars, const std::vector<int>& bits) {
  return {num_vars, BitVector::from_bits(bits)};
}

BooleanFunction BooleanFunction::random(int num_vars, std::mt19937_64& rng) {
  BitVector table(table_size(num_vars));
  for (auto& w : table.words()) w = rng();
  if (table.size() < 64) table.words()[0] &= (std::uint64_t{1} << table.size()) - 1;
  return {num_vars, std::move(table)};
}

AffineCoefficients AffineCoefficients::from_bits(const std::vector<int>& a) {
  if (a.size() < 2 || a.size() > kMaxVars + 1) throw std::domain_error("affine coefficient vector must have length n+1");
  AffineCoefficients out{static_cast<int>(a.size()) - 1, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && a[i] != 1) throw std::invalid_argument("affine coefficients must be bits");
    if (a[i]) out.mask |= std::uint64_t{1} << i;
  }
  return out;
}

bool evaluate(const BooleanFunction& f, std::size_t p) {
  if (p < 1 || p > f.size()) throw std::domain_error("point index out of range");
  return f[p - 1];
}

std::size_t distance(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.num_vars() != g.num_vars()) throw std::domain_error("distance between functions of different arity");
  return (f.truth_table() ^ g.truth_table()).popcount();
}

F2Polynomial anf_of(const BooleanFunction& f) { return {f.num_vars(), mobius(f.truth_table())}; }

BooleanFunction function_of(const F2Polynomial& anf) { return {anf.num_vars(), mobius(anf.coeffs())}; }

int algebraic_degree(const F2Polynomial& anf) {
  int degree = 0;
  const auto& c = anf.coeffs();
  for (std::size_t u = c.next_set(0); u < c.size(); u = c.next_set(u + 1))
    degree = std::max(degree, std::popcount(u));
  return degree;
}

bool is_affine(const BooleanFunction& f) { return algebraic_degree(anf_of(f)) <= 1; }

BooleanFunction affine_function(const AffineCoefficients& a) {
  const int n = a.num_vars;
  BitVector table(table_size(n));
  const std::uint64_t linear = a.mask >> 1;
  const bool constant = a.mask & 1U;
  for (std::size_t x = 0; x < table.size(); ++x)
    table.set(x, constant ^ (std::popcount(linear & x) & 1));
  return {n, std::move(table)};
}

}  // namespace nltool
