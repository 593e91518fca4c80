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
#include <deque>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "nltool/bit_vector.hpp"
#include "nltool/boolean_function.hpp"
#include "nltool/polynomial.hpp"

namespace nltool {

/// Product of `degree()` distinct variables among z_1..z_s, stored as its
/// sorted 1-based support.
class SquareFreeMonomial {
 public:
  SquareFreeMonomial(int ambient, std::vector<int> support);

  int ambient() const { return ambient_; }
  int degree() const { return static_cast<int>(support_.size()); }
  const std::vector<int>& support() const { return support_; }

  bool operator==(const SquareFreeMonomial&) const = default;

 private:
  int ambient_;
  std::vector<int> support_;
};

/// Streams the C(s, t) square-free monomials of degree t in s variables in
/// lexicographic order of their sorted supports, without materializing them.
class MonomialStream {
 public:
  MonomialStream(int s, int t);

  std::optional<SquareFreeMonomial> next();

  static std::uint64_t count(int s, int t);

 private:
  int s_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Evaluates generators m(g_n + f) of the Simonetti ideal J_t^n(f) as F2
/// polynomials in a_0..a_n.
///
/// For every point op_h it keeps the evaluation vector over {0,1}^(n+1) of
/// the affine factor a_0 + sum a_i x_i(op_h) + f(op_h). A generator is the
/// pointwise product of its factors, turned into coefficients by a Moebius
/// transform.
class GeneratorBuilder {
 public:
  explicit GeneratorBuilder(const BooleanFunction& f);

  int num_vars() const { return num_vars_; }
  // support is 1-based over the 2^n points
  F2Polynomial generator(std::span<const int> support) const;
  F2Polynomial generator(const SquareFreeMonomial& m) const;
  const BitVector& factor_values(int point) const { return factors_[static_cast<std::size_t>(point - 1)]; }

 private:
  int num_vars_;
  std::vector<BitVector> factors_;
};

F2Polynomial simonetti_generator(const BooleanFunction& f, const SquareFreeMonomial& m);

struct SolverCounters {
  std::uint64_t generators_checked = 0;
  std::uint64_t generators_sufficient = 0;
  std::uint64_t eliminations = 0;
  std::uint64_t products_reduced = 0;
};

/// Linear representation of F2[a_0..a_{m-1}] / J for an ideal J that contains
/// the field equations, grown one generator at a time.
///
/// The basis (escalier) starts as all 2^m square-free monomials. Each
/// nonzero reduced relation eliminates its deglex-largest monomial, which is
/// substituted in every stored row; the relation's products with every
/// variable go to a FIFO queue and are treated the same way. Multiplication
/// by x_h is implicit (mask union), so no matrices are stored. When the queue
/// is empty the surviving monomials are a basis of the quotient and their
/// number is |V(J)|.
class LinearRep {
 public:
  explicit LinearRep(int num_vars);

  int num_vars() const { return num_vars_; }

  void add_generator(const F2Polynomial& g);
  // Queue a generator without processing; call close() before counting.
  void enqueue(const F2Polynomial& g);
  void close();

  // Throws std::logic_error while generators are still pending.
  std::uint64_t solution_count() const;

  bool trivial() const { return trivial_; }
  bool has_pending() const { return !pending_.empty(); }
  const SolverCounters& counters() const { return counters_; }

  // Groebner description: the residue of p over the current escalier.
  F2Polynomial reduce(const F2Polynomial& p) const;

  std::vector<std::size_t> escalier() const;
  std::size_t eliminated_count() const { return eliminated_.size(); }

  // x_h * (eliminated relation) reduces to zero for every relation and h.
  bool is_closed() const;
  bool escalier_is_order_ideal() const;

 private:
  // returns true if `p` caused an elimination
  bool absorb(const F2Polynomial& p);
  void eliminate(const F2Polynomial& reduced);
  void drain();

  int num_vars_;
  BitVector alive_;
  std::vector<F2Polynomial> rows_;
  std::vector<std::size_t> eliminated_;
  std::deque<F2Polynomial> pending_;
  std::unordered_set<BitVector> pending_set_;
  bool trivial_ = false;
  SolverCounters counters_;
};

// Deglex order on masks: popcount first, then mask value.
bool deglex_less(std::size_t lhs, std::size_t rhs);

/// Loads J_t^n(f) into a fresh LinearRep. With `early_exit`, streaming stops
/// as soon as the ideal becomes the whole ring.
LinearRep solve_simonetti_system(const BooleanFunction& f, int t, bool early_exit = true);

// True iff no affine function lies within distance t-1 of f. 1 <= t <= 2^n.
bool variety_empty_f2(const BooleanFunction& f, int t, SolverCounters* counters = nullptr);

struct SimonettiOptions {
  // Skip J_1 for non-affine inputs.
  bool start_at_two_if_nonaffine = false;
};

struct SimonettiTrace {
  int t = 0;
  bool empty = false;
  SolverCounters counters;
};

std::int64_t simonetti_nonlinearity(const BooleanFunction& f, SimonettiOptions options = {},
                                    std::vector<SimonettiTrace>* trace = nullptr);

/// Normal form modulo the vanishing ideal of the points of weight <= w in
/// F2^s: drops every monomial of degree > w. Zero iff p vanishes on all
/// those points.
F2Polynomial weight_ideal_normal_form(const F2Polynomial& p, int w);

}  // namespace nltool
