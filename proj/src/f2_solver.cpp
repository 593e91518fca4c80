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


#include "nltool/f2_solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "nltool/transforms.hpp"

namespace nltool {

SquareFreeMonomial::SquareFreeMonomial(int ambient, std::vector<int> support)
    : ambient_(ambient), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
    throw std::domain_error("repeated variable in square-free monomial");
  if (!support_.empty() && (support_.front() < 1 || support_.back() > ambient_))
    throw std::domain_error("monomial variable out of range");
}

MonomialStream::MonomialStream(int s, int t) : s_(s) {
  if (t < 1 || t > s) throw std::domain_error("monomial degree out of range");
  current_.resize(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) current_[static_cast<std::size_t>(i)] = i + 1;
}

std::optional<SquareFreeMonomial> MonomialStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    const int t = static_cast<int>(current_.size());
    int i = t - 1;
    while (i >= 0 && current_[static_cast<std::size_t>(i)] == s_ - t + 1 + i) --i;
    if (i < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++current_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      current_[static_cast<std::size_t>(j)] = current_[static_cast<std::size_t>(j - 1)] + 1;
  }
  started_ = true;
  return SquareFreeMonomial(s_, current_);
}

std::uint64_t MonomialStream::count(int s, int t) {
  if (t < 0 || t > s) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= t; ++i) c = c * static_cast<std::uint64_t>(s - t + i) / static_cast<std::uint64_t>(i);
  return c;
}

GeneratorBuilder::GeneratorBuilder(const BooleanFunction& f) : num_vars_(f.num_vars() + 1) {
  const std::size_t points = f.size();
  const std::size_t coeff_vectors = table_size(num_vars_);
  factors_.reserve(points);
  for (std::size_t x = 0; x < points; ++x) {
    BitVector values(coeff_vectors);
    for (std::size_t a = 0; a < coeff_vectors; ++a) {
      const bool affine_at_x = (a & 1U) ^ (std::popcount((a >> 1) & x) & 1);
      values.set(a, affine_at_x ^ f[x]);
    }
    factors_.push_back(std::move(values));
  }
}

F2Polynomial GeneratorBuilder::generator(std::span<const int> support) const {
  BitVector values = ~BitVector(table_size(num_vars_));
  for (int h : support) {
    if (h < 1 || static_cast<std::size_t>(h) > factors_.size()) throw std::domain_error("point index out of range");
    values &= factors_[static_cast<std::size_t>(h - 1)];
  }
  return {num_vars_, mobius(std::move(values))};
}

F2Polynomial GeneratorBuilder::generator(const SquareFreeMonomial& m) const {
  if (static_cast<std::size_t>(m.ambient()) != factors_.size())
    throw std::domain_error("monomial must range over all 2^n points");
  return generator(std::span<const int>(m.support()));
}

F2Polynomial simonetti_generator(const BooleanFunction& f, const SquareFreeMonomial& m) {
  return GeneratorBuilder(f).generator(m);
}

bool deglex_less(std::size_t lhs, std::size_t rhs) {
  const int dl = std::popcount(lhs);
  const int dr = std::popcount(rhs);
  return dl != dr ? dl < dr : lhs < rhs;
}

namespace {

std::size_t deglex_max(const BitVector& bits) {
  std::size_t best = bits.next_set(0);
  for (std::size_t u = bits.next_set(best + 1); u < bits.size(); u = bits.next_set(u + 1))
    if (deglex_less(best, u)) best = u;
  return best;
}

}  // namespace

LinearRep::LinearRep(int num_vars)
    : num_vars_(num_vars), alive_(~BitVector(table_size(num_vars))), rows_(table_size(num_vars)) {
  if (num_vars < 1) throw std::domain_error("linear representation needs at least one variable");
}

F2Polynomial LinearRep::reduce(const F2Polynomial& p) const {
  if (p.num_vars() != num_vars_) throw std::invalid_argument("polynomial over a different ring");
  if (trivial_) return F2Polynomial(num_vars_);
  F2Polynomial out(num_vars_, p.coeffs() & alive_);
  const BitVector dead = p.coeffs() & ~alive_;
  for (std::size_t u = dead.next_set(0); u < dead.size(); u = dead.next_set(u + 1)) out += rows_[u];
  return out;
}

void LinearRep::eliminate(const F2Polynomial& reduced) {
  const std::size_t pivot = deglex_max(reduced.coeffs());
  if (pivot == 0) {
    trivial_ = true;
    pending_.clear();
    pending_set_.clear();
    return;
  }
  ++counters_.eliminations;
  for (std::size_t q : eliminated_)
    if (rows_[q].coeff(pivot)) rows_[q] += reduced;
  rows_[pivot] = reduced;
  rows_[pivot].toggle(pivot);
  alive_.set(pivot, false);
  eliminated_.push_back(pivot);

  for (int h = 0; h < num_vars_; ++h) {
    F2Polynomial product = reduce(multiply_by_variable(reduced, h));
    ++counters_.products_reduced;
    if (product.is_zero()) continue;
    if (pending_set_.insert(product.coeffs()).second) pending_.push_back(std::move(product));
  }
}

bool LinearRep::absorb(const F2Polynomial& p) {
  if (trivial_) return false;
  F2Polynomial reduced = reduce(p);
  if (reduced.is_zero()) return false;
  eliminate(reduced);
  return true;
}

void LinearRep::drain() {
  while (!pending_.empty() && !trivial_) {
    F2Polynomial p = std::move(pending_.front());
    pending_.pop_front();
    pending_set_.erase(p.coeffs());
    absorb(p);
  }
}

void LinearRep::add_generator(const F2Polynomial& g) {
  if (trivial_) return;
  drain();
  ++counters_.generators_checked;
  if (absorb(g)) ++counters_.generators_sufficient;
  drain();
}

void LinearRep::enqueue(const F2Polynomial& g) {
  if (g.num_vars() != num_vars_) throw std::invalid_argument("polynomial over a different ring");
  if (trivial_) return;
  ++counters_.generators_checked;
  if (pending_set_.insert(g.coeffs()).second) pending_.push_back(g);
}

void LinearRep::close() { drain(); }

std::uint64_t LinearRep::solution_count() const {
  if (!pending_.empty()) throw std::logic_error("solution count requested before the pending queue was processed");
  return trivial_ ? 0 : alive_.popcount();
}

std::vector<std::size_t> LinearRep::escalier() const {
  std::vector<std::size_t> out;
  if (trivial_) return out;
  for (std::size_t u = alive_.next_set(0); u < alive_.size(); u = alive_.next_set(u + 1)) out.push_back(u);
  return out;
}

bool LinearRep::is_closed() const {
  if (trivial_) return true;
  for (std::size_t q : eliminated_) {
    F2Polynomial relation = rows_[q];
    relation.toggle(q);
    for (int h = 0; h < num_vars_; ++h)
      if (!reduce(multiply_by_variable(relation, h)).is_zero()) return false;
  }
  return true;
}

bool LinearRep::escalier_is_order_ideal() const {
  for (std::size_t b : escalier())
    for (std::size_t rest = b; rest; rest &= rest - 1)
      if (!alive_.get(b & ~(rest & (~rest + 1)))) return false;
  return true;
}

LinearRep solve_simonetti_system(const BooleanFunction& f, int t, bool early_exit) {
  if (t < 1 || static_cast<std::size_t>(t) > f.size()) throw std::domain_error("system index t out of range");
  const GeneratorBuilder builder(f);
  LinearRep rep(f.num_vars() + 1);
  MonomialStream stream(static_cast<int>(f.size()), t);
  while (auto m = stream.next()) {
    if (early_exit && rep.trivial()) break;
    rep.add_generator(builder.generator(*m));
  }
  return rep;
}

bool variety_empty_f2(const BooleanFunction& f, int t, SolverCounters* counters) {
  const LinearRep rep = solve_simonetti_system(f, t, true);
  if (counters) *counters = rep.counters();
  return rep.solution_count() == 0;
}

std::int64_t simonetti_nonlinearity(const BooleanFunction& f, SimonettiOptions options,
                                    std::vector<SimonettiTrace>* trace) {
  int j = 1;
  if (options.start_at_two_if_nonaffine && !is_affine(f)) j = 2;
  while (true) {
    SolverCounters counters;
    const bool empty = variety_empty_f2(f, j, &counters);
    if (trace) trace->push_back({j, empty, counters});
    if (!empty) return j - 1;
    ++j;
  }
}

F2Polynomial weight_ideal_normal_form(const F2Polynomial& p, int w) {
  if (w < 0 || w > p.num_vars()) throw std::domain_error("weight bound out of range");
  F2Polynomial out(p.num_vars());
  const auto& c = p.coeffs();
  for (std::size_t u = c.next_set(0); u < c.size(); u = c.next_set(u + 1))
    if (std::popcount(u) <= w) out.toggle(u);
  return out;
}

}  // namespace nltool
