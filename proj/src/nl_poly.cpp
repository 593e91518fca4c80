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
#include <bit>

#include "nltool/transforms.hpp"

namespace nltool {

NlPolynomial build_nl_poly(const BooleanFunction& f, BuildCounters* counters) {
  const int n = f.num_vars();
  const Eigen::Index half = static_cast<Eigen::Index>(f.size());
  const std::int64_t full = static_cast<std::int64_t>(f.size());
  BuildCounters local;

  IntVector scaled = to_integer_values(f);
  butterfly(scaled, [&local](auto& lo, auto& hi) {
    lo += hi;
    hi = -(hi + hi);
    ++local.sums;
    ++local.doublings;
  });

  IntVector coeffs(2 * half);
  const std::int64_t mid = full / 2;
  for (Eigen::Index u = 0; u < half; ++u) {
    std::int64_t c = scaled(u);
    if (u != 0) {
      c += (std::popcount(static_cast<std::uint64_t>(u)) & 1) ? mid : -mid;
      ++local.sums;
    }
    coeffs(2 * u) = c;
    coeffs(2 * u + 1) = -(c + c);
    ++local.doublings;
  }
  coeffs(1) += full;
  ++local.sums;

  if (counters) *counters = local;
  return {n, IntPolynomial(n + 1, std::move(coeffs))};
}

IntVector nl_evaluations(const NlPolynomial& p) { return evaluations_from_nnf(p.poly); }

std::int64_t nonlinearity_nnf(const BooleanFunction& f) {
  if (is_affine(f)) return 0;
  return nl_evaluations(build_nl_poly(f)).minCoeff();
}

bool variety_nonempty_q(const IntVector& evaluations, std::int64_t t) { return (evaluations.array() == t).any(); }

bool variety_nonempty_q(const BooleanFunction& f, std::int64_t t) {
  if (t < 0) throw std::domain_error("distance target must be nonnegative");
  return variety_nonempty_q(nl_evaluations(build_nl_poly(f)), t);
}

std::int64_t nonlinearity_q_loop(const BooleanFunction& f, std::vector<std::int64_t>* tested) {
  const IntVector evaluations = nl_evaluations(build_nl_poly(f));
  // starts at 0 so affine inputs report 0
  std::int64_t j = 0;
  while (true) {
    if (tested) tested->push_back(j);
    if (variety_nonempty_q(evaluations, j)) return j;
    ++j;
  }
}

std::vector<std::int64_t> distance_spectrum(const BooleanFunction& f) {
  const IntVector evaluations = nl_evaluations(build_nl_poly(f));
  std::vector<std::int64_t> values(evaluations.begin(), evaluations.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace nltool
