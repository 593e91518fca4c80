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


#include "nltool/polynomial.hpp"

namespace nltool {

F2Polynomial multiply(const F2Polynomial& lhs, const F2Polynomial& rhs) {
  if (lhs.num_vars() != rhs.num_vars()) throw std::invalid_argument("polynomials over different rings");
  F2Polynomial out(lhs.num_vars());
  const auto& a = lhs.coeffs();
  const auto& b = rhs.coeffs();
  for (std::size_t u = a.next_set(0); u < a.size(); u = a.next_set(u + 1))
    for (std::size_t v = b.next_set(0); v < b.size(); v = b.next_set(v + 1)) out.toggle(u | v);
  return out;
}

F2Polynomial multiply_by_variable(const F2Polynomial& p, int h) {
  if (h < 0 || h >= p.num_vars()) throw std::domain_error("variable index out of range");
  F2Polynomial out = p;
  auto& words = out.coeffs().words();
  if (h < 6) {
    // monomials without x_h move up by 2^h; monomials with x_h stay
    const unsigned shift = 1U << h;
    for (auto& w : words) w = (w & ~kLowHalfMask[h]) ^ ((w & kLowHalfMask[h]) << shift);
  } else {
    const std::size_t stride = std::size_t{1} << (h - 6);
    for (std::size_t block = 0; block < words.size(); block += 2 * stride)
      for (std::size_t i = block; i < block + stride; ++i) {
        words[i + stride] ^= words[i];
        words[i] = 0;
      }
  }
  return out;
}

}  // namespace nltool
