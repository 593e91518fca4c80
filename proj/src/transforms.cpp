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


#include "nltool/transforms.hpp"

namespace nltool {

BitVector mobius(BitVector bits) {
  const int m = log2_exact(bits.size());
  auto& words = bits.words();
  for (int h = 0; h < m && h < 6; ++h) {
    const unsigned shift = 1U << h;
    for (auto& w : words) w ^= (w & kLowHalfMask[h]) << shift;
  }
  for (int h = 6; h < m; ++h) {
    const std::size_t stride = std::size_t{1} << (h - 6);
    for (std::size_t block = 0; block < words.size(); block += 2 * stride)
      for (std::size_t i = block; i < block + stride; ++i) words[i + stride] ^= words[i];
  }
  return bits;
}

IntVector to_integer_values(const BooleanFunction& f) {
  IntVector values(static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) values(static_cast<Eigen::Index>(i)) = f[i] ? 1 : 0;
  return values;
}

WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
  WalshSpectrum spectrum(static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) spectrum(static_cast<Eigen::Index>(i)) = f[i] ? -1 : 1;
  walsh_inplace(spectrum);
  return spectrum;
}

std::int64_t nonlinearity_fwt(const BooleanFunction& f) {
  const std::int64_t half = static_cast<std::int64_t>(f.size() / 2);
  return half - walsh_spectrum(f).cwiseAbs().maxCoeff() / 2;
}

}  // namespace nltool
