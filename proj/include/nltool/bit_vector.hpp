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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nltool {

// Packed bit vector whose length is a power of two. Used both for truth
// tables (index = point) and for F2 multilinear coefficient vectors
// (index = monomial mask). Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector from_bits(const std::vector<int>& bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t popcount() const;
  bool none() const;
  bool any() const { return !none(); }

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t next_set(std::size_t from) const;

  BitVector& operator^=(const BitVector& rhs);
  BitVector& operator&=(const BitVector& rhs);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  BitVector operator~() const;

  bool operator==(const BitVector& rhs) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  std::size_t hash() const;

 private:
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Word masks selecting the in-word bit positions whose index has bit `h`
// clear, for h < 6.
inline constexpr std::uint64_t kLowHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

}  // namespace nltool

template <>
struct std::hash<nltool::BitVector> {
  std::size_t operator()(const nltool::BitVector& v) const noexcept { return v.hash(); }
};
