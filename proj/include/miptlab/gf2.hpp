// Copyright 2026 The miptlab Authors
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
#include <span>
#include <vector>

namespace miptlab::gf2 {

inline constexpr int kWordBits = 64;

constexpr int words_for_bits(int nbits) {
  return (nbits + kWordBits - 1) / kWordBits;
}

inline bool get_bit(std::span<const uint64_t> words, int i) {
  return (words[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(std::span<uint64_t> words, int i, bool v) {
  const uint64_t mask = uint64_t{1} << (i & 63);
  uint64_t& w = words[static_cast<size_t>(i) >> 6];
  w = v ? (w | mask) : (w & ~mask);
}

inline void flip_bit(std::span<uint64_t> words, int i) {
  words[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63);
}

/// Copies `count` bits from src (starting at bit src_offset) into dst
/// (starting at bit dst_offset). Ranges may be unaligned; dst bits outside
/// the target range are preserved.
void copy_bits(std::span<const uint64_t> src, int src_offset,
               std::span<uint64_t> dst, int dst_offset, int count);

/// Row-major bit matrix packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols) { reset(rows, cols); }

  /// Resizes and zero-fills.
  void reset(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int row_words() const { return row_words_; }

  std::span<uint64_t> row(int r) {
    return {words_.data() + static_cast<size_t>(r) * row_words_,
            static_cast<size_t>(row_words_)};
  }
  std::span<const uint64_t> row(int r) const {
    return {words_.data() + static_cast<size_t>(r) * row_words_,
            static_cast<size_t>(row_words_)};
  }

  bool get(int r, int c) const { return get_bit(row(r), c); }
  void set(int r, int c, bool v) { set_bit(row(r), c, v); }

  /// Rank over GF(2) by in-place row echelon reduction (word-parallel XOR).
  /// The matrix contents are destroyed.
  int rank_destructive();

 private:
  int rows_ = 0;
  int cols_ = 0;
  int row_words_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace miptlab::gf2
