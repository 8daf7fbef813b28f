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

#include "miptlab/gf2.hpp"

#include <algorithm>
#include <cassert>

namespace miptlab::gf2 {

void copy_bits(std::span<const uint64_t> src, int src_offset,
               std::span<uint64_t> dst, int dst_offset, int count) {
  assert(src_offset >= 0 && dst_offset >= 0 && count >= 0);
  if (count == 0) return;

  // Word-aligned fast path.
  if ((src_offset & 63) == 0 && (dst_offset & 63) == 0) {
    int sw = src_offset >> 6;
    int dw = dst_offset >> 6;
    int full = count >> 6;
    for (int i = 0; i < full; ++i) dst[dw + i] = src[sw + i];
    int rem = count & 63;
    if (rem) {
      const uint64_t mask = (uint64_t{1} << rem) - 1;
      dst[dw + full] = (dst[dw + full] & ~mask) | (src[sw + full] & mask);
    }
    return;
  }

  // Generic path: move whole destination words, reading two source words each.
  int done = 0;
  while (done < count) {
    int d = dst_offset + done;
    int dw = d >> 6;
    int dbit = d & 63;
    int chunk = std::min(64 - dbit, count - done);

    int s = src_offset + done;
    int sw = s >> 6;
    int sbit = s & 63;
    uint64_t bits = src[sw] >> sbit;
    if (sbit != 0 && sbit + chunk > 64) bits |= src[sw + 1] << (64 - sbit);

    const uint64_t mask =
        (chunk == 64) ? ~uint64_t{0} : ((uint64_t{1} << chunk) - 1);
    dst[dw] = (dst[dw] & ~(mask << dbit)) | ((bits & mask) << dbit);
    done += chunk;
  }
}

void BitMatrix::reset(int rows, int cols) {
  rows_ = rows;
  cols_ = cols;
  row_words_ = words_for_bits(cols);
  words_.assign(static_cast<size_t>(rows) * row_words_, 0);
}

int BitMatrix::rank_destructive() {
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    const int w = c >> 6;
    const uint64_t mask = uint64_t{1} << (c & 63);

    int pivot = -1;
    for (int i = r; i < rows_; ++i) {
      if (words_[static_cast<size_t>(i) * row_words_ + w] & mask) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;

    // Rows >= r are zero left of column c, so only words from w onward matter.
    uint64_t* prow = words_.data() + static_cast<size_t>(pivot) * row_words_;
    uint64_t* rrow = words_.data() + static_cast<size_t>(r) * row_words_;
    if (pivot != r) std::swap_ranges(prow + w, prow + row_words_, rrow + w);

    for (int i = r + 1; i < rows_; ++i) {
      uint64_t* irow = words_.data() + static_cast<size_t>(i) * row_words_;
      if (irow[w] & mask) {
        for (int j = w; j < row_words_; ++j) irow[j] ^= rrow[j];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace miptlab::gf2
