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

#include <bit>
#include <cstdint>
#include <random>

namespace miptlab {

inline constexpr uint64_t splitmix64_next(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Derives a well-mixed stream seed from (master seed, stream index).
inline constexpr uint64_t derive_stream_seed(uint64_t master, uint64_t index) {
  uint64_t s = master;
  uint64_t a = splitmix64_next(s);
  s ^= index;
  uint64_t b = splitmix64_next(s);
  return a ^ b;
}

/// Per-trajectory random stream. Each trajectory owns one stream derived
/// from (master seed, trajectory index), so ensembles are reproducible
/// bit-for-bit regardless of worker count or scheduling.
///
/// All draws go through raw 64-bit outputs of std::mt19937_64 (whose output
/// sequence is fixed by the standard); no std::*_distribution is used, so
/// results are identical across standard library implementations.
class TrajectoryRng {
 public:
  TrajectoryRng(uint64_t master_seed, uint64_t stream_index)
      : engine_(derive_stream_seed(master_seed, stream_index)) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// True with probability p (one draw consumed, always).
  bool coin(double p) { return next_unit() < p; }

  /// Single random bit.
  bool bit() { return next_u64() >> 63; }

  /// Exactly uniform integer in [0, n), n >= 1, by bit-mask rejection.
  uint32_t uniform_below(uint32_t n) {
    if (n <= 1) return 0;
    const uint32_t mask = std::bit_ceil(n) - 1;
    for (;;) {
      const auto v = static_cast<uint32_t>(next_u64()) & mask;
      if (v < n) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace miptlab
