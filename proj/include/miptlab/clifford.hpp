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

#include <array>
#include <cstdint>

#include "miptlab/rng.hpp"

namespace miptlab {

/// Symplectic coordinates of a two-site Pauli, 4 bits:
///   bit 0 = x on the first site   (X1)
///   bit 1 = x on the second site  (X2)
///   bit 2 = z on the first site   (Z1)
///   bit 3 = z on the second site  (Z2)
/// The Hermitian convention is used throughout: bits (x,z)=(1,1) on a site
/// mean Y, and a separate sign bit tracks the overall +/-.
using PauliBits = uint8_t;

inline constexpr PauliBits kPauliX1 = 0b0001;
inline constexpr PauliBits kPauliX2 = 0b0010;
inline constexpr PauliBits kPauliZ1 = 0b0100;
inline constexpr PauliBits kPauliZ2 = 0b1000;

/// 1 iff the two Paulis anticommute.
inline bool symplectic_product(PauliBits u, PauliBits v) {
  const uint32_t t = (u & (v >> 2)) ^ (v & (u >> 2));
  return ((t ^ (t >> 1)) & 1) != 0;
}

struct PauliImage {
  PauliBits bits;
  bool negative;  // true = overall sign -1
};

/// A two-qubit Clifford element modulo global phase: a 4x4 binary symplectic
/// matrix (columns = images of X1, X2, Z1, Z2) plus one sign bit per
/// generator image. Internally the whole conjugation action is tabulated:
/// 16 entries mapping an input Pauli to its image and sign flip.
class CliffordGate2 {
 public:
  /// Table entry encoding: bits 0..3 image Pauli, bit 4 sign flip.
  using Table = std::array<uint8_t, 16>;

  static CliffordGate2 identity();

  /// Builds a gate from generator images. `columns[j]` is the image of the
  /// j-th generator in the order X1, X2, Z1, Z2; bit j of phase_bits is 1
  /// when that image carries a minus sign. Throws std::invalid_argument if
  /// the columns do not form a symplectic matrix.
  static CliffordGate2 from_images(const std::array<PauliBits, 4>& columns,
                                   uint8_t phase_bits);

  /// Conjugation image of an arbitrary signed two-site Pauli.
  PauliImage image(PauliBits p, bool negative) const {
    const uint8_t e = table_[p & 0xF];
    return {static_cast<PauliBits>(e & 0xF), negative != ((e & 0x10) != 0)};
  }

  const Table& table() const { return table_; }

  std::array<PauliBits, 4> columns() const;
  uint8_t phase_bits() const;

  /// Checks S^T Λ S = Λ (and hence invertibility) of the symplectic part.
  bool is_symplectic() const;

  friend bool operator==(const CliffordGate2& a, const CliffordGate2& b) {
    return a.table_ == b.table_;
  }

 private:
  CliffordGate2() = default;
  Table table_{};
};

/// Applying g1 then g2.
CliffordGate2 compose(const CliffordGate2& g1, const CliffordGate2& g2);

CliffordGate2 inverse(const CliffordGate2& g);

/// Uniform sample from the full two-qubit Clifford group modulo global
/// phase: the symplectic part is exactly uniform over the 720 elements of
/// Sp(4,2) (built row by row: X1 image uniform over the 15 nonidentity
/// Paulis, Z1 image uniform over the 8 that anticommute with it, then the
/// same construction inside the 2-dimensional symplectic complement), and
/// the 4 sign bits are independent fair coins: 720 x 16 = 11520 classes.
CliffordGate2 sample_clifford2(TrajectoryRng& rng);

/// Index-driven form of the sampler used by exhaustive enumeration:
/// i < 15, j < 8, k < 3, l < 2 select the symplectic part canonically.
CliffordGate2 clifford2_from_indices(uint32_t i, uint32_t j, uint32_t k,
                                     uint32_t l, uint8_t phase_bits);

}  // namespace miptlab
