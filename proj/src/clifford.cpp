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

#include "miptlab/clifford.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace miptlab {

namespace {

// Number of sites carrying Y, i.e. x and z both set.
inline int y_count(PauliBits p) { return std::popcount(unsigned(p & (p >> 2) & 0b11)); }

// Sites where u has a Z and v has an X; reordering Z^u past X^v costs a
// sign per such site.
inline int zx_crossings(PauliBits u, PauliBits v) {
  return std::popcount(unsigned((u >> 2) & v & 0b11));
}

// A signed two-site Pauli in "XZ product" form: operator = i^phase *
// prod_s X^x Z^z. Multiplication is exact in this form; conversion to the
// Hermitian (Y = iXZ) convention adds/removes i per Y site.
struct XzRep {
  PauliBits bits = 0;
  int phase = 0;  // exponent of i, mod 4

  void multiply_right(const XzRep& o) {
    phase = (phase + o.phase + 2 * zx_crossings(bits, o.bits)) & 3;
    bits ^= o.bits;
  }
};

XzRep to_xz(PauliBits bits, bool negative) {
  return {bits, ((negative ? 2 : 0) + y_count(bits)) & 3};
}

PauliImage from_xz(const XzRep& r) {
  const int ph = (r.phase - y_count(r.bits)) & 3;
  assert((ph & 1) == 0);  // valid Clifford images of Hermitian Paulis are real
  return {r.bits, ph == 2};
}

uint8_t encode(const PauliImage& im) {
  return static_cast<uint8_t>(im.bits | (im.negative ? 0x10 : 0));
}

// Generator application order when expanding a Pauli into generators:
// X1, Z1 on the first site, then X2, Z2 on the second.
constexpr int kExpandOrder[4] = {0, 2, 1, 3};  // generator index in column order
constexpr PauliBits kGenBits[4] = {kPauliX1, kPauliX2, kPauliZ1, kPauliZ2};

}  // namespace

CliffordGate2 CliffordGate2::identity() {
  CliffordGate2 g;
  for (int v = 0; v < 16; ++v) g.table_[v] = static_cast<uint8_t>(v);
  return g;
}

CliffordGate2 CliffordGate2::from_images(
    const std::array<PauliBits, 4>& columns, uint8_t phase_bits) {
  // Symplectic check: generator pairs (X1,Z1) and (X2,Z2) anticommute,
  // every other pair commutes; this is exactly S^T Λ S = Λ.
  for (int a = 0; a < 4; ++a) {
    if (columns[a] == 0 || columns[a] > 0xF)
      throw std::invalid_argument("clifford image column out of range");
    for (int b = a + 1; b < 4; ++b) {
      const bool want = symplectic_product(kGenBits[a], kGenBits[b]);
      if (symplectic_product(columns[a], columns[b]) != want)
        throw std::invalid_argument("gate images violate the symplectic form");
    }
  }

  CliffordGate2 g;
  g.table_[0] = 0;
  for (int v = 1; v < 16; ++v) {
    XzRep acc = to_xz(0, false);
    for (int gen : kExpandOrder) {
      if (v & kGenBits[gen])
        acc.multiply_right(to_xz(columns[gen], (phase_bits >> gen) & 1));
    }
    acc.phase = (acc.phase + y_count(static_cast<PauliBits>(v))) & 3;
    g.table_[v] = encode(from_xz(acc));
  }
  return g;
}

std::array<PauliBits, 4> CliffordGate2::columns() const {
  return {static_cast<PauliBits>(table_[kPauliX1] & 0xF),
          static_cast<PauliBits>(table_[kPauliX2] & 0xF),
          static_cast<PauliBits>(table_[kPauliZ1] & 0xF),
          static_cast<PauliBits>(table_[kPauliZ2] & 0xF)};
}

uint8_t CliffordGate2::phase_bits() const {
  uint8_t out = 0;
  const PauliBits gens[4] = {kPauliX1, kPauliX2, kPauliZ1, kPauliZ2};
  for (int j = 0; j < 4; ++j)
    if (table_[gens[j]] & 0x10) out |= uint8_t(1) << j;
  return out;
}

bool CliffordGate2::is_symplectic() const {
  const auto cols = columns();
  for (int a = 0; a < 4; ++a) {
    if (cols[a] == 0) return false;
    for (int b = a + 1; b < 4; ++b) {
      const bool want = symplectic_product(kGenBits[a], kGenBits[b]);
      if (symplectic_product(cols[a], cols[b]) != want) return false;
    }
  }
  return true;
}

CliffordGate2 compose(const CliffordGate2& g1, const CliffordGate2& g2) {
  std::array<PauliBits, 4> cols;
  uint8_t phases = 0;
  const PauliBits gens[4] = {kPauliX1, kPauliX2, kPauliZ1, kPauliZ2};
  for (int j = 0; j < 4; ++j) {
    const PauliImage first = g1.image(gens[j], false);
    const PauliImage second = g2.image(first.bits, first.negative);
    cols[j] = second.bits;
    if (second.negative) phases |= uint8_t(1) << j;
  }
  return CliffordGate2::from_images(cols, phases);
}

CliffordGate2 inverse(const CliffordGate2& g) {
  std::array<PauliBits, 4> cols{};
  uint8_t phases = 0;
  const PauliBits gens[4] = {kPauliX1, kPauliX2, kPauliZ1, kPauliZ2};
  for (int j = 0; j < 4; ++j) {
    for (PauliBits v = 1; v < 16; ++v) {
      const PauliImage im = g.image(v, false);
      if (im.bits == gens[j]) {
        cols[j] = v;
        if (im.negative) phases |= uint8_t(1) << j;
        break;
      }
    }
  }
  return CliffordGate2::from_images(cols, phases);
}

CliffordGate2 clifford2_from_indices(uint32_t i, uint32_t j, uint32_t k,
                                     uint32_t l, uint8_t phase_bits) {
  assert(i < 15 && j < 8 && k < 3 && l < 2);

  // Image of X1: the i-th nonidentity Pauli.
  const auto x1 = static_cast<PauliBits>(i + 1);

  // Image of Z1: the j-th Pauli anticommuting with x1 (8 of them).
  PauliBits z1 = 0;
  for (PauliBits v = 1, seen = 0; v < 16; ++v) {
    if (symplectic_product(x1, v)) {
      if (seen == j) {
        z1 = v;
        break;
      }
      ++seen;
    }
  }

  // Symplectic complement of span{x1, z1}: the vectors commuting with both.
  // It is 2-dimensional; its 3 nonidentity elements pairwise anticommute.
  PauliBits comp[3];
  int found = 0;
  for (PauliBits v = 1; v < 16; ++v) {
    if (!symplectic_product(x1, v) && !symplectic_product(z1, v)) {
      assert(found < 3);
      comp[found++] = v;
    }
  }
  assert(found == 3);

  const PauliBits x2 = comp[k];
  PauliBits z2 = 0;
  for (int m = 0, seen = 0; m < 3; ++m) {
    if (comp[m] == x2) continue;
    if (seen == static_cast<int>(l)) {
      z2 = comp[m];
      break;
    }
    ++seen;
  }

  return CliffordGate2::from_images({x1, x2, z1, z2}, phase_bits);
}

CliffordGate2 sample_clifford2(TrajectoryRng& rng) {
  const uint32_t i = rng.uniform_below(15);
  const uint32_t j = rng.uniform_below(8);
  const uint32_t k = rng.uniform_below(3);
  const uint32_t l = rng.uniform_below(2);
  const auto phase_bits = static_cast<uint8_t>(rng.next_u64() & 0xF);
  return clifford2_from_indices(i, j, k, l, phase_bits);
}

}  // namespace miptlab
