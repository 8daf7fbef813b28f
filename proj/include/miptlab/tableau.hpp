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
#include <string>
#include <vector>

#include "miptlab/clifford.hpp"
#include "miptlab/rng.hpp"

namespace miptlab {

struct MeasurementResult {
  int outcome;         // +1 or -1
  bool deterministic;  // false = Born-rule coin flip happened
};

/// A gate placed on two distinct sites. `a` is the gate's first site and
/// `b` its second (the roles matter: the gate's Pauli coordinates
/// distinguish the two sites).
struct PlacedGate {
  CliffordGate2 gate;
  int a;
  int b;
};

/// Binary-symplectic tableau of an n-qubit pure stabilizer state:
/// rows 0..n-1 are destabilizers, rows n..2n-1 stabilizers. Each row stores
/// packed x bits, packed z bits and one sign bit (Hermitian convention:
/// (x,z)=(1,1) on a site is Y). Rows are bit-packed into 64-bit words so
/// that row products and rank computations are word-parallel.
class StabilizerTableau {
 public:
  /// |0...0>: destabilizers X_i, stabilizers Z_i, all signs +.
  static StabilizerTableau product_state(int n);

  int num_qubits() const { return n_; }
  int words_per_part() const { return words_; }

  bool x_bit(int row, int site) const {
    return (bits_[word_index(row, 0, site >> 6)] >> (site & 63)) & 1u;
  }
  bool z_bit(int row, int site) const {
    return (bits_[word_index(row, 1, site >> 6)] >> (site & 63)) & 1u;
  }
  bool sign_bit(int row) const { return signs_[row] != 0; }

  std::span<const uint64_t> x_words(int row) const {
    return {bits_.data() + static_cast<size_t>(row) * 2 * words_,
            static_cast<size_t>(words_)};
  }
  std::span<const uint64_t> z_words(int row) const {
    return {bits_.data() + static_cast<size_t>(row) * 2 * words_ + words_,
            static_cast<size_t>(words_)};
  }

  /// Conjugates every row by the gate acting on sites (a, b).
  /// Throws on equal or out-of-range sites and on non-symplectic gates.
  void apply_clifford2(const CliffordGate2& gate, int a, int b);

  /// Applies a set of gates acting on pairwise-disjoint site pairs;
  /// equivalent to applying them one by one in any order. Gates on
  /// word-aligned adjacent pairs (b == a+1 within one 64-bit word) are
  /// executed with a bit-sliced kernel, one pass over the tableau.
  void apply_disjoint_gates(std::span<const PlacedGate> gates);

  /// Z measurement at `site` with Born-rule outcome drawn from `rng` when
  /// the outcome is random; the standard destabilizer bookkeeping makes
  /// deterministic outcomes O(n^2 / w) without touching the state.
  MeasurementResult measure_z(int site, TrajectoryRng& rng);

  /// Full invariant check (commutation pattern and GF(2) full rank);
  /// O(n^2) words, intended for tests and debugging.
  bool validate() const;

  /// One row per line, leading sign then {I,X,Y,Z} per site; destabilizer
  /// rows first, then stabilizer rows.
  std::string to_string() const;

  friend bool operator==(const StabilizerTableau& a,
                         const StabilizerTableau& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && a.signs_ == b.signs_;
  }

 private:
  explicit StabilizerTableau(int n);

  size_t word_index(int row, int part, int w) const {
    return (static_cast<size_t>(row) * 2 + part) * words_ + w;
  }
  uint64_t* row_ptr(int row) {
    return bits_.data() + static_cast<size_t>(row) * 2 * words_;
  }
  const uint64_t* row_ptr(int row) const {
    return bits_.data() + static_cast<size_t>(row) * 2 * words_;
  }

  // dst *= src as Pauli operators (dst <- src * dst), with or without
  // sign bookkeeping (destabilizer signs are never observable).
  void multiply_row_into(int src, uint64_t* dst, uint8_t* dst_sign) const;

  void apply_gate_rows(const CliffordGate2::Table& table, int a, int b);

  bool rows_anticommute(int r1, int r2) const;

  int n_ = 0;
  int words_ = 0;               // words per x (or z) part
  std::vector<uint64_t> bits_;  // row-major, stride 2*words_: x part, z part
  std::vector<uint8_t> signs_;  // 2n entries, 1 = minus
  std::vector<uint64_t> scratch_;  // one row, deterministic-measurement use
};

}  // namespace miptlab
