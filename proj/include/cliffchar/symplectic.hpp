// Copyright 2025 The cliffchar authors
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

#ifndef CLIFFCHAR_SYMPLECTIC_HPP
#define CLIFFCHAR_SYMPLECTIC_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "cliffchar/bitvec.hpp"
#include "cliffchar/group.hpp"
#include "cliffchar/rational.hpp"

namespace cliffchar {

// ---------------------------------------------------------------------------
// The symplectic group Sp(2n, 2): membership, transvection generators,
// enumeration at desk scale, the order formula, and the mod-4 lift.
// ---------------------------------------------------------------------------

/// A 2n x 2n bit matrix with Gamma^T J Gamma = J over GF(2). The wrapper does
/// not re-validate on every operation; use is_symplectic / checked() at API
/// boundaries and keep closure by construction inside group ops.
struct SympMatrix {
  BitMat mat;

  static SympMatrix identity(std::size_t n) {
    return SympMatrix{BitMat::identity(2 * n)};
  }
  /// Validates and wraps. Throws std::invalid_argument if not symplectic.
  static SympMatrix checked(BitMat m);

  std::size_t num_qubits() const { return mat.rows() / 2; }
  bool operator==(const SympMatrix& other) const = default;
};

/// True iff A is square, of even dimension, and A^T J A = J mod 2.
bool is_symplectic(const BitMat& a);

/// Symplectic transvection T_v: x -> x + [x, v] v.
SympMatrix transvection(const BitVec& v);

/// Transvections for all nonzero v: a standard generating set of Sp(2n, 2).
std::vector<SympMatrix> transvection_generators(std::size_t n);

/// |Sp(2n,2)| = 2^{n^2} prod_{j=1}^{n} (2^{2j} - 1), exact.
BigInt sp_order(std::size_t n);

// Packing: row-major, row r occupies bits [r*2n, (r+1)*2n). Fits 64 bits for
// n <= 4.
std::uint64_t pack_symp(const SympMatrix& m);
SympMatrix unpack_symp(std::uint64_t packed, std::size_t n);

/// Group arithmetic on packed symplectic matrices.
class SympOps final : public GroupOps {
 public:
  explicit SympOps(std::size_t n);
  std::uint64_t identity() const override;
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t inverse(std::uint64_t a) const override;
  std::string describe() const override;
  std::size_t num_qubits() const { return n_; }

 private:
  std::size_t n_;
};

/// Enumerates Sp(2n,2) by BFS over transvections and computes its classes.
/// Desk scale: n <= 2 unless the caller raises the budget.
GroupEnumeration enumerate_sp(std::size_t n, const ClosureBudget& budget = {},
                              ExecPolicy policy = ExecPolicy::kSerial);

// ---------------------------------------------------------------------------
// Mod-4 lift. Entries in Z4, stored densely (dimensions are tiny).
// ---------------------------------------------------------------------------
struct Z4SympMatrix {
  std::size_t dim = 0;
  std::vector<std::uint8_t> entries;  // row-major, each mod 4

  std::uint8_t get(std::size_t r, std::size_t c) const {
    return entries.at(r * dim + c);
  }
  void set(std::size_t r, std::size_t c, std::uint8_t v) {
    entries.at(r * dim + c) = v & 3;
  }
  Z4Vec column(std::size_t c) const;
  BitMat reduce_mod2() const;
};

/// True iff Gamma^T J Gamma = J mod 4 (J entries +-1 over Z4).
bool is_symplectic_mod4(const Z4SympMatrix& m);

/// Lifts a mod-2 symplectic matrix to a mod-4 symplectic one, column by
/// column: each column j receives a correction 2 x_j where x_j solves a GF(2)
/// linear system expressing [v_j, vbar_j] = 0 mod 4 and [vbar_h, vbar_j] =
/// J_{hj} mod 4 against the already-fixed columns h < j. Among valid
/// corrections the lexicographically smallest is taken, so the lift is
/// deterministic. Throws std::logic_error if a system is inconsistent.
Z4SympMatrix lift_to_z4(const SympMatrix& gamma);

}  // namespace cliffchar

#endif  // CLIFFCHAR_SYMPLECTIC_HPP
