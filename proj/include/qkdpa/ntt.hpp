// Copyright 2026 The qkdpa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Schönhage–Strassen multiplication over the Fermat-style ring
// Z/(2^ring_bits + 1):
//
//   zero-fill -> split -> forward NTT -> pointwise -> inverse NTT ->
//   combine -> carry
//
// Operands are zero-filled to 2N bits and cut into 2^k pieces of M bits, so
// the length-2^k cyclic convolution never wraps. The root of unity is a power
// of two, which turns every twiddle multiplication into a shift.

#pragma once

#include <cstddef>
#include <vector>

#include "qkdpa/bignum.hpp"

namespace qkdpa {

struct SsaPlan {
  std::size_t n_bits = 0;     ///< N: operand capacity after zero fill
  unsigned k = 0;             ///< 2^k pieces
  std::size_t piece_bits = 0; ///< M = 2N / 2^k
  std::size_t ring_bits = 0;  ///< N': pointwise width

  std::size_t pieces() const { return std::size_t{1} << k; }
  /// Limbs of a ring element: ring_bits / 64 plus one for the value 2^N'.
  std::size_t element_limbs() const { return ring_bits / kLimbBits + 1; }
  bool valid() const;
};

/// Chooses k with a cost model over transform and pointwise work.
SsaPlan make_plan(std::size_t n_bits);
/// Plan with an explicit split exponent.
SsaPlan make_plan(std::size_t n_bits, unsigned k);

/// Residue of Z/(2^ring_bits + 1), held in [0, 2^ring_bits].
class RingElement {
 public:
  RingElement() = default;
  /// Zero in the ring of `plan`.
  explicit RingElement(const SsaPlan& plan);
  /// Reduces `value` into the ring of `plan`.
  RingElement(const BigNat& value, const SsaPlan& plan);

  BigNat value() const;
  std::span<const Limb> limbs() const { return limbs_; }
  std::span<Limb> limbs() { return limbs_; }
  /// Residue range and width invariant.
  bool in_range(std::size_t ring_bits) const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::vector<Limb> limbs_;
};

using RingVector = std::vector<RingElement>;

/// 2^k pieces of M bits, least significant first. Throws SizeError when
/// a has more than plan.n_bits bits.
RingVector split(const BigNat& a, const SsaPlan& plan);

/// Natural-order transform X_j = sum_i x_i w^(ij) with w = 2^(2N'/2^k).
RingVector forward_ntt(RingVector v, const SsaPlan& plan);

/// Inverse of forward_ntt including the 2^-k normalisation.
RingVector inverse_ntt(RingVector v, const SsaPlan& plan);

/// Elementwise ring product; each product goes through the Auto dispatcher.
RingVector pointwise_mul(const RingVector& u, const RingVector& v,
                         const SsaPlan& plan,
                         const ThresholdTable& thresholds = {});

/// sum_j pieces[j] * 2^(j*M) with full carry propagation.
BigNat combine_and_carry(const RingVector& pieces, const SsaPlan& plan);

/// a * b through the full pipeline.
BigNat ssa_multiply(const BigNat& a, const BigNat& b,
                    const ThresholdTable& thresholds = {});

}  // namespace qkdpa
