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

#pragma once

#include <cstddef>
#include <vector>

#include "qkdpa/bignum.hpp"
#include "qkdpa/detail/limb_kernels.hpp"

namespace qkdpa::detail {

// Arithmetic in Z/(2^bits + 1) on fixed-width residues of n + 1 limbs,
// n = bits / 64. Every operation takes normalised inputs in [0, 2^bits] and
// produces a normalised output; outputs may alias inputs.
class FermatRing {
 public:
  explicit FermatRing(std::size_t bits);

  std::size_t bits() const { return bits_; }
  std::size_t limbs() const { return n_ + 1; }

  void add(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b) const;
  void sub(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b) const;
  void negate(LimbSpan r) const;
  /// r = a * 2^e for any e >= 0.
  void mul_2exp(LimbSpan r, ConstLimbSpan a, std::size_t e) const;
  /// r = a * b; the product of the low parts goes through mul_dispatch.
  void mul(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
           const ThresholdTable& t) const;
  /// r = wide mod (2^bits + 1) for a value of any length.
  void reduce(LimbSpan r, ConstLimbSpan wide) const;

 private:
  // r = lo - hi mod F for lo, hi < 2^bits given as n-limb spans.
  void fold(LimbSpan r, ConstLimbSpan lo, ConstLimbSpan hi) const;

  std::size_t bits_;
  std::size_t n_;
  std::vector<Limb> modulus_;
  mutable std::vector<Limb> scratch_;
};

}  // namespace qkdpa::detail
