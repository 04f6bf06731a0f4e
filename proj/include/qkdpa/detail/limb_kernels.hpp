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

// Limb-level kernels shared by the multiplication algorithms and the
// Fermat-ring transform. Spans are little-endian limb arrays; operands may
// carry leading zero limbs.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qkdpa/bignum.hpp"

namespace qkdpa::detail {

using LimbSpan = std::span<Limb>;
using ConstLimbSpan = std::span<const Limb>;

/// r = a + b, r.size() == a.size() >= b.size(). Returns carry out.
Limb add_n(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b);

/// r += a, a.size() <= r.size(); carry rippled through r. Returns carry out.
Limb add_into(LimbSpan r, ConstLimbSpan a);

/// r += v at limb 0, rippled. Returns carry out.
Limb add_1(LimbSpan r, Limb v);

/// r = a - b, r.size() == a.size() >= b.size(). Returns borrow out.
Limb sub_n(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b);

/// r -= a, a.size() <= r.size(). Returns borrow out.
Limb sub_into(LimbSpan r, ConstLimbSpan a);

/// r -= v at limb 0, rippled. Returns borrow out.
Limb sub_1(LimbSpan r, Limb v);

/// r[0..a.size()) += a * m. Returns the carry limb.
Limb addmul_1(LimbSpan r, ConstLimbSpan a, Limb m);

/// r = a << bits, 0 <= bits < 64, r.size() == a.size(). Returns shifted-out.
Limb lshift(LimbSpan r, ConstLimbSpan a, unsigned bits);

/// r = a >> bits, 0 <= bits < 64, r.size() == a.size(). Returns shifted-out
/// bits in the high end of the returned limb.
Limb rshift(LimbSpan r, ConstLimbSpan a, unsigned bits);

/// Three-way compare of equal-length spans.
int compare_n(ConstLimbSpan a, ConstLimbSpan b);

/// Length without leading zero limbs.
std::size_t normalized_size(ConstLimbSpan a);

bool is_zero(ConstLimbSpan a);

/// Writes bits [bit_offset, bit_offset + dst.size()*64) of src into dst,
/// masked to nbits; bits beyond src read as zero.
void extract_bits(LimbSpan dst, ConstLimbSpan src, std::size_t bit_offset,
                  std::size_t nbits);

/// r = a * b by the row-by-row method. r.size() == a.size() + b.size().
void mul_schoolbook(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b);

void mul_karatsuba(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
                   MulAlgorithm recurse, const ThresholdTable& t);

void mul_toom3(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
               MulAlgorithm recurse, const ThresholdTable& t);

void mul_ssa(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
             const ThresholdTable& t);

/// r = a * b using `alg`; Auto selects by the larger operand's size.
/// r.size() == a.size() + b.size(); r is fully overwritten.
void mul_dispatch(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
                  MulAlgorithm alg, const ThresholdTable& t);

/// Algorithm used for a recursive sub-product of `n` limbs when the caller
/// was asked for `requested`.
MulAlgorithm recursion_algorithm(MulAlgorithm requested, std::size_t n,
                                 const ThresholdTable& t);

/// Multiplies an unbalanced pair by slicing the longer operand into chunks
/// the length of the shorter one. Each chunk product uses `alg`.
void mul_chunked(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
                 MulAlgorithm alg, const ThresholdTable& t);

}  // namespace qkdpa::detail
