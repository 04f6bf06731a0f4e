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

#include <algorithm>
#include <cassert>
#include <vector>

#include "qkdpa/detail/limb_kernels.hpp"

namespace qkdpa::detail {

namespace {

// r = |x - y| over n limbs, with y zero-extended; returns true if x < y.
bool abs_diff(LimbSpan r, ConstLimbSpan x, ConstLimbSpan y) {
  const std::size_t n = x.size();
  bool neg = false;
  if (y.size() == n) {
    neg = compare_n(x, y) < 0;
  } else {
    neg = normalized_size(x.subspan(y.size())) == 0 &&
          compare_n(x.first(y.size()), y) < 0;
  }
  if (neg) {
    // Only possible when the top of x is zero, so y - x fits in y's width.
    sub_n(r.first(y.size()), y, x.first(y.size()));
    std::fill(r.begin() + static_cast<std::ptrdiff_t>(y.size()), r.end(), Limb{0});
  } else {
    sub_n(r, x, y);
  }
  return neg;
}

}  // namespace

// Subtractive Karatsuba: with a = a0 + a1*B^h and b = b0 + b1*B^h,
//   a*b = z0 + (z0 + z2 - s*|a0 - a1||b0 - b1|)*B^h + z2*B^2h,
// s the sign of (a0 - a1)(b0 - b1). All three products are h limbs wide.
void mul_karatsuba(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
                   MulAlgorithm recurse, const ThresholdTable& t) {
  assert(r.size() == a.size() + b.size());
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (nb == 0) {
    std::fill(r.begin(), r.end(), Limb{0});
    return;
  }
  if (na == 1) {
    mul_schoolbook(r, a, b);
    return;
  }
  if (2 * nb <= na) {
    // Too unbalanced to split evenly; run balanced Karatsuba per chunk.
    const MulAlgorithm chunk_alg = recurse == MulAlgorithm::Auto
                                       ? MulAlgorithm::Auto
                                       : MulAlgorithm::Karatsuba;
    mul_chunked(r, a, b, chunk_alg, t);
    return;
  }

  const std::size_t h = (na + 1) / 2;
  assert(nb >= h);
  const auto a0 = a.first(h);
  const auto a1 = a.subspan(h);
  const auto b0 = b.first(h);
  const auto b1 = b.subspan(h);
  const MulAlgorithm sub = recursion_algorithm(recurse, h, t);

  std::fill(r.begin(), r.end(), Limb{0});
  mul_dispatch(r.first(2 * h), a0, b0, sub, t);
  mul_dispatch(r.subspan(2 * h), a1, b1,
               recursion_algorithm(recurse, a1.size(), t), t);

  std::vector<Limb> scratch(6 * h + 1);
  LimbSpan da(scratch.data(), h);
  LimbSpan db(scratch.data() + h, h);
  LimbSpan z1(scratch.data() + 2 * h, 2 * h);
  LimbSpan mid(scratch.data() + 4 * h, 2 * h + 1);
  const bool neg = abs_diff(da, a0, a1) != abs_diff(db, b0, b1);
  mul_dispatch(z1, da, db, sub, t);

  // mid = z0 + z2 -/+ z1; the true middle term is nonnegative.
  std::copy_n(r.begin(), 2 * h, mid.begin());
  mid[2 * h] = 0;
  add_into(mid, r.subspan(2 * h));
  if (neg) {
    add_into(mid, z1);
  } else {
    sub_into(mid, z1);
  }
  const auto m = ConstLimbSpan(mid).first(normalized_size(mid));
  [[maybe_unused]] const Limb carry = add_into(r.subspan(h), m);
  assert(carry == 0);
}

}  // namespace qkdpa::detail
