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

// Toom-3 with evaluation points 0, 1, -1, -2, inf and Bodrato's
// interpolation sequence.

#include <algorithm>
#include <cassert>
#include <vector>

#include "qkdpa/detail/limb_kernels.hpp"

namespace qkdpa::detail {
namespace {

using DLimb = unsigned __int128;

// Sign-magnitude value used only for the evaluation/interpolation steps.
struct Signed {
  std::vector<Limb> mag;
  bool neg = false;

  void trim() {
    mag.resize(normalized_size(mag));
    if (mag.empty()) neg = false;
  }
};

Signed from_span(ConstLimbSpan s) {
  Signed v{std::vector<Limb>(s.begin(), s.end()), false};
  v.trim();
  return v;
}

int cmp_mag(const std::vector<Limb>& a, const std::vector<Limb>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return compare_n(a, b);
}

std::vector<Limb> add_mag(const std::vector<Limb>& a,
                          const std::vector<Limb>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<Limb> r(big.size() + 1);
  r.back() = add_n(LimbSpan(r).first(big.size()), big, small);
  return r;
}

// |a| >= |b|
std::vector<Limb> sub_mag(const std::vector<Limb>& a,
                          const std::vector<Limb>& b) {
  std::vector<Limb> r(a.size());
  [[maybe_unused]] const Limb borrow = sub_n(r, a, b);
  assert(borrow == 0);
  return r;
}

Signed add(const Signed& a, const Signed& b) {
  Signed r;
  if (a.neg == b.neg) {
    r.mag = add_mag(a.mag, b.mag);
    r.neg = a.neg;
  } else if (cmp_mag(a.mag, b.mag) >= 0) {
    r.mag = sub_mag(a.mag, b.mag);
    r.neg = a.neg;
  } else {
    r.mag = sub_mag(b.mag, a.mag);
    r.neg = b.neg;
  }
  r.trim();
  return r;
}

Signed negate(Signed a) {
  if (!a.mag.empty()) a.neg = !a.neg;
  return a;
}

Signed sub(const Signed& a, const Signed& b) { return add(a, negate(b)); }

Signed shl1(const Signed& a) {
  Signed r{std::vector<Limb>(a.mag.size() + 1), a.neg};
  r.mag.back() = lshift(LimbSpan(r.mag).first(a.mag.size()), a.mag, 1);
  r.trim();
  return r;
}

Signed div2_exact(const Signed& a) {
  assert(a.mag.empty() || (a.mag[0] & 1u) == 0);
  Signed r{std::vector<Limb>(a.mag.size()), a.neg};
  rshift(r.mag, a.mag, 1);
  r.trim();
  return r;
}

// Exact division by 3 via the inverse of 3 modulo 2^64.
Signed div3_exact(const Signed& a) {
  constexpr Limb kInv3 = 0xAAAAAAAAAAAAAAABull;
  Signed r{std::vector<Limb>(a.mag.size()), a.neg};
  Limb borrow = 0;
  for (std::size_t i = 0; i < a.mag.size(); ++i) {
    const Limb s = a.mag[i];
    const Limb d = s - borrow;
    const Limb q = d * kInv3;
    r.mag[i] = q;
    borrow = static_cast<Limb>(s < borrow) +
             static_cast<Limb>((static_cast<DLimb>(q) * 3) >> 64);
  }
  assert(borrow == 0);
  r.trim();
  return r;
}

Signed multiply(const Signed& a, const Signed& b, MulAlgorithm alg,
                const ThresholdTable& t) {
  Signed r{std::vector<Limb>(a.mag.size() + b.mag.size()), a.neg != b.neg};
  mul_dispatch(r.mag, a.mag, b.mag, alg, t);
  r.trim();
  return r;
}

void accumulate(LimbSpan r, std::size_t offset, const Signed& v) {
  assert(!v.neg);
  if (v.mag.empty()) return;
  [[maybe_unused]] const Limb carry = add_into(r.subspan(offset), v.mag);
  assert(carry == 0);
}

}  // namespace

void mul_toom3(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
               MulAlgorithm recurse, const ThresholdTable& t) {
  assert(r.size() == a.size() + b.size());
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na < 3 || nb == 0) {
    mul_schoolbook(r, a, b);
    return;
  }
  if (2 * nb <= na) {
    const MulAlgorithm chunk_alg =
        recurse == MulAlgorithm::Auto ? MulAlgorithm::Auto : MulAlgorithm::Toom3;
    mul_chunked(r, a, b, chunk_alg, t);
    return;
  }

  const std::size_t h = (na + 2) / 3;
  auto part = [h](ConstLimbSpan s, std::size_t i) {
    const std::size_t lo = std::min(s.size(), i * h);
    const std::size_t hi = std::min(s.size(), (i + 1) * h);
    return from_span(s.subspan(lo, hi - lo));
  };
  const Signed a0 = part(a, 0), a1 = part(a, 1), a2 = part(a, 2);
  const Signed b0 = part(b, 0), b1 = part(b, 1), b2 = part(b, 2);

  // Evaluate.
  const Signed pa = add(a0, a2);
  const Signed pa_1 = add(pa, a1);
  const Signed pa_m1 = sub(pa, a1);
  const Signed pa_m2 = sub(shl1(add(pa_m1, a2)), a0);
  const Signed pb = add(b0, b2);
  const Signed pb_1 = add(pb, b1);
  const Signed pb_m1 = sub(pb, b1);
  const Signed pb_m2 = sub(shl1(add(pb_m1, b2)), b0);

  const MulAlgorithm sub_alg = recursion_algorithm(recurse, h + 1, t);
  const Signed r0 = multiply(a0, b0, sub_alg, t);
  const Signed r_1 = multiply(pa_1, pb_1, sub_alg, t);
  const Signed r_m1 = multiply(pa_m1, pb_m1, sub_alg, t);
  const Signed r_m2 = multiply(pa_m2, pb_m2, sub_alg, t);
  const Signed r_inf = multiply(a2, b2, sub_alg, t);

  // Interpolate.
  Signed c3 = div3_exact(sub(r_m2, r_1));
  Signed c1 = div2_exact(sub(r_1, r_m1));
  Signed c2 = sub(r_m1, r0);
  c3 = add(div2_exact(sub(c2, c3)), shl1(r_inf));
  c2 = sub(add(c2, c1), r_inf);
  c1 = sub(c1, c3);

  std::fill(r.begin(), r.end(), Limb{0});
  accumulate(r, 0, r0);
  accumulate(r, h, c1);
  accumulate(r, 2 * h, c2);
  accumulate(r, 3 * h, c3);
  accumulate(r, 4 * h, r_inf);
}

}  // namespace qkdpa::detail
