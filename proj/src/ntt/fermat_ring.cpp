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

#include "fermat_ring.hpp"

#include <algorithm>
#include <cassert>

namespace qkdpa::detail {

FermatRing::FermatRing(std::size_t bits)
    : bits_(bits), n_(bits / kLimbBits), modulus_(n_ + 1), scratch_(2 * n_ + 2) {
  assert(bits % kLimbBits == 0 && bits > 0);
  modulus_[0] = 1;
  modulus_[n_] += 1;
}

// A top limb t > 0 stands for t * 2^bits == -t.
void FermatRing::add(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b) const {
  add_n(r, a, b);
  const Limb top = r[n_];
  r[n_] = 0;
  if (sub_1(r.first(n_), top)) add_1(r, 1);
}

void FermatRing::sub(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b) const {
  if (sub_n(r, a, b)) {
    // Wrapped by 2^(64(n+1)); adding F in the same width lands in [1, 2^bits].
    add_1(r, 1);
    r[n_] += 1;
  }
}

void FermatRing::negate(LimbSpan r) const {
  if (is_zero(r)) return;
  sub_n(r, modulus_, r);
}

void FermatRing::fold(LimbSpan r, ConstLimbSpan lo, ConstLimbSpan hi) const {
  r[n_] = 0;
  if (sub_n(r.first(n_), lo, hi)) add_1(r, 1);
}

void FermatRing::mul_2exp(LimbSpan r, ConstLimbSpan a, std::size_t e) const {
  e %= 2 * bits_;
  const bool neg = e >= bits_;
  if (neg) e -= bits_;

  if (a[n_] != 0) {
    // a = -1, so a * 2^e = -2^e.
    std::fill(r.begin(), r.end(), Limb{0});
    r[e / kLimbBits] = Limb{1} << (e % kLimbBits);
    if (!neg) negate(r);
    return;
  }
  if (e == 0) {
    if (r.data() != a.data()) std::copy(a.begin(), a.end(), r.begin());
    if (neg) negate(r);
    return;
  }

  // a * 2^e = L + H * 2^bits == L - H, with H = a >> (bits - e) < 2^e.
  const std::size_t w = e / kLimbBits;
  const auto b = static_cast<unsigned>(e % kLimbBits);
  LimbSpan high(scratch_.data(), w + 1);
  high[w] = lshift(high.first(w), a.subspan(n_ - w, w), b);
  const Limb spill = lshift(r.subspan(w, n_ - w), a.first(n_ - w), b);
  high[0] |= spill;
  std::fill_n(r.begin(), w, Limb{0});
  r[n_] = 0;
  const auto h = ConstLimbSpan(high).first(normalized_size(high));
  if (!h.empty() && sub_into(r.first(n_), h)) add_1(r, 1);
  if (neg) negate(r);
}

void FermatRing::mul(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
                     const ThresholdTable& t) const {
  if (a[n_] != 0) {
    std::copy(b.begin(), b.end(), r.begin());
    negate(r);
    return;
  }
  if (b[n_] != 0) {
    std::copy(a.begin(), a.end(), r.begin());
    negate(r);
    return;
  }
  LimbSpan prod(scratch_.data(), 2 * n_);
  mul_dispatch(prod, a.first(n_), b.first(n_), MulAlgorithm::Auto, t);
  fold(r, ConstLimbSpan(prod).first(n_), ConstLimbSpan(prod).subspan(n_));
}

void FermatRing::reduce(LimbSpan r, ConstLimbSpan wide) const {
  std::fill(r.begin(), r.end(), Limb{0});
  std::vector<Limb> chunk(n_ + 1);
  bool odd = false;
  for (std::size_t off = 0; off < wide.size(); off += n_, odd = !odd) {
    std::fill(chunk.begin(), chunk.end(), Limb{0});
    const std::size_t len = std::min(n_, wide.size() - off);
    std::copy_n(wide.begin() + static_cast<std::ptrdiff_t>(off), len,
                chunk.begin());
    if (odd) {
      sub(r, r, chunk);
    } else {
      add(r, r, chunk);
    }
  }
}

}  // namespace qkdpa::detail
