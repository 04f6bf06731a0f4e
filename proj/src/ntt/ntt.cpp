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

#include "qkdpa/ntt.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "fermat_ring.hpp"
#include "qkdpa/detail/limb_kernels.hpp"
#include "qkdpa/errors.hpp"

namespace qkdpa {
namespace {

void check_length(const RingVector& v, const SsaPlan& plan, const char* what) {
  if (v.size() != plan.pieces()) {
    throw SizeError(std::string(what) + ": expected " +
                    std::to_string(plan.pieces()) + " elements, got " +
                    std::to_string(v.size()));
  }
  for (const auto& e : v) {
    if (e.limbs().size() != plan.element_limbs()) {
      throw SizeError(std::string(what) + ": element width does not match plan");
    }
  }
}

std::size_t bit_reverse(std::size_t i, unsigned k) {
  std::size_t r = 0;
  for (unsigned b = 0; b < k; ++b) r |= ((i >> b) & 1u) << (k - 1 - b);
  return r;
}

// One decimation-in-frequency level on v[s, s + len), then both halves.
// Depth-first order keeps the sub-blocks cache resident.
void dif_block(RingVector& v, std::size_t s, std::size_t len,
               const detail::FermatRing& ring, std::span<Limb> tmp) {
  const std::size_t half = len / 2;
  const std::size_t step = 2 * ring.bits() / len;
  for (std::size_t j = 0; j < half; ++j) {
    auto x = v[s + j].limbs();
    auto y = v[s + j + half].limbs();
    ring.sub(tmp, x, y);
    ring.add(x, x, y);
    ring.mul_2exp(y, tmp, j * step);
  }
  if (half >= 2) {
    dif_block(v, s, half, ring, tmp);
    dif_block(v, s + half, half, ring, tmp);
  }
}

// Output is permuted back to natural order.
void dif_transform(RingVector& v, const detail::FermatRing& ring, unsigned k) {
  const std::size_t n = v.size();
  std::vector<Limb> tmp(ring.limbs());
  if (n >= 2) dif_block(v, 0, n, ring, tmp);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = bit_reverse(i, k);
    if (j > i) std::swap(v[i], v[j]);
  }
}

}  // namespace

RingElement::RingElement(const SsaPlan& plan) : limbs_(plan.element_limbs()) {}

RingElement::RingElement(const BigNat& value, const SsaPlan& plan)
    : limbs_(plan.element_limbs()) {
  detail::FermatRing(plan.ring_bits).reduce(limbs_, value.limbs());
}

BigNat RingElement::value() const { return BigNat::from_limbs(limbs_); }

bool RingElement::in_range(std::size_t ring_bits) const {
  const std::size_t n = ring_bits / kLimbBits;
  if (limbs_.size() != n + 1) return false;
  if (limbs_[n] == 0) return true;
  return limbs_[n] == 1 && detail::is_zero(std::span(limbs_).first(n));
}

RingVector split(const BigNat& a, const SsaPlan& plan) {
  if (a.bit_len() > plan.n_bits) {
    throw SizeError("split: operand has " + std::to_string(a.bit_len()) +
                    " bits, plan holds " + std::to_string(plan.n_bits));
  }
  RingVector out(plan.pieces(), RingElement(plan));
  const std::size_t n = plan.ring_bits / kLimbBits;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t off = i * plan.piece_bits;
    if (off >= a.bit_len()) break;
    detail::extract_bits(out[i].limbs().first(n), a.limbs(), off,
                         plan.piece_bits);
  }
  return out;
}

RingVector forward_ntt(RingVector v, const SsaPlan& plan) {
  check_length(v, plan, "forward_ntt");
  const detail::FermatRing ring(plan.ring_bits);
  dif_transform(v, ring, plan.k);
  return v;
}

// INTT(X)_i = 2^-k * NTT(X)_{-i mod K}.
RingVector inverse_ntt(RingVector v, const SsaPlan& plan) {
  check_length(v, plan, "inverse_ntt");
  const detail::FermatRing ring(plan.ring_bits);
  dif_transform(v, ring, plan.k);
  const std::size_t n = v.size();
  for (std::size_t i = 1; i < n - i; ++i) std::swap(v[i], v[n - i]);
  const std::size_t inv_scale = 2 * plan.ring_bits - plan.k;
  for (auto& e : v) ring.mul_2exp(e.limbs(), e.limbs(), inv_scale);
  return v;
}

RingVector pointwise_mul(const RingVector& u, const RingVector& v,
                         const SsaPlan& plan, const ThresholdTable& thresholds) {
  check_length(u, plan, "pointwise_mul");
  check_length(v, plan, "pointwise_mul");
  const detail::FermatRing ring(plan.ring_bits);
  RingVector out(u.size(), RingElement(plan));
  for (std::size_t i = 0; i < u.size(); ++i) {
    ring.mul(out[i].limbs(), u[i].limbs(), v[i].limbs(), thresholds);
  }
  return out;
}

BigNat combine_and_carry(const RingVector& pieces, const SsaPlan& plan) {
  check_length(pieces, plan, "combine_and_carry");
  const std::size_t total_bits =
      (pieces.size() - 1) * plan.piece_bits + plan.ring_bits + 1;
  std::vector<Limb> out(total_bits / kLimbBits + 3);
  std::vector<Limb> shifted(plan.element_limbs() + 1);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const auto src = pieces[j].limbs();
    if (detail::is_zero(src)) continue;
    const std::size_t off = j * plan.piece_bits;
    shifted.back() = detail::lshift(std::span(shifted).first(src.size()), src,
                                    static_cast<unsigned>(off % kLimbBits));
    const auto add = std::span<const Limb>(shifted).first(
        detail::normalized_size(shifted));
    [[maybe_unused]] const Limb carry =
        detail::add_into(std::span(out).subspan(off / kLimbBits), add);
    assert(carry == 0);
  }
  return BigNat::from_limbs(std::move(out));
}

BigNat ssa_multiply(const BigNat& a, const BigNat& b,
                    const ThresholdTable& thresholds) {
  if (a.is_zero() || b.is_zero()) return BigNat{};
  const SsaPlan plan = make_plan(std::max(a.bit_len(), b.bit_len()));
  RingVector fa = forward_ntt(split(a, plan), plan);
  RingVector fb = forward_ntt(split(b, plan), plan);
  RingVector prod = pointwise_mul(fa, fb, plan, thresholds);
  fa.clear();
  fb.clear();
  return combine_and_carry(inverse_ntt(std::move(prod), plan), plan);
}

namespace detail {

void mul_ssa(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
             const ThresholdTable& t) {
  const BigNat prod = ssa_multiply(
      BigNat::from_limbs(std::vector<Limb>(a.begin(), a.end())),
      BigNat::from_limbs(std::vector<Limb>(b.begin(), b.end())), t);
  const auto limbs = prod.limbs();
  assert(limbs.size() <= r.size());
  std::copy(limbs.begin(), limbs.end(), r.begin());
  std::fill(r.begin() + static_cast<std::ptrdiff_t>(limbs.size()), r.end(),
            Limb{0});
}

}  // namespace detail
}  // namespace qkdpa
