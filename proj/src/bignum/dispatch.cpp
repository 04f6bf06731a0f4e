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

#include "qkdpa/bignum.hpp"
#include "qkdpa/detail/limb_kernels.hpp"

namespace qkdpa {

std::string_view to_string(MulAlgorithm alg) {
  switch (alg) {
    case MulAlgorithm::Schoolbook: return "schoolbook";
    case MulAlgorithm::Karatsuba: return "karatsuba";
    case MulAlgorithm::Toom3: return "toom3";
    case MulAlgorithm::SSA: return "ssa";
    case MulAlgorithm::Auto: return "auto";
  }
  return "unknown";
}

std::optional<MulAlgorithm> parse_mul_algorithm(std::string_view name) {
  for (auto alg : {MulAlgorithm::Schoolbook, MulAlgorithm::Karatsuba,
                   MulAlgorithm::Toom3, MulAlgorithm::SSA, MulAlgorithm::Auto}) {
    if (to_string(alg) == name) return alg;
  }
  return std::nullopt;
}

MulAlgorithm select_algorithm(std::size_t n_bits_a, std::size_t n_bits_b,
                              const ThresholdTable& thresholds) {
  const std::size_t bits = std::max(n_bits_a, n_bits_b);
  const std::size_t limbs = (bits + kLimbBits - 1) / kLimbBits;
  if (limbs <= thresholds.schoolbook_max_limbs) return MulAlgorithm::Schoolbook;
  if (limbs <= thresholds.karatsuba_max_limbs) return MulAlgorithm::Karatsuba;
  if (limbs <= thresholds.toom3_max_limbs) return MulAlgorithm::Toom3;
  return MulAlgorithm::SSA;
}

namespace detail {

MulAlgorithm recursion_algorithm(MulAlgorithm requested, std::size_t n,
                                 const ThresholdTable& t) {
  switch (requested) {
    case MulAlgorithm::Karatsuba:
    case MulAlgorithm::Toom3:
      return n <= t.schoolbook_max_limbs ? MulAlgorithm::Schoolbook : requested;
    case MulAlgorithm::Schoolbook:
      return MulAlgorithm::Schoolbook;
    case MulAlgorithm::SSA:
    case MulAlgorithm::Auto:
      break;
  }
  return MulAlgorithm::Auto;
}

void mul_dispatch(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
                  MulAlgorithm alg, const ThresholdTable& t) {
  assert(r.size() == a.size() + b.size());
  a = a.first(normalized_size(a));
  b = b.first(normalized_size(b));
  if (a.empty() || b.empty()) {
    std::fill(r.begin(), r.end(), Limb{0});
    return;
  }
  if (a.size() == 1 && b.size() == 1) {
    const auto p = static_cast<unsigned __int128>(a[0]) * b[0];
    r[0] = static_cast<Limb>(p);
    r[1] = static_cast<Limb>(p >> 64);
    std::fill(r.begin() + 2, r.end(), Limb{0});
    return;
  }
  LimbSpan out = r.first(a.size() + b.size());
  std::fill(r.begin() + static_cast<std::ptrdiff_t>(out.size()), r.end(),
            Limb{0});

  // Auto re-selects at every level; a concrete request is passed down so
  // Karatsuba and Toom-3 keep recursing into themselves.
  const MulAlgorithm concrete =
      alg == MulAlgorithm::Auto
          ? select_algorithm(a.size() * kLimbBits, b.size() * kLimbBits, t)
          : alg;
  switch (concrete) {
    case MulAlgorithm::Schoolbook: mul_schoolbook(out, a, b); break;
    case MulAlgorithm::Karatsuba: mul_karatsuba(out, a, b, alg, t); break;
    case MulAlgorithm::Toom3: mul_toom3(out, a, b, alg, t); break;
    case MulAlgorithm::SSA: mul_ssa(out, a, b, t); break;
    case MulAlgorithm::Auto: break;
  }
}

void mul_chunked(LimbSpan r, ConstLimbSpan a, ConstLimbSpan b,
                 MulAlgorithm alg, const ThresholdTable& t) {
  if (a.size() < b.size()) std::swap(a, b);
  std::fill(r.begin(), r.end(), Limb{0});
  const std::size_t step = b.size();
  std::vector<Limb> tmp(2 * step);
  for (std::size_t off = 0; off < a.size(); off += step) {
    const auto chunk = a.subspan(off, std::min(step, a.size() - off));
    LimbSpan prod(tmp.data(), chunk.size() + b.size());
    mul_dispatch(prod, chunk, b, alg, t);
    [[maybe_unused]] const Limb carry =
        add_into(r.subspan(off), prod.first(normalized_size(prod)));
    assert(carry == 0);
  }
}

}  // namespace detail

BigNat mul(const BigNat& a, const BigNat& b, MulAlgorithm alg,
           const ThresholdTable& thresholds) {
  if (a.is_zero() || b.is_zero()) return BigNat{};
  std::vector<Limb> r(a.limb_count() + b.limb_count());
  detail::mul_dispatch(r, a.limbs(), b.limbs(), alg, thresholds);
  return BigNat::from_limbs(std::move(r));
}

BigNat fused_mul_add(const BigNat& acc, const BigNat& c, const BigNat& x,
                     MulAlgorithm alg, const ThresholdTable& thresholds) {
  if (c.is_zero() || x.is_zero()) return acc;
  if (c.limb_count() == 1 && x.limb_count() == 1 && acc.limb_count() <= 1) {
    const auto p = static_cast<unsigned __int128>(c.limbs()[0]) * x.limbs()[0] +
                   acc.low_u64();
    return BigNat::from_limbs({static_cast<Limb>(p), static_cast<Limb>(p >> 64)});
  }
  const std::size_t prod_limbs = c.limb_count() + x.limb_count();
  std::vector<Limb> r(std::max(prod_limbs, acc.limb_count()) + 1);
  detail::mul_dispatch(std::span<Limb>(r).first(prod_limbs), c.limbs(),
                       x.limbs(), alg, thresholds);
  detail::add_into(r, acc.limbs());
  return BigNat::from_limbs(std::move(r));
}

}  // namespace qkdpa
