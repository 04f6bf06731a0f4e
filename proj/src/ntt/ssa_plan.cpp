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
#include <cmath>
#include <limits>

#include "qkdpa/ntt.hpp"

namespace qkdpa {
namespace {

std::size_t round_up(std::size_t x, std::size_t m) { return (x + m - 1) / m * m; }

// Approximate nanoseconds for an n-limb product under the default bands,
// fitted on a desktop x86-64 core.
double mul_cost(double n) {
  constexpr double kKara = 32, kSsa = 4096;
  if (n <= kKara) return n * n;
  const double at_kara = kKara * kKara;
  if (n <= kSsa) return at_kara * std::pow(n / kKara, 1.585);
  const double at_ssa = at_kara * std::pow(kSsa / kKara, 1.585);
  return at_ssa * (n / kSsa) * std::log2(n) / std::log2(kSsa);
}

double plan_cost(const SsaPlan& p) {
  const double pieces = static_cast<double>(p.pieces());
  const double limbs = static_cast<double>(p.element_limbs());
  // Three transforms of (K/2) k butterflies at about 2 ns per limb each.
  const double transforms = 3.0 * (pieces / 2) * p.k * limbs * 2.1;
  const double pointwise = pieces * (mul_cost(limbs - 1) + 1.5 * limbs);
  return transforms + pointwise;
}

}  // namespace

bool SsaPlan::valid() const {
  const std::size_t k_pieces = pieces();
  return n_bits >= 1 && piece_bits >= 1 && piece_bits * k_pieces == 2 * n_bits &&
         ring_bits >= 2 * piece_bits + k + 3 && 2 * ring_bits % k_pieces == 0 &&
         ring_bits % kLimbBits == 0;
}

SsaPlan make_plan(std::size_t n_bits, unsigned k) {
  n_bits = std::max<std::size_t>(n_bits, 1);
  const std::size_t pieces = std::size_t{1} << k;
  // 2N and 2N' must both be multiples of 2^k: the first so that M is whole,
  // the second so that w = 2^(2N'/2^k) is a power of two.
  const std::size_t half = std::max<std::size_t>(pieces / 2, 1);
  SsaPlan p;
  p.k = k;
  p.n_bits = round_up(n_bits, half);
  p.piece_bits = 2 * p.n_bits / pieces;
  p.ring_bits = round_up(2 * p.piece_bits + k + 3, std::max(half, kLimbBits));
  return p;
}

SsaPlan make_plan(std::size_t n_bits) {
  n_bits = std::max<std::size_t>(n_bits, 1);
  SsaPlan best = make_plan(n_bits, 1);
  double best_cost = std::numeric_limits<double>::infinity();
  for (unsigned k = 1; k <= 24; ++k) {
    if ((std::size_t{1} << k) > 2 * n_bits) break;
    const SsaPlan p = make_plan(n_bits, k);
    const double cost = plan_cost(p);
    if (cost < best_cost) {
      best_cost = cost;
      best = p;
    }
  }
  return best;
}

}  // namespace qkdpa
