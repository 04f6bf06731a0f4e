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

// Independent reference computations for the tests. Big-integer oracles go
// through GMP, which shares no code with the library under test.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qkdpa/bignum.hpp"
#include "qkdpa/ntt.hpp"

namespace qkdpa::testing {

inline mpz_class to_mpz(const BigNat& x) {
  mpz_class r;
  const auto limbs = x.limbs();
  if (!limbs.empty()) {
    mpz_import(r.get_mpz_t(), limbs.size(), -1, sizeof(Limb), 0, 0, limbs.data());
  }
  return r;
}

inline BigNat from_mpz(const mpz_class& v) {
  std::vector<Limb> limbs((mpz_sizeinbase(v.get_mpz_t(), 2) + 63) / 64 + 1);
  std::size_t count = 0;
  mpz_export(limbs.data(), &count, -1, sizeof(Limb), 0, 0, v.get_mpz_t());
  limbs.resize(count);
  return BigNat::from_limbs(std::move(limbs));
}

/// Uniform value below 2^bits.
inline BigNat random_bits(std::mt19937_64& rng, std::size_t bits) {
  std::vector<Limb> limbs((bits + 63) / 64);
  for (auto& l : limbs) l = rng();
  if (bits % 64 && !limbs.empty()) limbs.back() &= (Limb{1} << (bits % 64)) - 1;
  return BigNat::from_limbs(std::move(limbs));
}

/// Random value of exactly `bits` bits, top bit set.
inline BigNat random_exact(std::mt19937_64& rng, std::size_t bits) {
  if (bits == 0) return BigNat{};
  return add(mod_pow2(random_bits(rng, bits), bits - 1), BigNat::pow2(bits - 1));
}

inline mpz_class fermat(std::size_t ring_bits) {
  mpz_class f = 1;
  f <<= ring_bits;
  return f + 1;
}

/// X_j = sum_i x_i w^(ij) mod 2^N' + 1 with w = 2^(2N'/K), straight from the
/// definition.
inline std::vector<mpz_class> direct_dft(const std::vector<mpz_class>& x,
                                         std::size_t ring_bits, bool inverse) {
  const std::size_t K = x.size();
  const mpz_class F = fermat(ring_bits);
  const std::size_t step = 2 * ring_bits / K;
  std::vector<mpz_class> out(K);
  for (std::size_t j = 0; j < K; ++j) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < K; ++i) {
      std::size_t e = (i * j % K) * step;
      if (inverse) e = (2 * ring_bits - e) % (2 * ring_bits);
      mpz_class term = x[i];
      term <<= e;
      acc += term;
    }
    if (inverse) {
      // times K^-1 = 2^(2N' - k)
      std::size_t k = 0;
      while ((std::size_t{1} << k) < K) ++k;
      acc <<= (2 * ring_bits - k);
    }
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), F.get_mpz_t());
    out[j] = acc;
  }
  return out;
}

/// Cyclic convolution over Z/(2^N' + 1), O(K^2).
inline std::vector<mpz_class> direct_cyclic(const std::vector<mpz_class>& u,
                                            const std::vector<mpz_class>& v,
                                            std::size_t ring_bits) {
  const std::size_t K = u.size();
  const mpz_class F = fermat(ring_bits);
  std::vector<mpz_class> out(K, 0);
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = 0; j < K; ++j) out[(i + j) % K] += u[i] * v[j];
  }
  for (auto& o : out) mpz_mod(o.get_mpz_t(), o.get_mpz_t(), F.get_mpz_t());
  return out;
}

inline std::vector<mpz_class> values(const RingVector& v) {
  std::vector<mpz_class> out;
  for (const auto& e : v) out.push_back(to_mpz(e.value()));
  return out;
}

}  // namespace qkdpa::testing
