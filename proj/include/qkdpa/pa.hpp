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

// Privacy amplification with the modular-arithmetic hash
//
//   g_{c,d}(x) = ((c * x + d) mod 2^n) >> (n - r),   c odd,
//
// over n-bit blocks: import, fused multiply-add, reduction, export of the
// top r bits.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qkdpa/bignum.hpp"
#include "qkdpa/security.hpp"

namespace qkdpa {

/// A fixed-length bit string. Bit 0 is the least significant bit of the
/// integer value; leading zeros count towards size().
class BitBlock {
 public:
  /// Throws ParameterError for n == 0, SizeError if value needs more than n
  /// bits.
  BitBlock(BigNat value, std::size_t n);

  std::size_t size() const { return n_; }
  const BigNat& value() const { return value_; }
  bool bit(std::size_t i) const { return value_.test_bit(i); }

  friend bool operator==(const BitBlock&, const BitBlock&) = default;

 private:
  BigNat value_;
  std::size_t n_;
};

/// Bytes needed for n bits.
constexpr std::size_t byte_length(std::size_t n_bits) { return (n_bits + 7) / 8; }

/// Reads the first byte_length(n) bytes of raw. Within a byte bit 0 is the
/// least significant; `order` gives the byte order. Throws TruncationError
/// when raw is shorter and FormatError when bits above n are set.
BitBlock import_block(std::span<const std::uint8_t> raw, std::size_t n,
                      WordOrder order = WordOrder::LeastSignificantFirst);

/// byte_length(x.size()) bytes, zero padded at the most significant end.
std::vector<std::uint8_t> export_block(
    const BitBlock& x, WordOrder order = WordOrder::LeastSignificantFirst);

struct HashSeed {
  BigNat c;
  BigNat d;
  std::size_t alpha = 0;

  /// c odd, c < 2^alpha, d < 2^alpha, alpha >= 1.
  bool valid() const;
};

/// Deterministic seed for a shared 64-bit entropy value. `stream` separates
/// independent seeds drawn from one value (one per block, say). c is uniform
/// over the odd residues mod 2^alpha and d uniform over all residues.
HashSeed gen_seed(std::size_t alpha, std::uint64_t rng_seed,
                  std::uint64_t stream = 0);

/// Deterministic pseudo-random bytes from the same generator family as
/// gen_seed, under a separate domain.
std::vector<std::uint8_t> random_bytes(std::size_t count, std::uint64_t rng_seed,
                                       std::uint64_t stream = 0);

/// Uniform n-bit block drawn with random_bytes.
BitBlock random_block(std::size_t n, std::uint64_t rng_seed,
                      std::uint64_t stream = 0);

struct PaOptions {
  bool enforce_security = true;
  MulAlgorithm alg = MulAlgorithm::Auto;
  ThresholdTable thresholds;
};

/// The r-bit block shift_right(mod_pow2(fused_mul_add(d, c, x), alpha),
/// alpha - r). Throws ParameterError unless x.size() == seed.alpha and
/// 1 <= r <= alpha.
BitBlock compress(const BitBlock& x, const HashSeed& seed, std::size_t r,
                  MulAlgorithm alg = MulAlgorithm::Auto,
                  const ThresholdTable& thresholds = {});

/// One privacy amplification round. With enforcement on, an r above
/// max_key_length(h_min, epsilon) throws SecurityBoundError carrying r_max.
BitBlock pa_round(const BitBlock& x, const PAParams& params,
                  const HashSeed& seed, const PaOptions& opts = {});

}  // namespace qkdpa
