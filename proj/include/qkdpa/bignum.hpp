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

// Arbitrary-precision natural numbers with a size-dispatched multiplication
// stack (schoolbook, Karatsuba, Toom-3, Schönhage–Strassen) and bitwise
// power-of-two reduction.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qkdpa {

using Limb = std::uint64_t;
inline constexpr std::size_t kLimbBits = 64;

/// Order of a multi-word (or multi-byte) sequence.
enum class WordOrder { MostSignificantFirst, LeastSignificantFirst };

enum class MulAlgorithm { Schoolbook, Karatsuba, Toom3, SSA, Auto };

std::string_view to_string(MulAlgorithm alg);
std::optional<MulAlgorithm> parse_mul_algorithm(std::string_view name);

/// Size bands for automatic algorithm selection, in limbs of the larger
/// operand. A size equal to a band's maximum belongs to that band.
struct ThresholdTable {
  std::size_t schoolbook_max_limbs = 32;
  std::size_t karatsuba_max_limbs = 256;
  std::size_t toom3_max_limbs = 4096;

  bool valid() const {
    return schoolbook_max_limbs < karatsuba_max_limbs &&
           karatsuba_max_limbs < toom3_max_limbs;
  }
};

/// Immutable natural number. Limbs are least-significant first with no
/// trailing zero limbs; zero has no limbs.
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t value);

  /// Takes ownership of little-endian limbs and trims them.
  static BigNat from_limbs(std::vector<Limb> limbs);
  static BigNat from_words(std::span<const Limb> words, WordOrder order);
  /// Parses lowercase or uppercase hex digits, optional "0x" prefix.
  static BigNat from_hex(std::string_view hex);
  static BigNat pow2(std::size_t k);

  std::vector<Limb> to_words(WordOrder order) const;
  std::string to_hex() const;

  std::span<const Limb> limbs() const { return limbs_; }
  /// Moves the limbs out, leaving zero.
  std::vector<Limb> release() && { return std::move(limbs_); }
  std::size_t limb_count() const { return limbs_.size(); }
  std::size_t bit_len() const;
  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  bool test_bit(std::size_t i) const;
  /// Low 64 bits of the value.
  std::uint64_t low_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

  /// True when the limb sequence has no trailing zero.
  bool is_canonical() const { return limbs_.empty() || limbs_.back() != 0; }

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

 private:
  std::vector<Limb> limbs_;
};

BigNat add(const BigNat& a, const BigNat& b);

/// Exact product. A concrete `alg` is applied at the top level and, for
/// Karatsuba and Toom-3, at every recursive level above the schoolbook band;
/// Auto re-selects by size at every level.
BigNat mul(const BigNat& a, const BigNat& b,
           MulAlgorithm alg = MulAlgorithm::Auto,
           const ThresholdTable& thresholds = {});

/// acc + c * x.
BigNat fused_mul_add(const BigNat& acc, const BigNat& c, const BigNat& x,
                     MulAlgorithm alg = MulAlgorithm::Auto,
                     const ThresholdTable& thresholds = {});

/// x mod 2^k (the low k bits).
BigNat mod_pow2(const BigNat& x, std::size_t k);
BigNat mod_pow2(BigNat&& x, std::size_t k);

/// floor(x / 2^k).
BigNat shift_right(const BigNat& x, std::size_t k);
BigNat shift_right(BigNat&& x, std::size_t k);

/// x * 2^k.
BigNat shift_left(const BigNat& x, std::size_t k);

MulAlgorithm select_algorithm(std::size_t n_bits_a, std::size_t n_bits_b,
                              const ThresholdTable& thresholds = {});

}  // namespace qkdpa
