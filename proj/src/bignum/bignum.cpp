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

#include "qkdpa/bignum.hpp"

#include <algorithm>
#include <bit>

#include "qkdpa/detail/limb_kernels.hpp"
#include "qkdpa/errors.hpp"

namespace qkdpa {

BigNat::BigNat(std::uint64_t value) {
  if (value) limbs_.push_back(value);
}

BigNat BigNat::from_limbs(std::vector<Limb> limbs) {
  BigNat r;
  limbs.resize(detail::normalized_size(limbs));
  r.limbs_ = std::move(limbs);
  return r;
}

BigNat BigNat::from_words(std::span<const Limb> words, WordOrder order) {
  std::vector<Limb> limbs(words.begin(), words.end());
  if (order == WordOrder::MostSignificantFirst) {
    std::reverse(limbs.begin(), limbs.end());
  }
  return from_limbs(std::move(limbs));
}

std::vector<Limb> BigNat::to_words(WordOrder order) const {
  std::vector<Limb> words = limbs_;
  if (order == WordOrder::MostSignificantFirst) {
    std::reverse(words.begin(), words.end());
  }
  return words;
}

BigNat BigNat::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  std::vector<Limb> limbs((hex.size() + 15) / 16);
  std::size_t nibble = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibble) {
    const char ch = *it;
    Limb v;
    if (ch >= '0' && ch <= '9') {
      v = static_cast<Limb>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      v = static_cast<Limb>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      v = static_cast<Limb>(ch - 'A' + 10);
    } else {
      throw FormatError(std::string("invalid hex digit '") + ch + "'");
    }
    limbs[nibble / 16] |= v << (4 * (nibble % 16));
  }
  return from_limbs(std::move(limbs));
}

std::string BigNat::to_hex() const {
  if (limbs_.empty()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(limbs_.size() * 16);
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    for (int s = 60; s >= 0; s -= 4) out.push_back(kDigits[(limbs_[i] >> s) & 0xf]);
  }
  const auto first = out.find_first_not_of('0');
  return out.substr(first);
}

BigNat BigNat::pow2(std::size_t k) {
  std::vector<Limb> limbs(k / kLimbBits + 1);
  limbs.back() = Limb{1} << (k % kLimbBits);
  return from_limbs(std::move(limbs));
}

std::size_t BigNat::bit_len() const {
  if (limbs_.empty()) return 0;
  return limbs_.size() * kLimbBits -
         static_cast<std::size_t>(std::countl_zero(limbs_.back()));
}

bool BigNat::test_bit(std::size_t i) const {
  const std::size_t w = i / kLimbBits;
  return w < limbs_.size() && ((limbs_[w] >> (i % kLimbBits)) & 1u);
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() <=> b.limbs_.size();
  }
  const int c = detail::compare_n(a.limbs_, b.limbs_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

BigNat add(const BigNat& a, const BigNat& b) {
  const auto& big = a.limb_count() >= b.limb_count() ? a : b;
  const auto& small = a.limb_count() >= b.limb_count() ? b : a;
  std::vector<Limb> r(big.limb_count() + 1);
  r.back() = detail::add_n(std::span<Limb>(r).first(big.limb_count()),
                           big.limbs(), small.limbs());
  return BigNat::from_limbs(std::move(r));
}

BigNat mod_pow2(const BigNat& x, std::size_t k) {
  if (x.bit_len() <= k) return x;
  const std::size_t full = k / kLimbBits;
  const std::size_t rem = k % kLimbBits;
  const auto src = x.limbs();
  std::vector<Limb> r(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(
                                                     full + (rem ? 1 : 0)));
  if (rem) r.back() &= (Limb{1} << rem) - 1;
  return BigNat::from_limbs(std::move(r));
}

BigNat mod_pow2(BigNat&& x, std::size_t k) {
  if (x.bit_len() <= k) return std::move(x);
  std::vector<Limb> r = std::move(x).release();
  r.resize(k / kLimbBits + (k % kLimbBits ? 1 : 0));
  if (k % kLimbBits) r.back() &= (Limb{1} << (k % kLimbBits)) - 1;
  return BigNat::from_limbs(std::move(r));
}

BigNat shift_right(BigNat&& x, std::size_t k) {
  const std::size_t words = k / kLimbBits;
  if (words >= x.limb_count()) return BigNat{};
  std::vector<Limb> r = std::move(x).release();
  const std::span<Limb> all(r);
  // rshift runs bottom-up, so the destination may start below the source.
  detail::rshift(all.first(r.size() - words), all.subspan(words),
                 static_cast<unsigned>(k % kLimbBits));
  r.resize(r.size() - words);
  return BigNat::from_limbs(std::move(r));
}

BigNat shift_right(const BigNat& x, std::size_t k) {
  const std::size_t words = k / kLimbBits;
  if (words >= x.limb_count()) return BigNat{};
  const auto src = x.limbs().subspan(words);
  std::vector<Limb> r(src.size());
  detail::rshift(r, src, static_cast<unsigned>(k % kLimbBits));
  return BigNat::from_limbs(std::move(r));
}

BigNat shift_left(const BigNat& x, std::size_t k) {
  if (x.is_zero()) return x;
  const std::size_t words = k / kLimbBits;
  std::vector<Limb> r(words + x.limb_count() + 1);
  r.back() = detail::lshift(
      std::span<Limb>(r).subspan(words, x.limb_count()), x.limbs(),
      static_cast<unsigned>(k % kLimbBits));
  return BigNat::from_limbs(std::move(r));
}

}  // namespace qkdpa
