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
#include <string>

#include "qkdpa/errors.hpp"
#include "qkdpa/pa.hpp"

namespace qkdpa {

BitBlock::BitBlock(BigNat value, std::size_t n) : value_(std::move(value)), n_(n) {
  if (n == 0) throw ParameterError("a bit block needs at least one bit");
  if (value_.bit_len() > n) {
    throw SizeError("value has " + std::to_string(value_.bit_len()) +
                    " bits, block holds " + std::to_string(n));
  }
}

BitBlock import_block(std::span<const std::uint8_t> raw, std::size_t n,
                      WordOrder order) {
  if (n == 0) throw ParameterError("a bit block needs at least one bit");
  const std::size_t nbytes = byte_length(n);
  if (raw.size() < nbytes) {
    throw TruncationError("need " + std::to_string(nbytes) + " bytes for " +
                          std::to_string(n) + " bits, got " +
                          std::to_string(raw.size()));
  }
  raw = raw.first(nbytes);

  std::vector<Limb> limbs((nbytes + 7) / 8);
  for (std::size_t i = 0; i < nbytes; ++i) {
    // i-th byte counted from the least significant end.
    const std::uint8_t byte =
        order == WordOrder::LeastSignificantFirst ? raw[i] : raw[nbytes - 1 - i];
    limbs[i / 8] |= static_cast<Limb>(byte) << (8 * (i % 8));
  }
  const unsigned spare = static_cast<unsigned>(8 * nbytes - n);
  if (spare) {
    const std::uint8_t top = order == WordOrder::LeastSignificantFirst
                                 ? raw[nbytes - 1]
                                 : raw[0];
    if (top >> (8 - spare)) {
      throw FormatError("bits above position " + std::to_string(n) +
                        " must be zero");
    }
  }
  return BitBlock(BigNat::from_limbs(std::move(limbs)), n);
}

std::vector<std::uint8_t> export_block(const BitBlock& x, WordOrder order) {
  const std::size_t nbytes = byte_length(x.size());
  std::vector<std::uint8_t> out(nbytes);
  const auto limbs = x.value().limbs();
  for (std::size_t i = 0; i < nbytes && i / 8 < limbs.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(limbs[i / 8] >> (8 * (i % 8)));
  }
  if (order == WordOrder::MostSignificantFirst) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace qkdpa
