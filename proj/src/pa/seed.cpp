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

// Seeds and test data come from libsodium's deterministic ChaCha20 stream,
// keyed by BLAKE2b over (domain, rng_seed, stream).

#include <sodium.h>

#include <array>
#include <mutex>
#include <string_view>

#include "qkdpa/errors.hpp"
#include "qkdpa/pa.hpp"

namespace qkdpa {
namespace {

void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw Error("libsodium initialisation failed");
  });
}

void put_u64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::vector<std::uint8_t> stream_bytes(std::string_view domain,
                                       std::size_t count, std::uint64_t rng_seed,
                                       std::uint64_t stream,
                                       std::uint64_t extra) {
  ensure_sodium();
  std::array<std::uint8_t, 24> msg{};
  put_u64(msg.data(), rng_seed);
  put_u64(msg.data() + 8, stream);
  put_u64(msg.data() + 16, extra);
  std::array<std::uint8_t, randombytes_SEEDBYTES> key{};
  crypto_generichash(key.data(), key.size(), msg.data(), msg.size(),
                     reinterpret_cast<const unsigned char*>(domain.data()),
                     domain.size());
  std::vector<std::uint8_t> out(count);
  if (count) randombytes_buf_deterministic(out.data(), count, key.data());
  return out;
}

BigNat low_bits(std::span<const std::uint8_t> bytes, std::size_t bits) {
  std::vector<Limb> limbs((bytes.size() + 7) / 8);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    limbs[i / 8] |= static_cast<Limb>(bytes[i]) << (8 * (i % 8));
  }
  return mod_pow2(BigNat::from_limbs(std::move(limbs)), bits);
}

}  // namespace

bool HashSeed::valid() const {
  return alpha >= 1 && c.is_odd() && c.bit_len() <= alpha && d.bit_len() <= alpha;
}

HashSeed gen_seed(std::size_t alpha, std::uint64_t rng_seed, std::uint64_t stream) {
  if (alpha == 0) throw ParameterError("seed width must be at least one bit");
  const std::size_t nbytes = byte_length(alpha);
  const auto bytes =
      stream_bytes("qkdpa.seed.v1", 2 * nbytes, rng_seed, stream, alpha);
  const std::span<const std::uint8_t> all(bytes);
  HashSeed s;
  s.alpha = alpha;
  s.c = low_bits(all.first(nbytes), alpha);
  if (!s.c.is_odd()) s.c = add(s.c, BigNat(1));
  s.d = low_bits(all.subspan(nbytes), alpha);
  return s;
}

std::vector<std::uint8_t> random_bytes(std::size_t count, std::uint64_t rng_seed,
                                       std::uint64_t stream) {
  return stream_bytes("qkdpa.data.v1", count, rng_seed, stream, 0);
}

BitBlock random_block(std::size_t n, std::uint64_t rng_seed, std::uint64_t stream) {
  auto bytes = random_bytes(byte_length(n), rng_seed, stream);
  if (n % 8) bytes.back() &= static_cast<std::uint8_t>((1u << (n % 8)) - 1);
  return import_block(bytes, n);
}

}  // namespace qkdpa
