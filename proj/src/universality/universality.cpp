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

#include "qkdpa/universality.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qkdpa/errors.hpp"

namespace qkdpa {
namespace {

void fill_bounds(CollisionReport& rep) {
  rep.family_size = std::ldexp(1.0, static_cast<int>(2 * rep.alpha - 1));
  rep.bound_1_over_B = std::ldexp(1.0, -static_cast<int>(rep.beta));
  rep.bound_2_over_B = std::ldexp(1.0, 1 - static_cast<int>(rep.beta));
  rep.within_1_over_B = rep.worst_ratio <= rep.bound_1_over_B;
  rep.within_2_over_B = rep.worst_ratio <= rep.bound_2_over_B;
}

// For a fixed odd c and difference t = c(y - x) mod 2^a, the value
// u = c x + d runs over every residue as d does, and c y + d = u + t. So
//
//   delta_G(x, y) = sum over odd c of f[c (y - x) mod 2^a],
//   f[t] = #{u : top(u) == top(u + t mod 2^a)},
//
// which depends on x and y only through y - x. Every seed and every pair
// is still accounted for exactly.
CollisionReport audit_exhaustive(std::size_t alpha, std::size_t beta) {
  const std::uint64_t size = std::uint64_t{1} << alpha;
  const std::uint64_t mask = size - 1;
  const unsigned drop = static_cast<unsigned>(alpha - beta);

  std::vector<std::uint64_t> f(size, 0);
  for (std::uint64_t t = 0; t < size; ++t) {
    std::uint64_t count = 0;
    for (std::uint64_t u = 0; u < size; ++u) {
      count += (u >> drop) == (((u + t) & mask) >> drop);
    }
    f[t] = count;
  }

  CollisionReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.mode = AuditMode::Exhaustive;
  rep.seeds_examined = size / 2 * size;
  rep.pairs_examined = size * (size - 1) / 2;
  for (std::uint64_t diff = 1; diff < size; ++diff) {
    std::uint64_t total = 0;
    for (std::uint64_t c = 1; c < size; c += 2) total += f[(c * diff) & mask];
    if (total > rep.worst_delta || diff == 1) {
      rep.worst_delta = total;
      rep.worst_pair = {0, diff};
    }
  }
  rep.worst_ratio = static_cast<double>(rep.worst_delta) /
                    static_cast<double>(rep.seeds_examined);
  fill_bounds(rep);
  return rep;
}

std::uint64_t draw(std::vector<std::uint8_t>::const_iterator& it) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(*it++) << (8 * i);
  return v;
}

CollisionReport audit_sampled(std::size_t alpha, std::size_t beta,
                              const AuditOptions& opts) {
  if (opts.seed_samples == 0 || opts.pair_samples == 0) {
    throw ParameterError("sampled audit needs at least one seed and one pair");
  }
  const std::uint64_t mask =
      alpha == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << alpha) - 1;

  std::vector<HashSeed> seeds;
  seeds.reserve(opts.seed_samples);
  for (std::uint64_t i = 0; i < opts.seed_samples; ++i) {
    seeds.push_back(gen_seed(alpha, opts.rng_seed, i));
  }
  const auto bytes = random_bytes(16 * opts.pair_samples, opts.rng_seed,
                                  ~std::uint64_t{0});
  auto it = bytes.cbegin();

  CollisionReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.mode = AuditMode::Sampled;
  rep.seeds_examined = opts.seed_samples;
  rep.pairs_examined = opts.pair_samples;
  bool first = true;
  for (std::uint64_t p = 0; p < opts.pair_samples; ++p) {
    const std::uint64_t x = draw(it) & mask;
    std::uint64_t y = draw(it) & mask;
    if (y == x) y = (x + 1) & mask;
    const BitBlock bx(BigNat(x), alpha);
    const BitBlock by(BigNat(y), alpha);
    std::uint64_t total = 0;
    for (const auto& s : seeds) {
      total += compress(bx, s, beta) == compress(by, s, beta);
    }
    if (first || total > rep.worst_delta) {
      rep.worst_delta = total;
      rep.worst_pair = {x, y};
      first = false;
    }
  }
  rep.worst_ratio = static_cast<double>(rep.worst_delta) /
                    static_cast<double>(rep.seeds_examined);
  fill_bounds(rep);
  return rep;
}

}  // namespace

int delta(const HashSeed& seed, std::size_t r, const BigNat& x, const BigNat& y) {
  if (x == y) return 0;
  const BitBlock bx(x, seed.alpha);
  const BitBlock by(y, seed.alpha);
  return compress(bx, seed, r) == compress(by, seed, r) ? 1 : 0;
}

std::string_view to_string(AuditMode mode) {
  return mode == AuditMode::Exhaustive ? "exhaustive" : "sampled";
}

CollisionReport audit_family(std::size_t alpha, std::size_t beta,
                             const AuditOptions& opts) {
  if (alpha < 1 || beta < 1 || beta > alpha) {
    throw ParameterError("audit needs 1 <= beta <= alpha, got alpha=" +
                         std::to_string(alpha) + " beta=" + std::to_string(beta));
  }
  if (opts.mode == AuditMode::Exhaustive) {
    if (alpha > opts.max_exhaustive_alpha) {
      throw ResourceGuardError(
          "exhaustive audit is limited to alpha <= " +
          std::to_string(opts.max_exhaustive_alpha) +
          "; use sampled mode for alpha=" + std::to_string(alpha));
    }
    if (alpha > 20) {
      throw ResourceGuardError("exhaustive audit cannot exceed alpha=20");
    }
    return audit_exhaustive(alpha, beta);
  }
  if (alpha > 64) {
    throw ResourceGuardError("sampled audit is limited to alpha <= 64");
  }
  return audit_sampled(alpha, beta, opts);
}

}  // namespace qkdpa
