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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "qkdpa/errors.hpp"
#include "qkdpa/universality.hpp"

namespace qkdpa {
namespace {

HashSeed seed_of(std::uint64_t c, std::uint64_t d, std::size_t alpha) {
  return {BigNat(c), BigNat(d), alpha};
}

std::uint64_t g(std::uint64_t c, std::uint64_t d, std::uint64_t x, unsigned a,
                unsigned b) {
  return ((c * x + d) & ((1ull << a) - 1)) >> (a - b);
}

// Every seed against every pair x < y, straight from the definition.
struct BruteForce {
  std::uint64_t worst = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> per_pair;
};

BruteForce brute_force(unsigned a, unsigned b) {
  const std::uint64_t size = 1ull << a;
  std::vector<std::uint64_t> counts(size * size, 0);
  std::vector<std::uint64_t> h(size);
  for (std::uint64_t c = 1; c < size; c += 2) {
    for (std::uint64_t d = 0; d < size; ++d) {
      for (std::uint64_t x = 0; x < size; ++x) h[x] = g(c, d, x, a, b);
      for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t y = x + 1; y < size; ++y) counts[x * size + y] += h[x] == h[y];
      }
    }
  }
  BruteForce out;
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t y = x + 1; y < size; ++y) {
      const auto v = counts[x * size + y];
      out.per_pair[{x, y}] = v;
      out.worst = std::max(out.worst, v);
    }
  }
  return out;
}

TEST(Delta, Examples) {
  const HashSeed id = seed_of(1, 0, 4);
  EXPECT_EQ(delta(id, 2, BigNat(5), BigNat(5)), 0);
  EXPECT_EQ(delta(id, 2, BigNat(0), BigNat(1)), 1);
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (std::uint64_t y = 0; y < 16; ++y) {
      EXPECT_EQ(delta(id, 4, BigNat(x), BigNat(y)), 0);
    }
  }
}

TEST(Delta, Symmetric) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 5000; ++i) {
    const unsigned a = 1 + rng() % 12;
    const std::uint64_t m = (1ull << a) - 1;
    const HashSeed s = seed_of((rng() & m) | 1, rng() & m, a);
    const unsigned r = 1 + rng() % a;
    const BigNat x(rng() & m), y(rng() & m);
    EXPECT_EQ(delta(s, r, x, y), delta(s, r, y, x));
  }
}

TEST(Delta, RowSumsMatchBucketCounts) {
  const unsigned a = 6, b = 3;
  for (std::uint64_t c = 1; c < 64; c += 2) {
    for (std::uint64_t d = 0; d < 64; d += 5) {
      std::map<std::uint64_t, std::uint64_t> bucket;
      for (std::uint64_t x = 0; x < 64; ++x) ++bucket[g(c, d, x, a, b)];
      const HashSeed s = seed_of(c, d, a);
      for (std::uint64_t x = 0; x < 64; ++x) {
        int row = 0;
        for (std::uint64_t y = 0; y < 64; ++y) row += delta(s, b, BigNat(x), BigNat(y));
        ASSERT_EQ(static_cast<std::uint64_t>(row), bucket[g(c, d, x, a, b)] - 1);
      }
    }
  }
}

TEST(Audit, HandTableAlphaTwoBetaOne) {
  const std::map<std::pair<std::uint64_t, std::uint64_t>, int> expected = {
      {{0, 1}, 4}, {{0, 2}, 0}, {{0, 3}, 4}, {{1, 2}, 4}, {{1, 3}, 0}, {{2, 3}, 4}};
  for (auto [pair, count] : expected) {
    int sum = 0;
    for (std::uint64_t c : {1, 3}) {
      for (std::uint64_t d = 0; d < 4; ++d) {
        sum += delta(seed_of(c, d, 2), 1, BigNat(pair.first), BigNat(pair.second));
      }
    }
    EXPECT_EQ(sum, count) << pair.first << "," << pair.second;
  }
  const CollisionReport rep = audit_family(2, 1);
  EXPECT_EQ(rep.family_size, 8.0);
  EXPECT_EQ(rep.worst_delta, 4u);
  EXPECT_EQ(rep.worst_ratio, 0.5);
  EXPECT_EQ(expected.at({rep.worst_pair.first, rep.worst_pair.second}), 4);
}

TEST(Audit, AlphaSixBetaThree) {
  const CollisionReport rep = audit_family(6, 3);
  EXPECT_EQ(rep.family_size, 2048.0);
  EXPECT_EQ(rep.seeds_examined, 2048u);
  EXPECT_EQ(rep.bound_2_over_B, 0.25);
  EXPECT_EQ(rep.bound_1_over_B, 0.125);
  EXPECT_LE(rep.worst_ratio, 0.25);
  EXPECT_TRUE(rep.within_2_over_B);
  EXPECT_EQ(rep.within_1_over_B, rep.worst_ratio <= 0.125);
  EXPECT_EQ(rep.mode, AuditMode::Exhaustive);
}

TEST(Audit, MatchesLiteralEnumeration) {
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned b = 1; b <= a; ++b) {
      const BruteForce bf = brute_force(a, b);
      const CollisionReport rep = audit_family(a, b);
      ASSERT_EQ(rep.worst_delta, bf.worst) << a << " " << b;
      if (a > 1) {
        const auto [x, y] = rep.worst_pair;
        EXPECT_EQ(bf.per_pair.at({std::min(x, y), std::max(x, y)}), rep.worst_delta);
      }
      EXPECT_EQ(rep.family_size, std::ldexp(1.0, 2 * a - 1));
      EXPECT_DOUBLE_EQ(rep.worst_ratio, bf.worst / rep.family_size);
    }
  }
}

// The literal enumeration again, this time through the library's delta().
TEST(Audit, MatchesDeltaEnumeration) {
  for (unsigned a = 2; a <= 4; ++a) {
    for (unsigned b = 1; b <= a; ++b) {
      std::uint64_t worst = 0;
      const std::uint64_t size = 1ull << a;
      for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t y = x + 1; y < size; ++y) {
          std::uint64_t sum = 0;
          for (std::uint64_t c = 1; c < size; c += 2) {
            for (std::uint64_t d = 0; d < size; ++d) {
              sum += delta(seed_of(c, d, a), b, BigNat(x), BigNat(y));
            }
          }
          worst = std::max(worst, sum);
        }
      }
      EXPECT_EQ(audit_family(a, b).worst_delta, worst) << a << " " << b;
    }
  }
}

TEST(Audit, FullWidthOutputHasNoCollisions) {
  for (unsigned a = 1; a <= 8; ++a) {
    EXPECT_EQ(audit_family(a, a).worst_delta, 0u) << a;
    EXPECT_EQ(brute_force(std::min(a, 6u), std::min(a, 6u)).worst, 0u);
  }
}

TEST(Audit, TwoOverBHoldsUpToAlphaTen) {
  for (unsigned a = 1; a <= 10; ++a) {
    for (unsigned b = 1; b <= a; ++b) {
      const CollisionReport rep = audit_family(a, b);
      EXPECT_TRUE(rep.within_2_over_B) << a << " " << b << " ratio " << rep.worst_ratio;
      EXPECT_LE(rep.worst_ratio, std::ldexp(1.0, 1 - static_cast<int>(b)));
    }
  }
}

TEST(Audit, Guards) {
  EXPECT_THROW(audit_family(13, 3), ResourceGuardError);
  AuditOptions wide;
  wide.max_exhaustive_alpha = 40;
  EXPECT_THROW(audit_family(21, 3, wide), ResourceGuardError);
  EXPECT_THROW(audit_family(6, 0), ParameterError);
  EXPECT_THROW(audit_family(6, 7), ParameterError);
  AuditOptions sampled;
  sampled.mode = AuditMode::Sampled;
  EXPECT_THROW(audit_family(65, 3, sampled), ResourceGuardError);
}

TEST(Audit, SampledModeIsLabelledAndDeterministic) {
  AuditOptions opts;
  opts.mode = AuditMode::Sampled;
  opts.seed_samples = 256;
  opts.pair_samples = 32;
  opts.rng_seed = 9;
  const CollisionReport a = audit_family(40, 4, opts);
  EXPECT_EQ(a.mode, AuditMode::Sampled);
  EXPECT_EQ(to_string(a.mode), "sampled");
  EXPECT_EQ(a.seeds_examined, 256u);
  EXPECT_EQ(a.pairs_examined, 32u);
  EXPECT_NE(a.worst_pair.first, a.worst_pair.second);
  EXPECT_GE(a.worst_ratio, 0.0);
  EXPECT_LE(a.worst_ratio, 1.0);
  const CollisionReport b = audit_family(40, 4, opts);
  EXPECT_EQ(a.worst_delta, b.worst_delta);
  EXPECT_EQ(a.worst_pair, b.worst_pair);
}

TEST(Audit, SampledWorstPairCountIsExact) {
  // Recount the reported worst pair over the same sampled seeds.
  AuditOptions opts;
  opts.mode = AuditMode::Sampled;
  opts.seed_samples = 300;
  opts.pair_samples = 20;
  opts.rng_seed = 4;
  const CollisionReport rep = audit_family(10, 3, opts);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < opts.seed_samples; ++i) {
    count += delta(gen_seed(10, opts.rng_seed, i), 3, BigNat(rep.worst_pair.first),
                   BigNat(rep.worst_pair.second));
  }
  EXPECT_EQ(count, rep.worst_delta);
}

}  // namespace
}  // namespace qkdpa
