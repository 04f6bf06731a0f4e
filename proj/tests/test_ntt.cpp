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

#include "oracles.hpp"
#include "qkdpa/errors.hpp"
#include "qkdpa/ntt.hpp"

namespace qkdpa {
namespace {

using testing::direct_cyclic;
using testing::direct_dft;
using testing::fermat;
using testing::from_mpz;
using testing::random_bits;
using testing::to_mpz;
using testing::values;

// Residues drawn uniformly from [0, 2^N'], so the extreme value 2^N' shows up
// now and then at small widths.
RingVector random_vector(std::mt19937_64& rng, const SsaPlan& plan) {
  RingVector v;
  const mpz_class F = fermat(plan.ring_bits);
  for (std::size_t i = 0; i < plan.pieces(); ++i) {
    BigNat x = random_bits(rng, plan.ring_bits + 1);
    mpz_class m = to_mpz(x);
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), F.get_mpz_t());
    if (rng() % 8 == 0) m = F - 1;
    v.emplace_back(from_mpz(m), plan);
  }
  return v;
}

void expect_in_range(const RingVector& v, const SsaPlan& plan) {
  for (const auto& e : v) ASSERT_TRUE(e.in_range(plan.ring_bits));
}

TEST(Plan, PieceWidthExample) {
  const SsaPlan p = make_plan(1u << 20, 10);
  EXPECT_EQ(p.k, 10u);
  EXPECT_EQ(p.pieces(), 1024u);
  EXPECT_EQ(p.piece_bits, 2048u);
  EXPECT_GE(p.ring_bits, 2 * p.piece_bits + p.k + 3);
  EXPECT_TRUE(p.valid());
}

TEST(Plan, DegenerateSize) {
  const SsaPlan p = make_plan(1);
  EXPECT_TRUE(p.valid());
  EXPECT_GE(p.n_bits, 1u);
}

TEST(Plan, InvariantsHoldAcrossSizes) {
  std::mt19937_64 rng(21);
  std::vector<std::size_t> sizes = {1, 2, 3, 63, 64, 65, 1000, 4097, 1u << 16,
                                    1000000, 1u << 24, 100000000};
  for (int i = 0; i < 300; ++i) sizes.push_back(1 + rng() % (1u << 26));
  for (auto n : sizes) {
    const SsaPlan p = make_plan(n);
    ASSERT_TRUE(p.valid()) << n;
    EXPECT_GE(p.n_bits, n);
    EXPECT_EQ(p.piece_bits * p.pieces(), 2 * p.n_bits);
    EXPECT_GE(p.ring_bits, 2 * p.piece_bits + p.k + 3);
    // 2^(2N'/K) has order exactly K and K^-1 exists as a shift.
    EXPECT_EQ((2 * p.ring_bits) % p.pieces(), 0u);
  }
}

TEST(Plan, EveryExplicitKIsValid) {
  for (std::size_t n : {1u, 100u, 12345u, 1u << 20}) {
    for (unsigned k = 1; k <= 14; ++k) EXPECT_TRUE(make_plan(n, k).valid()) << n << " " << k;
  }
}

TEST(Plan, KGrowsWithSize) {
  unsigned prev = 0;
  for (std::size_t n = 1u << 10; n <= (1u << 26); n <<= 2) {
    const unsigned k = make_plan(n).k;
    EXPECT_GE(k, prev) << n;
    prev = k;
  }
}

TEST(Split, ZeroGivesZeroPieces) {
  const SsaPlan p = make_plan(4096, 4);
  const RingVector v = split(BigNat{}, p);
  ASSERT_EQ(v.size(), 16u);
  for (const auto& e : v) EXPECT_TRUE(e.value().is_zero());
}

TEST(Split, RoundTrip) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 40000;
    const SsaPlan p = make_plan(n);
    const BigNat a = random_bits(rng, n);
    const RingVector v = split(a, p);
    ASSERT_EQ(v.size(), p.pieces());
    for (const auto& e : v) ASSERT_LT(e.value().bit_len(), p.piece_bits + 1);
    ASSERT_EQ(combine_and_carry(v, p), a);
  }
}

TEST(Split, SingleBitPosition) {
  const SsaPlan p = make_plan(5000, 5);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t i = rng() % p.n_bits;
    const RingVector v = split(BigNat::pow2(i), p);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == i / p.piece_bits) {
        EXPECT_EQ(v[j].value(), BigNat::pow2(i % p.piece_bits));
      } else {
        EXPECT_TRUE(v[j].value().is_zero());
      }
    }
  }
}

TEST(Split, OversizeOperandThrows) {
  const SsaPlan p = make_plan(1000, 3);
  EXPECT_THROW(split(BigNat::pow2(p.n_bits), p), SizeError);
  EXPECT_NO_THROW(split(BigNat::pow2(p.n_bits - 1), p));
}

TEST(Ntt, ZeroMapsToZero) {
  const SsaPlan p = make_plan(2000, 4);
  const RingVector z(p.pieces(), RingElement(p));
  EXPECT_EQ(forward_ntt(z, p), z);
  EXPECT_EQ(inverse_ntt(z, p), z);
}

TEST(Ntt, ImpulseGivesAllOnes) {
  for (unsigned k = 1; k <= 8; ++k) {
    const SsaPlan p = make_plan(3000, k);
    RingVector v(p.pieces(), RingElement(p));
    v[0] = RingElement(BigNat(1), p);
    const RingVector out = forward_ntt(v, p);
    for (const auto& e : out) EXPECT_EQ(e.value(), BigNat(1)) << k;
  }
}

TEST(Ntt, MatchesDirectDefinition) {
  std::mt19937_64 rng(24);
  for (unsigned k = 1; k <= 6; ++k) {
    for (std::size_t n : {100u, 1000u}) {
      const SsaPlan p = make_plan(n, k);
      const RingVector v = random_vector(rng, p);
      const RingVector f = forward_ntt(v, p);
      expect_in_range(f, p);
      EXPECT_EQ(values(f), direct_dft(values(v), p.ring_bits, false));
      const RingVector g = inverse_ntt(v, p);
      expect_in_range(g, p);
      EXPECT_EQ(values(g), direct_dft(values(v), p.ring_bits, true));
    }
  }
}

TEST(Ntt, InversionBothWays) {
  std::mt19937_64 rng(25);
  for (unsigned k = 1; k <= 10; ++k) {
    const SsaPlan p = make_plan(1 + rng() % 20000, k);
    const RingVector v = random_vector(rng, p);
    const RingVector f = forward_ntt(v, p);
    EXPECT_EQ(inverse_ntt(f, p), v) << k;
    EXPECT_EQ(forward_ntt(inverse_ntt(v, p), p), v) << k;
  }
}

TEST(Ntt, LengthMismatchThrows) {
  const SsaPlan p = make_plan(1000, 3);
  RingVector v(p.pieces() - 1, RingElement(p));
  EXPECT_THROW(forward_ntt(v, p), SizeError);
  EXPECT_THROW(inverse_ntt(v, p), SizeError);
  RingVector w(p.pieces(), RingElement(p));
  EXPECT_THROW(pointwise_mul(v, w, p), SizeError);
  EXPECT_THROW(pointwise_mul(w, v, p), SizeError);
  EXPECT_THROW(combine_and_carry(v, p), SizeError);
}

TEST(Ntt, ConvolutionTheorem) {
  std::mt19937_64 rng(26);
  for (unsigned k : {2u, 3u, 4u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const SsaPlan p = make_plan(200 + rng() % 3000, k);
      const RingVector u = random_vector(rng, p);
      const RingVector v = random_vector(rng, p);
      const RingVector c =
          inverse_ntt(pointwise_mul(forward_ntt(u, p), forward_ntt(v, p), p), p);
      expect_in_range(c, p);
      EXPECT_EQ(values(c), direct_cyclic(values(u), values(v), p.ring_bits));
    }
  }
}

TEST(Pointwise, MatchesModularOracleAt256) {
  SsaPlan p;
  p.k = 2;
  p.ring_bits = 256;
  p.n_bits = 8;
  p.piece_bits = 4;
  std::mt19937_64 rng(27);
  const mpz_class F = fermat(256);
  for (int rep = 0; rep < 500; ++rep) {
    const RingVector u = random_vector(rng, p);
    const RingVector v = random_vector(rng, p);
    const RingVector w = pointwise_mul(u, v, p);
    expect_in_range(w, p);
    for (std::size_t i = 0; i < u.size(); ++i) {
      mpz_class e = to_mpz(u[i].value()) * to_mpz(v[i].value());
      mpz_mod(e.get_mpz_t(), e.get_mpz_t(), F.get_mpz_t());
      ASSERT_EQ(to_mpz(w[i].value()), e);
    }
  }
}

TEST(Pointwise, OnesAndZeros) {
  std::mt19937_64 rng(28);
  const SsaPlan p = make_plan(5000, 4);
  const RingVector v = random_vector(rng, p);
  const RingVector ones(p.pieces(), RingElement(BigNat(1), p));
  const RingVector zeros(p.pieces(), RingElement(p));
  EXPECT_EQ(pointwise_mul(ones, v, p), v);
  EXPECT_EQ(pointwise_mul(zeros, v, p), zeros);
}

TEST(Pointwise, LargeWidthMatchesOracle) {
  // Widths big enough that the elementwise products recurse into Toom-3 and SSA.
  std::mt19937_64 rng(29);
  for (std::size_t bits : {64u * 300, 64u * 5000}) {
    SsaPlan p;
    p.k = 1;
    p.ring_bits = bits;
    p.n_bits = 1;
    p.piece_bits = 1;
    const RingVector u = random_vector(rng, p);
    const RingVector v = random_vector(rng, p);
    const RingVector w = pointwise_mul(u, v, p);
    const mpz_class F = fermat(bits);
    for (std::size_t i = 0; i < u.size(); ++i) {
      mpz_class e = to_mpz(u[i].value()) * to_mpz(v[i].value());
      mpz_mod(e.get_mpz_t(), e.get_mpz_t(), F.get_mpz_t());
      EXPECT_EQ(to_mpz(w[i].value()), e);
    }
  }
}

TEST(RingElement, ReducesWideValues) {
  std::mt19937_64 rng(30);
  const SsaPlan p = make_plan(3000, 3);
  const mpz_class F = fermat(p.ring_bits);
  for (int i = 0; i < 200; ++i) {
    const BigNat x = random_bits(rng, rng() % (5 * p.ring_bits));
    const RingElement e(x, p);
    ASSERT_TRUE(e.in_range(p.ring_bits));
    mpz_class m = to_mpz(x);
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), F.get_mpz_t());
    ASSERT_EQ(to_mpz(e.value()), m);
  }
}

TEST(Combine, ZeroPieces) {
  const SsaPlan p = make_plan(3000, 3);
  EXPECT_TRUE(combine_and_carry(RingVector(p.pieces(), RingElement(p)), p).is_zero());
}

TEST(Combine, SinglePieceLandsAtStride) {
  std::mt19937_64 rng(31);
  const SsaPlan p = make_plan(3000, 3);
  for (std::size_t j = 0; j < p.pieces(); ++j) {
    const BigNat w = random_bits(rng, p.ring_bits);
    RingVector v(p.pieces(), RingElement(p));
    v[j] = RingElement(w, p);
    EXPECT_EQ(combine_and_carry(v, p), shift_left(w, j * p.piece_bits));
  }
}

TEST(Combine, OverlappingPiecesCarry) {
  std::mt19937_64 rng(32);
  const SsaPlan p = make_plan(3000, 4);
  const mpz_class F = fermat(p.ring_bits);
  for (int rep = 0; rep < 50; ++rep) {
    const RingVector v = random_vector(rng, p);
    mpz_class expected = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      mpz_class t = to_mpz(v[j].value());
      t <<= j * p.piece_bits;
      expected += t;
    }
    EXPECT_EQ(to_mpz(combine_and_carry(v, p)), expected);
  }
}

TEST(Pipeline, FullStepsMatchSchoolbookAt2To14) {
  std::mt19937_64 rng(33);
  const std::size_t n = 1u << 14;
  for (int rep = 0; rep < 20; ++rep) {
    const BigNat a = random_bits(rng, n);
    const BigNat b = random_bits(rng, n);
    const SsaPlan p = make_plan(n);
    const RingVector fa = forward_ntt(split(a, p), p);
    const RingVector fb = forward_ntt(split(b, p), p);
    const RingVector c = inverse_ntt(pointwise_mul(fa, fb, p), p);
    expect_in_range(c, p);
    EXPECT_EQ(combine_and_carry(c, p), mul(a, b, MulAlgorithm::Schoolbook));
  }
}

TEST(Pipeline, EveryKAgreesWithOracle) {
  std::mt19937_64 rng(34);
  const std::size_t n = 20000;
  const BigNat a = random_bits(rng, n);
  const BigNat b = random_bits(rng, n);
  const mpz_class expected = to_mpz(a) * to_mpz(b);
  for (unsigned k = 1; k <= 12; ++k) {
    const SsaPlan p = make_plan(n, k);
    const RingVector c = inverse_ntt(
        pointwise_mul(forward_ntt(split(a, p), p), forward_ntt(split(b, p), p), p), p);
    EXPECT_EQ(to_mpz(combine_and_carry(c, p)), expected) << k;
  }
}

TEST(SsaMultiply, ZeroOperand) {
  EXPECT_TRUE(ssa_multiply(BigNat{}, BigNat(5)).is_zero());
  EXPECT_TRUE(ssa_multiply(BigNat(5), BigNat{}).is_zero());
}

}  // namespace
}  // namespace qkdpa
