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

// Collision audit of the family G = {g_{c,d} : c odd, d} on small widths.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "qkdpa/bignum.hpp"
#include "qkdpa/pa.hpp"

namespace qkdpa {

/// 1 iff x != y and g(x) == g(y) for the member given by seed and r.
int delta(const HashSeed& seed, std::size_t r, const BigNat& x, const BigNat& y);

enum class AuditMode { Exhaustive, Sampled };

std::string_view to_string(AuditMode mode);

struct AuditOptions {
  AuditMode mode = AuditMode::Exhaustive;
  /// Largest alpha the exhaustive mode accepts.
  std::size_t max_exhaustive_alpha = 12;
  /// Sampled mode: number of seeds drawn, and of input pairs per run.
  std::uint64_t seed_samples = 4096;
  std::uint64_t pair_samples = 256;
  std::uint64_t rng_seed = 1;
};

struct CollisionReport {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  AuditMode mode = AuditMode::Exhaustive;
  /// |G| = 2^(alpha-1) * 2^alpha, as a double to survive large alpha.
  double family_size = 0;
  std::uint64_t seeds_examined = 0;
  std::uint64_t pairs_examined = 0;
  std::pair<std::uint64_t, std::uint64_t> worst_pair{0, 0};
  std::uint64_t worst_delta = 0;
  /// worst_delta over the number of seeds examined (|G| when exhaustive).
  double worst_ratio = 0;
  double bound_1_over_B = 0;
  double bound_2_over_B = 0;
  bool within_1_over_B = false;
  bool within_2_over_B = false;
};

/// Worst-case collision count over pairs x != y. Exhaustive mode covers
/// every seed and every pair exactly and needs alpha <= max_exhaustive_alpha
/// (ResourceGuardError otherwise). Sampled mode draws seeds and pairs and
/// accepts alpha <= 64; its ratio is an estimate over the sample.
CollisionReport audit_family(std::size_t alpha, std::size_t beta,
                             const AuditOptions& opts = {});

}  // namespace qkdpa
