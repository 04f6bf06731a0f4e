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

#include <string>

#include "qkdpa/errors.hpp"
#include "qkdpa/pa.hpp"

namespace qkdpa {

BitBlock compress(const BitBlock& x, const HashSeed& seed, std::size_t r,
                  MulAlgorithm alg, const ThresholdTable& thresholds) {
  if (x.size() != seed.alpha) {
    throw ParameterError("block has " + std::to_string(x.size()) +
                         " bits but the seed is for " +
                         std::to_string(seed.alpha));
  }
  if (r < 1 || r > seed.alpha) {
    throw ParameterError("output length must lie in [1, " +
                         std::to_string(seed.alpha) + "], got " +
                         std::to_string(r));
  }
  const std::size_t alpha = seed.alpha;
  BigNat y = fused_mul_add(seed.d, seed.c, x.value(), alg, thresholds);
  return BitBlock(shift_right(mod_pow2(std::move(y), alpha), alpha - r), r);
}

BitBlock pa_round(const BitBlock& x, const PAParams& params,
                  const HashSeed& seed, const PaOptions& opts) {
  if (params.n != x.size()) {
    throw ParameterError("parameters are for " + std::to_string(params.n) +
                         "-bit blocks, got " + std::to_string(x.size()));
  }
  if (opts.enforce_security) {
    const Validation v = validate(params);
    if (!v.ok) throw SecurityBoundError(params.r, v.r_max);
  }
  return compress(x, seed, params.r, opts.alg, opts.thresholds);
}

}  // namespace qkdpa
