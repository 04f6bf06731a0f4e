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
#include <chrono>
#include <new>
#include <ostream>

#include "qkdpa/bench.hpp"
#include "qkdpa/errors.hpp"
#include "qkdpa/pa.hpp"

namespace qkdpa {
namespace {

constexpr unsigned kMinTrials = 5;

struct Case {
  std::uint64_t n = 0;
  PAParams params;
  std::vector<std::uint8_t> raw;
  HashSeed seed;
  std::vector<std::uint8_t> key;
  std::vector<double> times;
  bool alive = true;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

// One timed run; returns seconds and leaves the key in c.key.
double run_once(Case& c, const RunConfig& cfg, const PaOptions& opts) {
  using Clock = std::chrono::steady_clock;
  if (cfg.scope == TimingScope::Multiply) {
    const BitBlock x = import_block(c.raw, c.n, cfg.order);
    const auto t0 = Clock::now();
    const BigNat p = mul(c.seed.c, x.value(), cfg.alg, cfg.thresholds);
    const auto t1 = Clock::now();
    if (c.key.empty()) {
      c.key = export_block(BitBlock(
          shift_right(mod_pow2(add(p, c.seed.d), c.n), c.n - c.params.r),
          c.params.r), cfg.order);
    }
    return std::chrono::duration<double>(t1 - t0).count();
  }
  const auto t0 = Clock::now();
  const BitBlock x = import_block(c.raw, c.n, cfg.order);
  const BitBlock y = pa_round(x, c.params, c.seed, opts);
  c.key = export_block(y, cfg.order);
  const auto t1 = Clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

BenchResult run_bench(const RunConfig& cfg, std::ostream* log) {
  cfg.validate();
  const unsigned trials = std::max(cfg.trials, kMinTrials);
  PaOptions opts;
  opts.enforce_security = cfg.h_min.has_value() && cfg.enforce;
  opts.alg = cfg.alg;
  opts.thresholds = cfg.thresholds;

  BenchResult result;
  std::vector<Case> cases;
  for (const std::uint64_t n : cfg.sizes) {
    Case c;
    c.n = n;
    c.params.n = n;
    c.params.r = cfg.output_bits(n);
    c.params.epsilon = cfg.epsilon;
    c.params.h_min = cfg.h_min.value_or(static_cast<double>(n));
    if (opts.enforce_security) {
      const Validation v = validate(c.params);
      if (!v.ok) throw SecurityBoundError(c.params.r, v.r_max);
    }
    try {
      // Inputs and seeds are derived from (rng_seed, n) and prepared outside
      // the timed region.
      c.raw = export_block(random_block(n, cfg.rng_seed, n), cfg.order);
      c.seed = gen_seed(n, cfg.rng_seed, n);
    } catch (const std::bad_alloc&) {
      result.skipped.emplace_back(n, "out of memory preparing input");
      if (log) *log << "skipping " << n << " bits: out of memory\n";
      continue;
    }
    cases.push_back(std::move(c));
  }

  auto attempt = [&](Case& c) -> double {
    try {
      return run_once(c, cfg, opts);
    } catch (const std::bad_alloc&) {
      c.alive = false;
      c.raw.clear();
      c.raw.shrink_to_fit();
      result.skipped.emplace_back(c.n, "out of memory during a trial");
      if (log) *log << "skipping " << c.n << " bits: out of memory\n";
      return 0;
    }
  };

  for (auto& c : cases) {
    if (log) *log << "warming up " << c.n << " bits\n";
    attempt(c);
  }
  for (unsigned t = 0; t < trials; ++t) {
    for (auto& c : cases) {
      if (!c.alive) continue;
      const double s = attempt(c);
      if (c.alive) c.times.push_back(s);
    }
  }

  std::vector<std::uint8_t> keys;
  for (auto& c : cases) {
    if (!c.alive) continue;
    BenchRecord rec;
    rec.block_size = c.n;
    const std::size_t bits = static_cast<std::size_t>(c.n);
    rec.algorithm = cfg.alg == MulAlgorithm::Auto
                        ? select_algorithm(bits, bits, cfg.thresholds)
                        : cfg.alg;
    rec.trials = static_cast<unsigned>(c.times.size());
    rec.elapsed_median = median(c.times);
    rec.throughput_mbps =
        static_cast<double>(c.n) / rec.elapsed_median / 1e6;
    rec.out_bits = c.params.r;
    result.records.push_back(rec);
    keys.insert(keys.end(), c.key.begin(), c.key.end());
  }
  if (cfg.out_path) write_file_atomic(*cfg.out_path, keys);
  return result;
}

}  // namespace qkdpa
