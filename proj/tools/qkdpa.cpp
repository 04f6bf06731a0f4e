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

// qkdpa: benchmark, batch privacy amplification, family audit and security
// arithmetic from the command line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qkdpa/bench.hpp"
#include "qkdpa/errors.hpp"

namespace {

using namespace qkdpa;

// Raw flag text, converted once CLI11 has parsed everything.
struct Flags {
  std::string sizes;
  std::optional<double> ratio;
  std::optional<std::uint64_t> out_bits;
  std::string epsilon = "2^-40";
  std::optional<double> hmin;
  std::uint64_t rng_seed = 1;
  std::string in_path;
  std::string out_path;
  std::string report_path;
  std::string alg = "auto";
  std::string thresholds;
  std::string format = "csv";
  std::string order = "lsf";
  unsigned trials = 5;
  std::string scope = "pipeline";
  std::string block_bits;
  std::string seed_c;
  std::string seed_d;
  bool no_enforce = false;
  std::size_t alpha = 6;
  std::size_t beta = 3;
  bool sampled = false;
  std::uint64_t seed_samples = 4096;
  std::uint64_t pair_samples = 256;
  std::size_t max_exhaustive_alpha = 12;
};

RunConfig to_config(const Flags& f) {
  RunConfig cfg;
  if (!f.sizes.empty()) cfg.sizes = parse_sizes(f.sizes);
  cfg.ratio = f.ratio;
  cfg.out_bits = f.out_bits;
  cfg.epsilon = parse_probability(f.epsilon);
  cfg.h_min = f.hmin;
  cfg.enforce = !f.no_enforce;
  cfg.rng_seed = f.rng_seed;
  if (!f.in_path.empty()) cfg.in_path = f.in_path;
  if (!f.out_path.empty()) cfg.out_path = f.out_path;
  cfg.format = parse_format(f.format);
  const auto alg = parse_mul_algorithm(f.alg);
  if (!alg) throw ParameterError("unknown algorithm '" + f.alg + "'");
  cfg.alg = *alg;
  if (!f.thresholds.empty()) cfg.thresholds = parse_thresholds(f.thresholds);
  cfg.order = parse_order(f.order);
  cfg.trials = f.trials;
  cfg.scope = parse_scope(f.scope);
  if (!f.block_bits.empty()) cfg.block_bits = parse_size(f.block_bits);
  if (!f.seed_c.empty()) cfg.seed_c_hex = f.seed_c;
  if (!f.seed_d.empty()) cfg.seed_d_hex = f.seed_d;
  cfg.alpha = f.alpha;
  cfg.beta = f.beta;
  cfg.audit.mode = f.sampled ? AuditMode::Sampled : AuditMode::Exhaustive;
  cfg.audit.seed_samples = f.seed_samples;
  cfg.audit.pair_samples = f.pair_samples;
  cfg.audit.max_exhaustive_alpha = f.max_exhaustive_alpha;
  cfg.audit.rng_seed = f.rng_seed;
  cfg.validate();
  return cfg;
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--rng-seed", f.rng_seed, "Shared seed value for hash seeds and test data");
  app->add_option("--format", f.format, "Report format: csv or json");
}

void add_length(CLI::App* app, Flags& f) {
  auto* ratio = app->add_option("--ratio", f.ratio, "Output/input length ratio in (0, 1]");
  auto* bits = app->add_option("--out-bits", f.out_bits, "Output length in bits");
  ratio->excludes(bits);
  app->add_option("--epsilon", f.epsilon, "Security parameter, e.g. 2^-40 or 1e-12");
  app->add_option("--hmin", f.hmin, "Smooth min-entropy of one block, in bits");
}

void add_arith(CLI::App* app, Flags& f) {
  app->add_option("--alg", f.alg, "auto, schoolbook, karatsuba, toom3 or ssa");
  app->add_option("--thresholds", f.thresholds,
                  "Band limits in limbs: schoolbook,karatsuba,toom3");
  app->add_option("--order", f.order, "Byte order of key files: lsf or msf");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy amplification with a modular-arithmetic hash"};
  app.require_subcommand(1);
  Flags f;

  auto* bench = app.add_subcommand("bench", "Time the hashing pipeline over block sizes");
  bench->add_option("--sizes", f.sizes, "Comma separated block sizes, e.g. 1M,2M,10^7");
  bench->add_option("--trials", f.trials, "Timed trials per size (at least 5 are run)");
  bench->add_option("--scope", f.scope, "pipeline or multiply");
  bench->add_option("--out", f.out_path, "Write the produced keys here");
  bench->add_option("--report", f.report_path, "Write the report here instead of stdout");
  add_common(bench, f);
  add_length(bench, f);
  add_arith(bench, f);

  auto* pa = app.add_subcommand("pa", "Hash every block of a key file");
  pa->add_option("--in", f.in_path, "Input key file")->required();
  pa->add_option("--out", f.out_path, "Output key file")->required();
  pa->add_option("--block-bits", f.block_bits, "Bits per block (default: whole file)");
  pa->add_option("--seed-c", f.seed_c, "Fixed multiplier c in hex (odd)");
  pa->add_option("--seed-d", f.seed_d, "Fixed offset d in hex");
  pa->add_flag("--no-enforce", f.no_enforce, "Do not reject lengths above the security bound");
  add_common(pa, f);
  add_length(pa, f);
  add_arith(pa, f);

  auto* audit = app.add_subcommand("audit", "Collision audit of the hash family");
  audit->add_option("--alpha", f.alpha, "Input width in bits");
  audit->add_option("--beta", f.beta, "Output width in bits");
  audit->add_flag("--sampled", f.sampled, "Sample seeds and pairs instead of enumerating");
  audit->add_option("--seed-samples", f.seed_samples, "Seeds drawn in sampled mode");
  audit->add_option("--pair-samples", f.pair_samples, "Pairs drawn in sampled mode");
  audit->add_option("--max-alpha", f.max_exhaustive_alpha, "Largest alpha for exhaustive mode");
  audit->add_option("--out", f.out_path, "Write the report here instead of stdout");
  add_common(audit, f);

  auto* security = app.add_subcommand("security", "Maximum key length and leftover bound");
  security->add_option("--hmin", f.hmin, "Smooth min-entropy in bits")->required();
  security->add_option("--epsilon", f.epsilon, "Security parameter, e.g. 2^-40");
  security->add_option("--out-bits", f.out_bits, "Proposed output length");

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = to_config(f);
    if (*bench) {
      const BenchResult res = run_bench(cfg, &std::cerr);
      for (const auto& [n, why] : res.skipped) {
        std::cerr << "skipped " << n << " bits: " << why << '\n';
      }
      if (f.report_path.empty()) {
        write_bench(std::cout, res.records, cfg.format);
      } else {
        std::ostringstream text;
        write_bench(text, res.records, cfg.format);
        const std::string s = text.str();
        write_file_atomic(f.report_path, std::vector<std::uint8_t>(s.begin(), s.end()));
      }
      return 0;
    }
    if (*pa) return run_pa(cfg, std::cout, std::cerr);
    if (*audit) {
      run_audit(cfg, std::cout);
      return 0;
    }
    if (*security) {
      const std::uint64_t r =
          cfg.out_bits.value_or(max_key_length(*cfg.h_min, cfg.epsilon));
      const SecurityBudget b = make_budget(*cfg.h_min, cfg.epsilon, r);
      write_budget(std::cout, b);
      return b.ok ? 0 : 2;
    }
  } catch (const SecurityBoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
