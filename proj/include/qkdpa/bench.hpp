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

// Benchmark harness and batch drivers behind the qkdpa command line tool.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qkdpa/bignum.hpp"
#include "qkdpa/security.hpp"
#include "qkdpa/universality.hpp"

namespace qkdpa {

enum class ReportFormat { Csv, Json };
/// Pipeline times import, hashing and export; Multiply times c * x alone.
enum class TimingScope { Pipeline, Multiply };

/// 1M, 2M, 4M, 8M, 10M, 16M, 32M, 64M and 100M bits (M = 10^6).
std::vector<std::uint64_t> default_ladder();

struct RunConfig {
  std::vector<std::uint64_t> sizes = default_ladder();
  /// At most one of ratio and out_bits; neither means ratio 0.5.
  std::optional<double> ratio;
  std::optional<std::uint64_t> out_bits;
  Probability epsilon = Probability::from_log2(-40);
  /// Smooth min-entropy of a block. bench checks the output length only when
  /// it is set; pa requires it unless enforce is false.
  std::optional<double> h_min;
  bool enforce = true;
  std::uint64_t rng_seed = 1;
  std::optional<std::string> in_path;
  std::optional<std::string> out_path;
  ReportFormat format = ReportFormat::Csv;
  MulAlgorithm alg = MulAlgorithm::Auto;
  ThresholdTable thresholds;
  WordOrder order = WordOrder::LeastSignificantFirst;
  unsigned trials = 5;
  TimingScope scope = TimingScope::Pipeline;
  /// pa: bits per block; the whole file is one block when unset.
  std::optional<std::uint64_t> block_bits;
  /// pa: fixed hash seed as hex, replacing the per-block generated one.
  std::optional<std::string> seed_c_hex;
  std::optional<std::string> seed_d_hex;
  /// audit parameters.
  std::size_t alpha = 6;
  std::size_t beta = 3;
  AuditOptions audit;

  /// Throws ParameterError on inconsistent settings.
  void validate() const;
  /// r for an n-bit block: out_bits, or floor(ratio * n) but at least 1.
  std::uint64_t output_bits(std::uint64_t n) const;
};

struct BenchRecord {
  std::uint64_t block_size = 0;
  MulAlgorithm algorithm = MulAlgorithm::Auto;  ///< resolved top-level choice
  unsigned trials = 0;
  double elapsed_median = 0;   ///< seconds
  double throughput_mbps = 0;  ///< block_size / elapsed_median / 10^6
  std::uint64_t out_bits = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  /// Sizes that could not be run (allocation failure), with the reason.
  std::vector<std::pair<std::uint64_t, std::string>> skipped;
};

/// Times every size over cfg.trials trials (at least 5) and reports the
/// median. Trials are taken in rounds across all sizes after one untimed
/// warm-up per size, so slow drift in machine speed hits every size alike.
/// With out_path set, the key produced for each size is written there,
/// sizes in order. Diagnostics go to `log` when given.
BenchResult run_bench(const RunConfig& cfg, std::ostream* log = nullptr);

/// Hashes every block of cfg.in_path into cfg.out_path (byte_length(r)
/// bytes per block) and prints the security budget to `out`. Returns a
/// process exit status: 0 on success, 2 when the output length breaks the
/// security bound, 1 on any other error. No output file is left behind on
/// failure.
int run_pa(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs audit_family(cfg.alpha, cfg.beta, cfg.audit) and writes the report
/// to cfg.out_path, or to `out` when unset.
CollisionReport run_audit(const RunConfig& cfg, std::ostream& out);

// Parsing helpers shared with the command line front end. All throw
// ParameterError on malformed text.

/// "1000000", "1M", "16M", "10^6", "2^20", "1e6".
std::uint64_t parse_size(std::string_view text);
std::vector<std::uint64_t> parse_sizes(std::string_view text);
/// "2^-40", "1e-10", "0.001", "0".
Probability parse_probability(std::string_view text);
/// "a,b,c" in limbs.
ThresholdTable parse_thresholds(std::string_view text);
WordOrder parse_order(std::string_view text);
ReportFormat parse_format(std::string_view text);
TimingScope parse_scope(std::string_view text);

// Reports.

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);
void write_bench_json(std::ostream& os, const std::vector<BenchRecord>& records);
void write_bench(std::ostream& os, const std::vector<BenchRecord>& records,
                 ReportFormat format);
void write_audit(std::ostream& os, const CollisionReport& report,
                 ReportFormat format);
void write_budget(std::ostream& os, const SecurityBudget& budget);

/// Least-squares slope of log(elapsed) against log(block_size).
double loglog_slope(const std::vector<BenchRecord>& records);

/// Writes bytes to path through a temporary file and a rename.
void write_file_atomic(const std::string& path,
                       const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_file(const std::string& path);

}  // namespace qkdpa
