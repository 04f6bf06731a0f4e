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

#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "qkdpa/bench.hpp"
#include "qkdpa/errors.hpp"

namespace qkdpa {
namespace {

using nlohmann::ordered_json;

ordered_json to_json(const BenchRecord& r) {
  ordered_json j;
  j["block_size"] = r.block_size;
  j["algorithm"] = std::string(to_string(r.algorithm));
  j["trials"] = r.trials;
  j["elapsed_ms"] = r.elapsed_median * 1e3;
  j["throughput_mbps"] = r.throughput_mbps;
  return j;
}

constexpr const char* kSampleNote =
    "estimate over a uniform seed sample; the true worst case over the whole "
    "family may be larger";

}  // namespace

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "block_size,algorithm,trials,elapsed_ms,throughput_mbps\n";
  for (const auto& r : records) {
    os << r.block_size << ',' << to_string(r.algorithm) << ',' << r.trials << ','
       << std::fixed << std::setprecision(3) << r.elapsed_median * 1e3 << ','
       << std::setprecision(2) << r.throughput_mbps << '\n'
       << std::defaultfloat;
  }
}

void write_bench_json(std::ostream& os, const std::vector<BenchRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  os << arr.dump(2) << '\n';
}

void write_bench(std::ostream& os, const std::vector<BenchRecord>& records,
                 ReportFormat format) {
  if (format == ReportFormat::Json) {
    write_bench_json(os, records);
  } else {
    write_bench_csv(os, records);
  }
}

void write_audit(std::ostream& os, const CollisionReport& rep,
                 ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json j;
    j["alpha"] = rep.alpha;
    j["beta"] = rep.beta;
    j["mode"] = std::string(to_string(rep.mode));
    j["family_size"] = rep.family_size;
    j["seeds_examined"] = rep.seeds_examined;
    j["pairs_examined"] = rep.pairs_examined;
    j["worst_pair"] = {rep.worst_pair.first, rep.worst_pair.second};
    j["worst_delta"] = rep.worst_delta;
    j["worst_ratio"] = rep.worst_ratio;
    j["bound_1_over_B"] = rep.bound_1_over_B;
    j["bound_2_over_B"] = rep.bound_2_over_B;
    j["within_1_over_B"] = rep.within_1_over_B;
    j["within_2_over_B"] = rep.within_2_over_B;
    if (rep.mode == AuditMode::Sampled) j["note"] = kSampleNote;
    os << j.dump(2) << '\n';
    return;
  }
  os << "alpha,beta,mode,family_size,seeds_examined,pairs_examined,worst_x,"
        "worst_y,worst_delta,worst_ratio,bound_1_over_B,bound_2_over_B,"
        "within_1_over_B,within_2_over_B\n";
  os << rep.alpha << ',' << rep.beta << ',' << to_string(rep.mode) << ','
     << std::setprecision(17) << rep.family_size << ',' << rep.seeds_examined
     << ',' << rep.pairs_examined << ',' << rep.worst_pair.first << ','
     << rep.worst_pair.second << ',' << rep.worst_delta << ','
     << rep.worst_ratio << ',' << rep.bound_1_over_B << ','
     << rep.bound_2_over_B << ',' << (rep.within_1_over_B ? "true" : "false")
     << ',' << (rep.within_2_over_B ? "true" : "false") << '\n'
     << std::setprecision(6);
  if (rep.mode == AuditMode::Sampled) os << "# " << kSampleNote << '\n';
}

void write_budget(std::ostream& os, const SecurityBudget& b) {
  os << "h_min        " << std::setprecision(12) << b.h_min << '\n'
     << "epsilon      " << b.epsilon.to_string() << '\n'
     << "r            " << b.r << '\n'
     << "r_max        " << b.r_max << '\n'
     << "eps_bar      2^" << std::setprecision(8) << b.eps_bar_log2 << '\n'
     << "secure       " << (b.ok ? "yes" : "no") << '\n'
     << std::setprecision(6);
}

double loglog_slope(const std::vector<BenchRecord>& records) {
  if (records.size() < 2) throw ParameterError("a slope needs two records");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : records) {
    const double x = std::log(static_cast<double>(r.block_size));
    const double y = std::log(r.elapsed_median);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(records.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qkdpa
