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
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

#include "qkdpa/bench.hpp"
#include "qkdpa/errors.hpp"

namespace qkdpa {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParameterError("malformed " + std::string(what) + ": '" +
                         std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s, std::string_view what) {
  // std::from_chars for double is not available everywhere yet.
  const std::string str(s);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != str.size()) {
    throw ParameterError("malformed " + std::string(what) + ": '" + str + "'");
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> default_ladder() {
  return {1'000'000,  2'000'000,  4'000'000,  8'000'000,  10'000'000,
          16'000'000, 32'000'000, 64'000'000, 100'000'000};
}

std::uint64_t parse_size(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParameterError("empty size");
  const auto caret = text.find('^');
  if (caret != std::string_view::npos) {
    const std::uint64_t base = parse_u64(text.substr(0, caret), "size");
    const std::uint64_t exp = parse_u64(text.substr(caret + 1), "size");
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (base != 0 && v > UINT64_MAX / base) throw ParameterError("size overflows");
      v *= base;
    }
    return v;
  }
  std::uint64_t scale = 1;
  switch (text.back()) {
    case 'k': case 'K': scale = 1'000; break;
    case 'M': scale = 1'000'000; break;
    case 'G': scale = 1'000'000'000; break;
    default: break;
  }
  if (scale != 1) text.remove_suffix(1);
  if (text.find_first_of("eE.") != std::string_view::npos) {
    const double v = parse_double(text, "size") * static_cast<double>(scale);
    if (!(v >= 0) || v != std::floor(v) || v > 1e19) {
      throw ParameterError("size must be a whole number of bits");
    }
    return static_cast<std::uint64_t>(v);
  }
  return parse_u64(text, "size") * scale;
}

std::vector<std::uint64_t> parse_sizes(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto item : split_list(text)) out.push_back(parse_size(item));
  return out;
}

Probability parse_probability(std::string_view text) {
  text = trim(text);
  if (text.rfind("2^", 0) == 0) {
    return Probability::from_log2(parse_double(text.substr(2), "probability"));
  }
  return Probability::from_value(parse_double(text, "probability"));
}

ThresholdTable parse_thresholds(std::string_view text) {
  const auto items = split_list(text);
  if (items.size() != 3) {
    throw ParameterError("thresholds take three limb counts: schoolbook,karatsuba,toom3");
  }
  ThresholdTable t;
  t.schoolbook_max_limbs = parse_u64(items[0], "threshold");
  t.karatsuba_max_limbs = parse_u64(items[1], "threshold");
  t.toom3_max_limbs = parse_u64(items[2], "threshold");
  if (!t.valid()) {
    throw ParameterError("thresholds must be strictly increasing");
  }
  return t;
}

WordOrder parse_order(std::string_view text) {
  text = trim(text);
  if (text == "lsf") return WordOrder::LeastSignificantFirst;
  if (text == "msf") return WordOrder::MostSignificantFirst;
  throw ParameterError("order must be msf or lsf");
}

ReportFormat parse_format(std::string_view text) {
  text = trim(text);
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw ParameterError("format must be csv or json");
}

TimingScope parse_scope(std::string_view text) {
  text = trim(text);
  if (text == "pipeline") return TimingScope::Pipeline;
  if (text == "multiply") return TimingScope::Multiply;
  throw ParameterError("scope must be pipeline or multiply");
}

void RunConfig::validate() const {
  if (ratio && out_bits) {
    throw ParameterError("give either a ratio or an output length, not both");
  }
  if (ratio && !(*ratio > 0.0 && *ratio <= 1.0)) {
    throw ParameterError("ratio must lie in (0, 1]");
  }
  if (out_bits && *out_bits == 0) throw ParameterError("output length must be positive");
  if (h_min && !(*h_min >= 0.0)) throw ParameterError("h_min must be non-negative");
  if (trials == 0) throw ParameterError("trials must be positive");
  if (!thresholds.valid()) throw ParameterError("thresholds must be strictly increasing");
  for (auto n : sizes) {
    if (n == 0) throw ParameterError("block sizes must be positive");
    if (out_bits && *out_bits > n) {
      throw ParameterError("output length " + std::to_string(*out_bits) +
                           " exceeds block size " + std::to_string(n));
    }
  }
  if (block_bits && *block_bits == 0) throw ParameterError("block size must be positive");
  if (seed_c_hex.has_value() != seed_d_hex.has_value()) {
    throw ParameterError("a fixed seed needs both c and d");
  }
}

std::uint64_t RunConfig::output_bits(std::uint64_t n) const {
  if (out_bits) return *out_bits;
  const double rho = ratio.value_or(0.5);
  const auto r = static_cast<std::uint64_t>(std::floor(rho * static_cast<double>(n)));
  return std::clamp<std::uint64_t>(r, 1, n);
}

}  // namespace qkdpa
