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

#include "qkdpa/security.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qkdpa/errors.hpp"

namespace qkdpa {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

Probability Probability::from_value(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("probability must lie in [0, 1]");
  }
  return Probability(p == 0.0 ? kNegInf : std::log2(p));
}

Probability Probability::from_log2(double l) {
  if (std::isnan(l) || l > 0.0) {
    throw ParameterError("log2 of a probability must be <= 0");
  }
  return Probability(l);
}

double Probability::value() const { return std::exp2(log2_); }

std::string Probability::to_string() const {
  if (is_zero()) return "0";
  char buf[64];
  if (std::floor(log2_) == log2_ && log2_ > -1e15) {
    std::snprintf(buf, sizeof buf, "2^%.0f", log2_);
  } else {
    std::snprintf(buf, sizeof buf, "%.6g", value());
    if (value() == 0.0) std::snprintf(buf, sizeof buf, "2^%.6f", log2_);
  }
  return buf;
}

double log2_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == kNegInf) return a;
  return a + std::log1p(std::exp2(b - a)) / std::log(2.0);
}

double leftover_bound_log2(double h_min, double r, Probability epsilon) {
  const double hash_term = -1.0 - (h_min - r) / 2.0;
  return log2_add(hash_term, epsilon.log2());
}

Probability leftover_bound(double h_min, double r, Probability epsilon) {
  return Probability::from_log2(
      std::min(0.0, leftover_bound_log2(h_min, r, epsilon)));
}

std::uint64_t max_key_length(double h_min, Probability epsilon) {
  // 2 log2(1/eps) = -2 log2(eps); eps = 0 leaves nothing.
  const double bound = h_min + 2.0 * epsilon.log2();
  if (!(bound > 0.0)) return 0;
  return static_cast<std::uint64_t>(std::floor(bound));
}

Validation validate(const PAParams& params) {
  const std::uint64_t r_max = max_key_length(params.h_min, params.epsilon);
  return {params.r <= r_max, r_max};
}

SecurityBudget make_budget(double h_min, Probability epsilon, std::uint64_t r) {
  SecurityBudget b;
  b.h_min = h_min;
  b.epsilon = epsilon;
  b.r = r;
  b.r_max = max_key_length(h_min, epsilon);
  b.eps_bar_log2 = leftover_bound_log2(h_min, static_cast<double>(r), epsilon);
  b.ok = r <= b.r_max;
  return b;
}

}  // namespace qkdpa
