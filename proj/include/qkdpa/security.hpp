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

// Finite-key arithmetic for privacy amplification: the leftover-hash
// distinguishing bound and the largest secure output length.
//
// Probabilities are carried as base-2 logarithms so that bounds such as
// 2^-(10^8) stay representable.

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace qkdpa {

/// A probability in [0, 1] stored as log2(p); zero is -infinity.
class Probability {
 public:
  constexpr Probability() = default;

  /// Throws ParameterError unless p is in [0, 1].
  static Probability from_value(double p);
  /// Throws ParameterError unless l <= 0 (or -infinity).
  static Probability from_log2(double l);
  static constexpr Probability zero() { return Probability(); }
  static constexpr Probability one() { return Probability(0.0); }

  double log2() const { return log2_; }
  /// Linear value; underflows to 0 below about 2^-1074.
  double value() const;
  bool is_zero() const { return log2_ == -std::numeric_limits<double>::infinity(); }

  /// "2^-40", or a decimal value when the log is not integral.
  std::string to_string() const;

  friend bool operator==(Probability, Probability) = default;
  friend auto operator<=>(Probability a, Probability b) { return a.log2_ <=> b.log2_; }

 private:
  constexpr explicit Probability(double l) : log2_(l) {}
  double log2_ = -std::numeric_limits<double>::infinity();
};

/// log2(2^a + 2^b), exact when either side is -infinity.
double log2_add(double a, double b);

/// eps_bar = 1/2 * 2^(-(h_min - r)/2) + epsilon. The result may exceed 1
/// when r > h_min; it is then no longer a probability and is returned as a
/// plain log2 value.
double leftover_bound_log2(double h_min, double r, Probability epsilon);

/// leftover_bound_log2 clamped into a Probability (values above 1 become 1).
Probability leftover_bound(double h_min, double r, Probability epsilon);

/// floor(h_min - 2 log2(1/epsilon)), floored at 0. h_min is the smooth
/// min-entropy for the smoothing parameter the caller's proof requires;
/// no conversion is applied here.
std::uint64_t max_key_length(double h_min, Probability epsilon);

struct PAParams {
  std::uint64_t n = 0;  ///< input block length in bits
  std::uint64_t r = 0;  ///< output length in bits
  Probability epsilon;
  double h_min = 0;
};

struct Validation {
  bool ok = false;
  std::uint64_t r_max = 0;
};

/// ok iff params.r <= max_key_length(params.h_min, params.epsilon).
Validation validate(const PAParams& params);

/// The numbers behind a chosen output length.
struct SecurityBudget {
  double h_min = 0;
  Probability epsilon;
  std::uint64_t r = 0;
  std::uint64_t r_max = 0;
  double eps_bar_log2 = 0;  ///< log2 of the leftover bound at r
  bool ok = false;
};

SecurityBudget make_budget(double h_min, Probability epsilon, std::uint64_t r);

}  // namespace qkdpa
