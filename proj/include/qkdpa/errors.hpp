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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qkdpa {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operand is larger than the container or plan it was given to.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Parameters are inconsistent with each other (block length vs seed width,
/// output length out of range, malformed configuration).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input ended before the requested number of bits.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Input carries bits that the declared format says must be zero.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Requested output length exceeds the leftover-hash bound.
class SecurityBoundError : public Error {
 public:
  SecurityBoundError(std::uint64_t requested, std::uint64_t r_max)
      : Error("requested output length " + std::to_string(requested) +
              " exceeds the secure maximum " + std::to_string(r_max)),
        requested_(requested),
        r_max_(r_max) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t r_max() const noexcept { return r_max_; }

 private:
  std::uint64_t requested_;
  std::uint64_t r_max_;
};

/// Work would exceed what the caller's configuration allows.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace qkdpa
