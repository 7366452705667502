// Copyright 2026 The bszroot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BSZ_ERROR_HPP
#define BSZ_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsz {

/// Bad input: unsupported label, malformed weight, parameter outside its domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of a mathematical operation does not hold
/// (non-dominant weight, weight not sufficiently deep, vanishing denominator).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive enumeration would exceed its configured cap. Never a silent truncation.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what + " (requested " + std::to_string(requested) +
                           ", cap " + std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Numerically singular system in the floating-point oracle.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double condition_estimate)
      : std::runtime_error(what), condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

}  // namespace bsz

#endif  // BSZ_ERROR_HPP
