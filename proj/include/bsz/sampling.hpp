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

#ifndef BSZ_SAMPLING_HPP
#define BSZ_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bsz/bsz_polynomial.hpp"

namespace bsz {

/// Seeded draws of small rationals p/q in (-1,1)\{0}, 2 <= q <= 9.
/// Only raw mt19937_64 output is used, so draws are identical on every platform.
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed) : rng_(seed) {}

  /// |value| <= max_abs (rejection sampling; max_abs >= 1/9).
  Rational draw(const Rational& max_abs = Rational(1));
  std::vector<Rational> draw_list(int count, const Rational& max_abs = Rational(1));
  /// ms short and ml long parameters; ml is forced to 0 on simply-laced systems.
  BszParams draw_params(const RootSystem& rs, int ms, int ml, const Rational& max_abs = Rational(1));

 private:
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);  // inclusive

  std::mt19937_64 rng_;
};

}  // namespace bsz

#endif  // BSZ_SAMPLING_HPP
