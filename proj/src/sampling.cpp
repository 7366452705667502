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

#include "bsz/sampling.hpp"

#include "bsz/error.hpp"

namespace bsz {

std::uint64_t ParameterSampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  return lo + rng_() % (hi - lo + 1);
}

Rational ParameterSampler::draw(const Rational& max_abs) {
  if (max_abs < Rational(1, 9)) throw InputError("ParameterSampler: max_abs below 1/9");
  while (true) {
    const auto q = static_cast<long>(uniform(2, 9));
    const auto p = static_cast<long>(uniform(1, static_cast<std::uint64_t>(q - 1)));
    Rational t(p, q);
    t.canonicalize();
    if (uniform(0, 1) == 1) t = -t;
    if (abs(t) <= max_abs) return t;
  }
}

std::vector<Rational> ParameterSampler::draw_list(int count, const Rational& max_abs) {
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) out.push_back(draw(max_abs));
  return out;
}

BszParams ParameterSampler::draw_params(const RootSystem& rs, int ms, int ml, const Rational& max_abs) {
  std::vector<Rational> ts = draw_list(ms, max_abs);
  std::vector<Rational> tl = rs.simply_laced() ? std::vector<Rational>{} : draw_list(ml, max_abs);
  return BszParams::for_system(rs, std::move(ts), std::move(tl));
}

}  // namespace bsz
