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

#include "bsz/univariate.hpp"

#include <cstdlib>
#include <string>

#include "bsz/error.hpp"

namespace bsz {

namespace {

void require_deep(int ell, const ClassicParams& params) {
  if (ell < 0 || ell < params.degree() - 1) {
    throw DomainError("classic formula needs ell >= M - 1 (ell = " + std::to_string(ell) +
                      ", M = " + std::to_string(params.degree()) + ")");
  }
}

}  // namespace

ClassicParams::ClassicParams(std::vector<Rational> t) : ts(std::move(t)) {
  for (const Rational& q : ts) {
    if (!in_parameter_domain(q)) throw InputError("parameter " + to_string(q) + " is outside (-1,1)\\{0}");
  }
}

Rational classic_normalization(int ell, const ClassicParams& params) {
  require_deep(ell, params);
  if (ell != params.degree() - 1) return Rational(1);
  Rational prod(1);
  for (const Rational& t : params.ts) prod *= t;
  return 1 - prod;
}

Rational classic_norm(int ell, const ClassicParams& params) { return 1 / classic_normalization(ell, params); }

std::vector<Rational> classic_p(int ell, const ClassicParams& params) {
  require_deep(ell, params);
  // e_k(t): c(x) = sum_k e_k z^{-2k}.
  std::vector<Rational> e{Rational(1)};
  for (const Rational& t : params.ts) {
    e.push_back(Rational(0));
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += t * e[k - 1];
  }

  std::vector<Rational> coeff(static_cast<std::size_t>(ell) + 1, Rational(0));
  for (std::size_t k = 0; k < e.size(); ++k) {
    // e_k (z^n - z^{-n}) with n = ell + 1 - 2k; n < 0 flips the sign, n = 0 vanishes.
    const int n = ell + 1 - 2 * static_cast<int>(k);
    if (n == 0) continue;
    const Rational c = n > 0 ? e[k] : Rational(-e[k]);
    for (int i = std::abs(n) - 1; i >= 0; i -= 2) coeff[static_cast<std::size_t>(i)] += c;
  }
  const Rational inv = 1 / classic_normalization(ell, params);
  for (Rational& c : coeff) c *= inv;
  return coeff;
}

}  // namespace bsz
