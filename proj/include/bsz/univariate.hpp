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

#ifndef BSZ_UNIVARIATE_HPP
#define BSZ_UNIVARIATE_HPP

#include <vector>

#include "bsz/rational.hpp"

namespace bsz {

/// Classic one-variable Bernstein-Szego data: weight 4 sin^2 x / |c(x)|^2 with
/// c(x) = prod_m (1 + t_m e^{-2ix}).
struct ClassicParams {
  std::vector<Rational> ts;

  /// Throws InputError on a parameter outside (-1,1)\{0}.
  explicit ClassicParams(std::vector<Rational> t);
  int degree() const noexcept { return static_cast<int>(ts.size()); }
};

/// Monic p_ell on the cosine monomials: entry k is the coefficient of
/// m_k = e^{ikx} + e^{-ikx} (m_0 = 1). Requires ell >= M - 1.
///
/// The numerator c(x) z^{ell+1} - c(-x) z^{-(ell+1)}, z = e^{ix}, is a sum of
/// antisymmetric pairs z^n - z^{-n}; each telescopes against z - 1/z to
/// z^{n-1} + z^{n-3} + ... + z^{1-n}.
std::vector<Rational> classic_p(int ell, const ClassicParams& params);

/// N_ell: 1 - t_1...t_M when ell = M - 1, else 1.
Rational classic_normalization(int ell, const ClassicParams& params);

/// <p_ell, p_ell> = 1 / N_ell.
Rational classic_norm(int ell, const ClassicParams& params);

}  // namespace bsz

#endif  // BSZ_UNIVARIATE_HPP
