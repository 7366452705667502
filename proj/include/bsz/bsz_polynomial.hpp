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

#ifndef BSZ_BSZ_POLYNOMIAL_HPP
#define BSZ_BSZ_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bsz/rational.hpp"
#include "bsz/root_system.hpp"
#include "bsz/symmetric.hpp"
#include "bsz/weight.hpp"
#include "bsz/weyl_group.hpp"

namespace bsz {

enum class RootLength { short_roots, long_roots };

/// Short and long parameter lists t^(s), t^(l). Every entry lies in (-1,1)\{0}.
class BszParams {
 public:
  BszParams() = default;
  /// Throws InputError on a parameter outside (-1,1)\{0}.
  BszParams(std::vector<Rational> ts, std::vector<Rational> tl);

  /// Same, and rejects long parameters for simply-laced systems.
  static BszParams for_system(const RootSystem& rs, std::vector<Rational> ts, std::vector<Rational> tl);

  const std::vector<Rational>& ts() const noexcept { return ts_; }
  const std::vector<Rational>& tl() const noexcept { return tl_; }
  const std::vector<Rational>& list(RootLength which) const noexcept {
    return which == RootLength::short_roots ? ts_ : tl_;
  }
  int m_short() const noexcept { return static_cast<int>(ts_.size()); }
  int m_long() const noexcept { return static_cast<int>(tl_.size()); }

  /// -t_1 ... t_M; -1 for an empty list.
  Rational bold_ts() const;
  Rational bold_tl() const;

  friend bool operator==(const BszParams&, const BszParams&) = default;

 private:
  std::vector<Rational> ts_;
  std::vector<Rational> tl_;
};

/// Elementary symmetric functions e_0..e_M of the chosen list: c(z) = sum e_k z^k.
std::vector<Rational> c_coefficients(const BszParams& params, RootLength which);

/// Taylor coefficients f_0..f_{n_max} of 1/c(z).
std::vector<Rational> inv_c_coefficients(const BszParams& params, RootLength which, int n_max);

struct BuildOptions {
  /// Refuse when prod over positive roots of (M+1) exceeds this.
  std::uint64_t max_assignments = 10'000'000;
};

struct BszPolynomial {
  Weight lam;
  BszParams params;
  CharacterExpansion char_exp;
  SymmetricPolynomial mono_exp;
  std::optional<Rational> norm_const;  // only for sufficiently deep lam
  bool deep = false;
};

/// Number of C-expansion assignments, prod over positive roots of (M+1); saturated.
std::uint64_t assignment_count(const RootSystem& rs, const BszParams& params);

/// P_lam by the explicit formula: the product C(x) = prod_alpha c(e^{-alpha}) is
/// multiplied out, each shifted exponent rho + lam + nu reduced to a signed
/// Weyl character, and the characters expanded in monomials.
/// For deep lam the leading coefficient is checked against N_lam.
BszPolynomial build_P(const WeylGroup& wg, const Weight& lam, const BszParams& params,
                      const BuildOptions& options = {}, CharacterTable* table = nullptr);

/// N_lam: product over roots orthogonal to lam~ of the Poincare factors in the
/// bold parameters. Throws DomainError for non-deep lam.
Rational normalization_constant(const RootSystem& rs, const Weight& lam, const BszParams& params);

/// P_lam / N_lam.
BszPolynomial monic_p(const WeylGroup& wg, const Weight& lam, const BszParams& params,
                      const BuildOptions& options = {}, CharacterTable* table = nullptr);

/// Every monomial key of P is below P.lam in the dominance order.
bool is_triangular(const RootSystem& rs, const BszPolynomial& p);

/// Exact pairings for one system and one parameter set.
///
/// <P_lam, m_mu> is the sum over nu in W(mu) of the coefficient of e^{nu - lam}
/// in F = prod_{alpha > 0} (1 - e^alpha) / c(e^alpha), a power series supported
/// on Q_+. F is tabulated densely on a box of simple-root coordinates that grows
/// on demand. Thread-safe.
class PairingEngine {
 public:
  PairingEngine(const WeylGroup& wg, BszParams params, BuildOptions options = {});

  const WeylGroup& group() const noexcept { return *wg_; }
  const BszParams& params() const noexcept { return params_; }

  /// Coefficient of e^beta in F for beta given in simple-root coordinates.
  Rational series_coefficient(const Weight& beta_sr);

  Rational pair_P_m(const Weight& lam, const Weight& mu);
  /// sum_nu c_{mu nu} <P_lam, m_nu> over the monomial expansion of P_mu.
  Rational pair_P_P(const Weight& lam, const Weight& mu);

  /// <p_lam, p_mu> for the monic orthogonal polynomials when at least one
  /// weight is deep. A deep p is P / N. A shallow p is not the formula
  /// polynomial; it is pinned down only by being monic, triangular and
  /// orthogonal to every m_kappa with kappa < it. The zero for a mixed pair is
  /// therefore derived from those conditions: for shallow s not above deep d,
  /// <P_d, m_kappa> is checked to vanish for every dominant kappa <= s; for
  /// s above d, P_d is checked to be supported strictly below s.
  /// Throws DomainError when neither weight is deep, std::logic_error if a
  /// certificate fails (that would contradict the biorthogonality theorem).
  Rational pair_p_p(const Weight& lam, const Weight& mu);

  /// Cached build_P.
  const BszPolynomial& polynomial(const Weight& lam);

 private:
  struct SeriesBox;
  void ensure_box(const Weight& beta_sr);

  const WeylGroup* wg_;
  BszParams params_;
  BuildOptions options_;
  CharacterTable characters_;
  std::mutex mutex_;
  std::shared_ptr<const SeriesBox> box_;
  std::map<Weight, std::unique_ptr<BszPolynomial>> polys_;
};

/// One-shot forms of PairingEngine::pair_P_m / pair_P_P / pair_p_p.
Rational exact_pairing_P_m(const WeylGroup& wg, const Weight& lam, const Weight& mu, const BszParams& params);
Rational exact_pairing_P_P(const WeylGroup& wg, const Weight& lam, const Weight& mu, const BszParams& params,
                           const BuildOptions& options = {});
Rational exact_pairing_p_p(const WeylGroup& wg, const Weight& lam, const Weight& mu, const BszParams& params,
                           const BuildOptions& options = {});

}  // namespace bsz

#endif  // BSZ_BSZ_POLYNOMIAL_HPP
