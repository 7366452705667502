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

#include "bsz/bsz_polynomial.hpp"

#include <limits>
#include <stdexcept>

#include "bsz/error.hpp"
#include "bsz/weight_lattice.hpp"

namespace bsz {

namespace {

void check_domain(const std::vector<Rational>& list, const char* label) {
  for (const Rational& t : list) {
    if (!in_parameter_domain(t)) {
      throw InputError(std::string(label) + " parameter " + to_string(t) + " is outside (-1,1)\\{0}");
    }
  }
}

Rational negated_product(const std::vector<Rational>& list) {
  Rational p(-1);
  for (const Rational& t : list) p *= t;
  return p;
}

}  // namespace

BszParams::BszParams(std::vector<Rational> ts, std::vector<Rational> tl) : ts_(std::move(ts)), tl_(std::move(tl)) {
  check_domain(ts_, "short");
  check_domain(tl_, "long");
}

BszParams BszParams::for_system(const RootSystem& rs, std::vector<Rational> ts, std::vector<Rational> tl) {
  if (rs.simply_laced() && !tl.empty()) {
    throw InputError(std::string(rs.name()) + " is simply-laced: long-root parameters are not allowed");
  }
  return BszParams(std::move(ts), std::move(tl));
}

Rational BszParams::bold_ts() const { return negated_product(ts_); }
Rational BszParams::bold_tl() const { return negated_product(tl_); }

std::vector<Rational> c_coefficients(const BszParams& params, RootLength which) {
  std::vector<Rational> e{Rational(1)};
  for (const Rational& t : params.list(which)) {
    e.push_back(Rational(0));
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += t * e[k - 1];
  }
  return e;
}

std::vector<Rational> inv_c_coefficients(const BszParams& params, RootLength which, int n_max) {
  if (n_max < 0) throw InputError("inv_c_coefficients: n_max must be nonnegative");
  const std::vector<Rational> e = c_coefficients(params, which);
  std::vector<Rational> f(static_cast<std::size_t>(n_max) + 1, Rational(0));
  f[0] = 1;
  // c * f = 1: f_n = -sum_{k=1..min(n,M)} e_k f_{n-k}.
  for (std::size_t n = 1; n < f.size(); ++n) {
    Rational s(0);
    for (std::size_t k = 1; k < e.size() && k <= n; ++k) s += e[k] * f[n - k];
    f[n] = -s;
  }
  return f;
}

std::uint64_t assignment_count(const RootSystem& rs, const BszParams& params) {
  std::uint64_t total = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (const Root& alpha : rs.positive_roots()) {
    const auto factor = static_cast<std::uint64_t>(alpha.is_long ? params.m_long() : params.m_short()) + 1;
    total = total > kMax / factor ? kMax : total * factor;
  }
  return total;
}

Rational normalization_constant(const RootSystem& rs, const Weight& lam, const BszParams& params) {
  if (!lam.is_dominant()) throw DomainError("normalization_constant: weight " + to_string(lam) + " is not dominant");
  const int ms = params.m_short();
  const int ml = params.m_long();
  if (!is_sufficiently_deep(rs, lam, ms, ml)) {
    std::string msg = "normalization_constant: " + to_string(lam) + " is not sufficiently deep (m_s = " +
                      std::to_string(min_pairing_short(rs, lam)) + ", M_s = " + std::to_string(ms);
    if (auto m = min_pairing_long(rs, lam)) msg += ", m_l = " + std::to_string(*m) + ", M_l = " + std::to_string(ml);
    throw DomainError(msg + ")");
  }
  const Weight tilde = lambda_tilde(rs, lam, ms, ml);
  // A family with M = 0 keeps its rho in lam~, so none of its roots is
  // orthogonal to lam~ and its bold parameter never enters.
  for (const Root& alpha : rs.positive_roots()) {
    if (coroot_pairing(tilde, alpha) != 0) continue;
    if ((alpha.is_long ? ml : ms) == 0) {
      throw std::logic_error("normalization_constant: root family with M = 0 is orthogonal to lam~");
    }
  }
  return poincare_product(rs, tilde, params.bold_ts(), params.bold_tl());
}

BszPolynomial build_P(const WeylGroup& wg, const Weight& lam, const BszParams& params, const BuildOptions& options,
                      CharacterTable* table) {
  const RootSystem& rs = wg.roots();
  if (lam.rank() != rs.rank()) throw InputError("build_P: weight rank does not match " + std::string(rs.name()));
  if (!lam.is_dominant()) throw DomainError("build_P: weight " + to_string(lam) + " is not dominant");
  if (rs.simply_laced() && params.m_long() > 0) throw InputError("build_P: long parameters on a simply-laced system");
  const std::uint64_t count = assignment_count(rs, params);
  if (count > options.max_assignments) throw CapExceeded("build_P: C-expansion too large", count, options.max_assignments);

  const std::vector<Rational> es = c_coefficients(params, RootLength::short_roots);
  const std::vector<Rational> el = c_coefficients(params, RootLength::long_roots);

  // C(x) = prod_alpha sum_k e_k e^{-k alpha}, like terms merged as we go.
  ExponentialSum c = exponential(Weight(rs.rank()));
  for (const Root& alpha : rs.positive_roots()) {
    const std::vector<Rational>& e = alpha.is_long ? el : es;
    if (e.size() == 1) continue;
    ExponentialSum factor;
    for (std::size_t k = 0; k < e.size(); ++k) factor.add(-static_cast<std::int64_t>(k) * alpha.fw_coords, e[k]);
    c = multiply(c, factor);
  }

  BszPolynomial p;
  p.lam = lam;
  p.params = params;
  const Weight top = lam + rs.rho();
  for (const auto& [nu, coeff] : c) {
    if (auto red = reduce_alternating(wg, top + nu)) p.char_exp.add(red->highest, red->sign * coeff);
  }
  p.mono_exp = expand_characters(wg, p.char_exp, table);
  p.deep = is_sufficiently_deep(rs, lam, params.m_short(), params.m_long());
  if (p.deep) {
    p.norm_const = normalization_constant(rs, lam, params);
    if (p.mono_exp.coefficient(lam) != *p.norm_const) {
      throw std::logic_error("build_P: leading coefficient of " + to_string(lam) + " differs from N_lam");
    }
  }
  return p;
}

BszPolynomial monic_p(const WeylGroup& wg, const Weight& lam, const BszParams& params, const BuildOptions& options,
                      CharacterTable* table) {
  BszPolynomial p = build_P(wg, lam, params, options, table);
  if (!p.deep) throw DomainError("monic_p: " + to_string(lam) + " is not sufficiently deep");
  const Rational inv = 1 / *p.norm_const;
  p.char_exp *= inv;
  p.mono_exp *= inv;
  return p;
}

bool is_triangular(const RootSystem& rs, const BszPolynomial& p) {
  for (const auto& [mu, c] : p.mono_exp) {
    if (!dominance_leq(rs, mu, p.lam)) return false;
  }
  return true;
}

}  // namespace bsz
