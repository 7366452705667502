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


#include <doctest.h>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/error.hpp"
#include "bsz/sampling.hpp"
#include "bsz/weight_lattice.hpp"
#include "oracles.hpp"

using namespace bsz;

namespace {

BszParams a1_params(std::vector<Rational> ts) { return BszParams(std::move(ts), {}); }

}  // namespace

TEST_SUITE("bszcore") {
  TEST_CASE("parameter lists") {
    CHECK(c_coefficients(BszParams(), RootLength::short_roots) == std::vector<Rational>{1});
    CHECK(c_coefficients(a1_params({Rational(1, 3)}), RootLength::short_roots) == std::vector<Rational>{1, Rational(1, 3)});
    const BszParams two = a1_params({Rational(1, 2), Rational(-1, 3)});
    CHECK(c_coefficients(two, RootLength::short_roots) ==
          std::vector<Rational>{1, Rational(1, 6), Rational(-1, 6)});

    CHECK(inv_c_coefficients(BszParams(), RootLength::short_roots, 3) == std::vector<Rational>{1, 0, 0, 0});
    const Rational t(2, 7);
    const std::vector<Rational> geo = inv_c_coefficients(a1_params({t}), RootLength::short_roots, 6);
    for (int n = 0; n <= 6; ++n) CHECK(geo[static_cast<std::size_t>(n)] == power(-t, n));
    // c * f = 1, convolved by hand.
    const std::vector<Rational> e = c_coefficients(two, RootLength::short_roots);
    const std::vector<Rational> f = inv_c_coefficients(two, RootLength::short_roots, 8);
    CHECK(f[1] == Rational(-1, 6));
    for (std::size_t n = 0; n < f.size(); ++n) {
      Rational s(0);
      for (std::size_t k = 0; k < e.size() && k <= n; ++k) s += e[k] * f[n - k];
      CHECK(s == (n == 0 ? 1 : 0));
    }

    CHECK_THROWS_AS(a1_params({Rational(1)}), InputError);
    CHECK_THROWS_AS(a1_params({Rational(0)}), InputError);
    CHECK_THROWS_AS(BszParams::for_system(RootSystem::build(SystemType::A2), {}, {Rational(1, 2)}), InputError);
    CHECK(BszParams({Rational(1, 2), Rational(1, 3)}, {}).bold_ts() == Rational(-1, 6));
    CHECK(BszParams().bold_ts() == -1);
  }

  TEST_CASE("zero parameters give characters") {
    for (SystemType t : {SystemType::A2, SystemType::B2, SystemType::G2}) {
      const WeylGroup wg(t);
      for (const Weight& lam : dominant_weights_in_box(2, 2)) {
        const BszPolynomial p = build_P(wg, lam, BszParams());
        CHECK(p.char_exp == CharacterExpansion({{lam, Rational(1)}}));
        CHECK(p.mono_exp == character_to_monomials(wg, lam));
        CHECK(p.deep);
        CHECK(*p.norm_const == 1);
      }
    }
  }

  TEST_CASE("one-variable examples") {
    const WeylGroup a1(SystemType::A1);
    const Rational t(1, 3);
    const BszPolynomial p = build_P(a1, Weight{2}, a1_params({t}));
    CHECK(p.char_exp == CharacterExpansion({{Weight{2}, Rational(1)}, {Weight{0}, t}}));
    CHECK(p.mono_exp == SymmetricPolynomial({{Weight{2}, Rational(1)}, {Weight{0}, 1 + t}}));
    CHECK(*p.norm_const == 1);

    const Rational t1(1, 2), t2(-3, 5);
    const BszPolynomial b = build_P(a1, Weight{1}, a1_params({t1, t2}));
    REQUIRE(b.deep);
    CHECK(b.mono_exp.coefficient(Weight{1}) == 1 - t1 * t2);
    CHECK(*b.norm_const == 1 - t1 * t2);
    CHECK_FALSE(build_P(a1, Weight{0}, a1_params({t1, t2})).deep);
    CHECK_THROWS_AS(normalization_constant(a1.roots(), Weight{0}, a1_params({t1, t2})), DomainError);

    // Monic polynomials against the hand expansion, several M and ell.
    ParameterSampler sampler(7);
    for (int m = 0; m <= 3; ++m) {
      const std::vector<Rational> ts = sampler.draw_list(m);
      for (int ell = std::max(0, m - 1); ell <= 6; ++ell) {
        const BszPolynomial mp = monic_p(a1, Weight{ell}, a1_params(ts));
        const std::vector<Rational> want = oracle::classic_expansion(ell, ts);
        for (int k = 0; k <= ell; ++k) CHECK(mp.mono_exp.coefficient(Weight{k}) == want[static_cast<std::size_t>(k)]);
        CHECK(*mp.norm_const == oracle::classic_normalization(ell, ts));
      }
    }
    // M = 1: m_ell + (1+t)(m_{ell-2} + m_{ell-4} + ...).
    const BszPolynomial p5 = monic_p(a1, Weight{5}, a1_params({t}));
    CHECK(p5.mono_exp == SymmetricPolynomial({{Weight{5}, Rational(1)}, {Weight{3}, 1 + t}, {Weight{1}, 1 + t}}));
  }

  TEST_CASE("normalization constants") {
    const RootSystem b2 = RootSystem::build(SystemType::B2);
    const BszParams p({Rational(1, 2), Rational(1, 3)}, {Rational(-1, 4)});
    // lam~ = lam + rho - 2 rho_s - rho_l strongly dominant -> 1.
    CHECK(normalization_constant(b2, Weight{3, 3}, p) == 1);
    const RootSystem a1 = RootSystem::build(SystemType::A1);
    for (int m = 1; m <= 3; ++m) {
      std::vector<Rational> ts;
      Rational prod(1);
      for (int k = 0; k < m; ++k) {
        ts.emplace_back(1, k + 2);
        prod *= ts.back();
      }
      CHECK(normalization_constant(a1, Weight{m - 1}, a1_params(ts)) == 1 - prod);
      CHECK(normalization_constant(a1, Weight{m}, a1_params(ts)) == 1);
    }
  }

  TEST_CASE("caps and preconditions") {
    const WeylGroup g2(SystemType::G2);
    const BszParams p({Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(-1, 7)});
    CHECK(assignment_count(g2.roots(), p) == 729);
    BuildOptions tight;
    tight.max_assignments = 100;
    CHECK_THROWS_AS(build_P(g2, Weight{2, 2}, p, tight), CapExceeded);
    CHECK_THROWS_AS(build_P(g2, Weight{-1, 2}, p), DomainError);
    CHECK_THROWS_AS(build_P(g2, Weight{1, 1, 1}, p), InputError);
  }

  TEST_CASE("deep polynomials are triangular with leading coefficient N") {
    ParameterSampler sampler(11);
    for (SystemType t : {SystemType::A2, SystemType::B2, SystemType::G2}) {
      const WeylGroup wg(t);
      const RootSystem& rs = wg.roots();
      const BszParams params = sampler.draw_params(rs, 2, rs.simply_laced() ? 0 : 2);
      for (const Weight& lam : dominant_weights_in_box(2, 3)) {
        const BszPolynomial p = build_P(wg, lam, params);
        if (!p.deep) continue;
        CHECK(is_triangular(rs, p));
        const Weight tilde = lambda_tilde(rs, lam, params.m_short(), params.m_long());
        CHECK(*p.norm_const == poincare_enumerated(wg, wg.stabilizer(tilde), params.bold_ts(), params.bold_tl()));
      }
    }
  }

  TEST_CASE("series coefficients") {
    const WeylGroup a1(SystemType::A1);
    const Rational t(-2, 5);
    PairingEngine engine(a1, a1_params({t}));
    // (1 - z) / (1 + t z) = 1 + sum_{n>=1} ((-t)^n - (-t)^{n-1}) z^n.
    CHECK(engine.series_coefficient(Weight{0}) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(engine.series_coefficient(Weight{n}) == power(-t, n) - power(-t, n - 1));
    CHECK(engine.series_coefficient(Weight{-1}) == 0);
  }

  TEST_CASE("pairings") {
    const WeylGroup a1(SystemType::A1);
    const Rational t(1, 2);
    PairingEngine e1(a1, a1_params({t}));
    CHECK(e1.pair_P_m(Weight{0}, Weight{2}) == -(1 + t));
    CHECK(exact_pairing_P_m(a1, Weight{0}, Weight{2}, a1_params({t})) == -(1 + t));
    CHECK(e1.pair_P_m(Weight{2}, Weight{2}) == 1);
    CHECK(e1.pair_P_m(Weight{2}, Weight{0}) == 0);
    CHECK(e1.pair_P_m(Weight{2}, Weight{1}) == 0);

    ParameterSampler sampler(3);
    for (SystemType st : {SystemType::A2, SystemType::B2, SystemType::G2}) {
      const WeylGroup wg(st);
      const RootSystem& rs = wg.roots();
      const BszParams params = sampler.draw_params(rs, 2, rs.simply_laced() ? 0 : 1);
      PairingEngine engine(wg, params);
      const std::vector<Weight> box = dominant_weights_in_box(2, 2);
      for (const Weight& lam : box) {
        for (const Weight& mu : box) {
          const Rational v = engine.pair_P_m(lam, mu);
          if (mu == lam) {
            CHECK(v == 1);
          } else if (!dominance_leq(rs, lam, mu)) {
            CHECK(v == 0);
          }
          const bool lam_deep = is_sufficiently_deep(rs, lam, params.m_short(), params.m_long());
          const bool mu_deep = is_sufficiently_deep(rs, mu, params.m_short(), params.m_long());
          const Rational pp = engine.pair_P_P(lam, mu);
          CHECK(pp == engine.pair_P_P(mu, lam));
          if (lam == mu && lam_deep) CHECK(pp == *engine.polynomial(lam).norm_const);
          if (lam != mu && lam_deep && mu_deep) CHECK(pp == 0);
          if (lam != mu && (lam_deep || mu_deep)) {
            CHECK(engine.pair_p_p(lam, mu) == 0);
          } else if (!lam_deep && !mu_deep) {
            CHECK_THROWS_AS(engine.pair_p_p(lam, mu), DomainError);
          }
          if (lam == mu && lam_deep) CHECK(engine.pair_p_p(lam, lam) == 1 / *engine.polynomial(lam).norm_const);
        }
      }
    }

    // The formula polynomial of a shallow weight is not the orthogonal one.
    {
      const WeylGroup a2(SystemType::A2);
      PairingEngine engine(a2, BszParams({Rational(-4, 5), Rational(6, 7)}, {}));
      CHECK_FALSE(engine.polynomial(Weight{0, 0}).deep);
      CHECK(engine.polynomial(Weight{1, 1}).deep);
      CHECK(engine.pair_P_P(Weight{0, 0}, Weight{1, 1}) != 0);
      CHECK(engine.pair_p_p(Weight{0, 0}, Weight{1, 1}) == 0);
    }

    // Zero parameters: characters are orthonormal.
    const WeylGroup b2(SystemType::B2);
    PairingEngine chars(b2, BszParams());
    for (const Weight& lam : dominant_weights_in_box(2, 2)) {
      for (const Weight& mu : dominant_weights_in_box(2, 2)) CHECK(chars.pair_P_P(lam, mu) == (lam == mu ? 1 : 0));
    }
  }
}
