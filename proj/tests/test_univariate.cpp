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

#include <cmath>
#include <numbers>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/error.hpp"
#include "bsz/quadrature.hpp"
#include "bsz/sampling.hpp"
#include "bsz/univariate.hpp"
#include "oracles.hpp"

using namespace bsz;

namespace {

/// (1/2pi) int_0^pi f g Delta dx with c(x) = prod (1 + t e^{-2ix}), by the
/// trapezoid rule over the full circle (the integrand is even).
double classic_inner(const std::vector<Rational>& f, const std::vector<Rational>& g, const std::vector<Rational>& ts,
                     int nodes) {
  auto m = [](std::size_t k, double x) { return k == 0 ? 1.0 : 2.0 * std::cos(static_cast<double>(k) * x); };
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double x = 2.0 * std::numbers::pi * j / nodes;
    double fv = 0.0, gv = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) fv += f[k].get_d() * m(k, x);
    for (std::size_t k = 0; k < g.size(); ++k) gv += g[k].get_d() * m(k, x);
    double w = 4.0 * std::sin(x) * std::sin(x);
    for (const Rational& t : ts) {
      const double td = t.get_d();
      w /= 1.0 + 2.0 * td * std::cos(2.0 * x) + td * td;
    }
    sum += fv * gv * w;
  }
  return 0.5 * sum / nodes;
}

}  // namespace

TEST_SUITE("univariate") {
  TEST_CASE("frozen values") {
    CHECK(classic_p(3, ClassicParams({})) == std::vector<Rational>{0, 1, 0, 1});
    const Rational t(1, 4);
    CHECK(classic_p(2, ClassicParams({t})) == std::vector<Rational>{1 + t, 0, 1});

    const ClassicParams three({Rational(1, 2), Rational(1, 3), Rational(1, 5)});
    CHECK(classic_normalization(2, three) == Rational(29, 30));
    CHECK(classic_norm(2, three) == Rational(30, 29));
    CHECK(classic_normalization(5, three) == 1);
    CHECK(classic_norm(5, three) == 1);
    for (int ell = 0; ell < 5; ++ell) CHECK(classic_normalization(ell, ClassicParams({})) == 1);

    const Rational t1(2, 3), t2(-1, 2);
    const ClassicParams two({t1, t2});
    const std::vector<Rational> p1 = classic_p(1, two);
    CHECK(p1.back() == 1);
    CHECK(classic_normalization(1, two) == 1 - t1 * t2);
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(ClassicParams({Rational(1)}), InputError);
    CHECK_THROWS_AS(ClassicParams({Rational(0)}), InputError);
    CHECK_THROWS_AS(classic_p(0, ClassicParams({Rational(1, 2), Rational(1, 3)})), DomainError);
    CHECK_THROWS_AS(classic_p(-1, ClassicParams({})), DomainError);
  }

  TEST_CASE("closed form against direct expansion and the root-system path") {
    const WeylGroup a1(SystemType::A1);
    ParameterSampler sampler(20240607);
    for (int m = 0; m <= 3; ++m) {
      for (int draw = 0; draw < 3; ++draw) {
        const std::vector<Rational> ts = sampler.draw_list(m);
        const ClassicParams cp(ts);
        for (int ell = std::max(0, m - 1); ell <= 6; ++ell) {
          const std::vector<Rational> p = classic_p(ell, cp);
          CHECK(p == oracle::classic_expansion(ell, ts));
          CHECK(classic_normalization(ell, cp) == oracle::classic_normalization(ell, ts));
          const BszPolynomial mp = monic_p(a1, Weight{ell}, BszParams(ts, {}));
          for (int k = 0; k <= ell; ++k) CHECK(mp.mono_exp.coefficient(Weight{k}) == p[static_cast<std::size_t>(k)]);
          CHECK(classic_norm(ell, cp) == 1 / *mp.norm_const);
        }
      }
    }
  }

  TEST_CASE("quadrature agreement") {
    const WeylGroup a1(SystemType::A1);
    const TorusGrid grid = TorusGrid::standard(1);
    ParameterSampler sampler(5);
    for (int m = 0; m <= 3; ++m) {
      const std::vector<Rational> ts = sampler.draw_list(m, Rational(1, 2));
      const ClassicParams cp(ts);
      const BszParams params(ts, {});
      for (int ell = std::max(0, m - 1); ell <= 5; ++ell) {
        for (int k = std::max(0, m - 1); k <= ell; ++k) {
          const std::vector<Rational> a = classic_p(ell, cp), b = classic_p(k, cp);
          const double want = ell == k ? classic_norm(ell, cp).get_d() : 0.0;
          CHECK(std::abs(classic_inner(a, b, ts, 256) - want) < 1e-10);
          SymmetricPolynomial fa, fb;
          for (std::size_t j = 0; j < a.size(); ++j) fa.add(Weight{static_cast<std::int64_t>(j)}, a[j]);
          for (std::size_t j = 0; j < b.size(); ++j) fb.add(Weight{static_cast<std::int64_t>(j)}, b[j]);
          CHECK(std::abs(inner_product_num(a1, fa, fb, params, grid) - want) < 1e-10);
        }
      }
    }
  }
}
