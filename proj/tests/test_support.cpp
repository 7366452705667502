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
#include "bsz/serialize.hpp"
#include "bsz/verify.hpp"

using namespace bsz;

TEST_SUITE("support") {
  TEST_CASE("rationals and weights parse strictly") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational(" -2 ") == -2);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("0.5"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK(parse_weight("[2, 1]") == Weight{2, 1});
    CHECK(parse_weight("3") == Weight{3});
    CHECK_THROWS_AS(parse_weight("2;1"), InputError);
    CHECK(to_string(Weight{-1, 2}) == "[-1,2]");
  }

  TEST_CASE("sampler is deterministic and stays in range") {
    ParameterSampler a(42), b(42);
    for (int i = 0; i < 200; ++i) {
      const Rational x = a.draw(Rational(1, 2));
      CHECK(x == b.draw(Rational(1, 2)));
      CHECK(in_parameter_domain(x));
      CHECK(abs(x) <= Rational(1, 2));
    }
    const RootSystem a2 = RootSystem::build(SystemType::A2);
    CHECK(ParameterSampler(1).draw_params(a2, 3, 0).m_short() == 3);
    CHECK(ParameterSampler(1).draw_params(a2, 1, 1).m_long() == 0);  // long entries dropped
  }

  TEST_CASE("polynomial JSON") {
    const WeylGroup a1(SystemType::A1);
    const BszPolynomial p = build_P(a1, Weight{2}, BszParams({Rational(1, 3)}, {}));
    const Json j = polynomial_to_json(a1.roots(), p);
    CHECK(j["monomials"] == Json::parse(R"({"[2]":"1","[0]":"4/3"})"));
    CHECK(j["norm"] == "1");
    CHECK(j["ts"] == Json::parse(R"(["1/3"])"));

    const WeylGroup g2(SystemType::G2);
    const BszParams params({Rational(1, 2), Rational(-1, 3)}, {Rational(2, 7)});
    for (const Weight& lam : {Weight{0, 0}, Weight{2, 1}}) {
      const BszPolynomial q = build_P(g2, lam, params);
      const Json dumped = polynomial_to_json(g2.roots(), q);
      const BszPolynomial back = polynomial_from_json(Json::parse(dumped.dump()));
      CHECK(back.lam == q.lam);
      CHECK(back.params == q.params);
      CHECK(back.char_exp == q.char_exp);
      CHECK(back.mono_exp == q.mono_exp);
      CHECK(back.deep == q.deep);
      CHECK(back.norm_const == q.norm_const);
      CHECK(polynomial_to_json(g2.roots(), back).dump() == dumped.dump());
    }
  }

  TEST_CASE("doubles print round-trip") {
    for (double x : {0.1, -1.0 / 3.0, 1e-17, 12345.678}) CHECK(std::stod(format_double(x)) == x);
  }

  TEST_CASE("suites") {
    SuiteOptions o;
    o.systems = {SystemType::A2};
    for (const CheckResult& r : run_suite("poincare", o)) CHECK(r.status == CheckStatus::pass);
    for (const CheckResult& r : run_suite("classic", SuiteOptions{})) CHECK(r.status == CheckStatus::pass);
    SuiteOptions g;
    g.systems = {SystemType::G2};
    g.bound = 2;
    for (const CheckResult& r : run_suite("lattice", g)) CHECK(r.status == CheckStatus::pass);
    CHECK_THROWS_AS(run_suite("nonsense", o), InputError);
    SuiteOptions capped;
    capped.systems = {SystemType::B2};
    capped.limits.max_vectors = 2;
    bool skipped = false;
    for (const CheckResult& r : run_suite("lattice", capped)) skipped = skipped || r.status == CheckStatus::skip;
    CHECK(skipped);
  }
}
