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

#include "bsz/verify.hpp"

#include <algorithm>
#include <array>

#include "bsz/error.hpp"
#include "bsz/sampling.hpp"
#include "bsz/symmetric.hpp"
#include "bsz/univariate.hpp"

namespace bsz {

std::string_view status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
  }
  return "?";
}

void Tally::absorb(const Tally& other, const std::string& context) {
  if (other.failures_ > 0 && failures_ == 0) first_ = context + ": " + other.first_;
  if (!other.skip_reason_.empty() && skip_reason_.empty()) skip_reason_ = context + ": " + other.skip_reason_;
  cases_ += other.cases_;
  failures_ += other.failures_;
}

CheckResult Tally::result(std::string suite, std::string name, std::string summary) const {
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.cases = cases_;
  r.failures = failures_;
  if (failures_ > 0) {
    r.status = CheckStatus::fail;
    r.detail = first_;
  } else if (!skip_reason_.empty()) {
    r.status = CheckStatus::skip;
    r.detail = skip_reason_;
  } else {
    r.detail = std::move(summary);
  }
  return r;
}

std::vector<MConfig> effective_configs(const RootSystem& rs, const std::vector<MConfig>& configs) {
  std::vector<MConfig> out;
  for (auto [ms, ml] : configs) {
    const MConfig c{ms, rs.simply_laced() ? 0 : ml};
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

namespace {

std::string pair_label(const Weight& lam, const Weight& mu) { return to_string(lam) + ", " + to_string(mu); }

std::string params_label(const BszParams& p) {
  std::string s = "ts=(";
  for (std::size_t i = 0; i < p.ts().size(); ++i) s += (i ? "," : "") + to_string(p.ts()[i]);
  s += ") tl=(";
  for (std::size_t i = 0; i < p.tl().size(); ++i) s += (i ? "," : "") + to_string(p.tl()[i]);
  return s + ")";
}

bool is_deep(const RootSystem& rs, const Weight& lam, const BszParams& p) {
  return is_sufficiently_deep(rs, lam, p.m_short(), p.m_long());
}

}  // namespace

Tally check_biorthogonality(PairingEngine& engine, const std::vector<Weight>& weights) {
  const RootSystem& rs = engine.group().roots();
  Tally t;
  for (const Weight& lam : weights) {
    for (const Weight& mu : weights) {
      if (mu != lam && dominance_leq(rs, lam, mu)) continue;  // mu above lam: no claim
      const Rational v = engine.pair_P_m(lam, mu);
      const Rational want(mu == lam ? 1 : 0);
      t.expect(v == want, [&] {
        return "<P_lam, m_mu> at (" + pair_label(lam, mu) + ") = " + to_string(v) + ", expected " + to_string(want);
      });
    }
  }
  return t;
}

Tally check_explicit_formula(PairingEngine& engine, const std::vector<Weight>& weights) {
  const WeylGroup& wg = engine.group();
  const RootSystem& rs = wg.roots();
  const BszParams& params = engine.params();
  Tally t;
  for (const Weight& lam : weights) {
    if (!is_deep(rs, lam, params)) continue;
    const BszPolynomial* p = nullptr;
    try {
      p = &engine.polynomial(lam);
    } catch (const std::logic_error& e) {
      t.expect(false, [&] { return std::string(e.what()); });
      continue;
    }
    t.expect(is_triangular(rs, *p), [&] { return "P_" + to_string(lam) + " is not triangular"; });
    const Rational n = normalization_constant(rs, lam, params);
    t.expect(p->mono_exp.coefficient(lam) == n, [&] {
      return "leading coefficient of P_" + to_string(lam) + " is " + to_string(p->mono_exp.coefficient(lam)) +
             ", N = " + to_string(n);
    });
    const Weight tilde = lambda_tilde(rs, lam, params.m_short(), params.m_long());
    const std::vector<ElementId> stab = wg.stabilizer(tilde);
    const Rational e = poincare_enumerated(wg, stab, params.bold_ts(), params.bold_tl());
    t.expect(e == n, [&] {
      return "N_" + to_string(lam) + " = " + to_string(n) + " but the stabilizer series gives " + to_string(e);
    });
  }
  return t;
}

Tally check_norm_orthogonality(PairingEngine& engine, const std::vector<Weight>& weights,
                               std::uint64_t* incomparable_pairs, std::uint64_t* formula_mixed_nonzero) {
  const RootSystem& rs = engine.group().roots();
  const BszParams& params = engine.params();
  Tally t;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Weight& lam = weights[i];
    const bool lam_deep = is_deep(rs, lam, params);
    if (lam_deep) {
      const Rational v = engine.pair_P_P(lam, lam);
      const Rational n = normalization_constant(rs, lam, params);
      t.expect(v == n, [&] { return "<P, P> at " + to_string(lam) + " = " + to_string(v) + ", N = " + to_string(n); });
    }
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      const Weight& mu = weights[j];
      const Rational a = engine.pair_P_P(lam, mu);
      const Rational b = engine.pair_P_P(mu, lam);
      t.expect(a == b, [&] { return "<P, P> not symmetric at (" + pair_label(lam, mu) + ")"; });
      const bool mu_deep = is_deep(rs, mu, params);
      if (!lam_deep && !mu_deep) continue;
      if (lam_deep && mu_deep) {
        t.expect(a == 0, [&] { return "<P_lam, P_mu> at (" + pair_label(lam, mu) + ") = " + to_string(a); });
      } else {
        if (formula_mixed_nonzero && a != 0) ++*formula_mixed_nonzero;
        bool ok = true;
        std::string why;
        try {
          ok = engine.pair_p_p(lam, mu) == 0 && engine.pair_p_p(mu, lam) == 0;
        } catch (const std::logic_error& e) {
          ok = false;
          why = e.what();
        }
        t.expect(ok, [&] { return "<p_lam, p_mu> at (" + pair_label(lam, mu) + ") not zero: " + why; });
      }
      if (incomparable_pairs && !dominance_leq(rs, lam, mu) && !dominance_leq(rs, mu, lam)) ++*incomparable_pairs;
    }
  }
  return t;
}

Tally check_poincare(const WeylGroup& wg, int bound, const std::vector<std::pair<Rational, Rational>>& params) {
  Tally t;
  for (const Weight& tilde : dominant_weights_in_box(wg.rank(), bound)) {
    const std::vector<ElementId> stab = wg.stabilizer(tilde);
    for (const auto& [ts, tl] : params) {
      const Rational e = poincare_enumerated(wg, stab, ts, tl);
      const Rational p = poincare_product(wg.roots(), tilde, ts, tl);
      t.expect(e == p, [&] {
        return "W_" + to_string(tilde) + " at ts=" + to_string(ts) + ", tl=" + to_string(tl) + ": enumerated " +
               to_string(e) + ", product " + to_string(p);
      });
    }
  }
  return t;
}

Tally check_classic(std::uint64_t seed, int draws, int max_m, int max_ell) {
  const WeylGroup wg(SystemType::A1);
  ParameterSampler sampler(seed);
  Tally t;

  // Frozen instance: M = 3, t = (1/2, 1/3, 1/5), ell = 2.
  {
    const ClassicParams cp({Rational(1, 2), Rational(1, 3), Rational(1, 5)});
    t.expect(classic_normalization(2, cp) == Rational(29, 30), [] { return std::string("N_2 != 29/30"); });
    t.expect(classic_norm(2, cp) == Rational(30, 29), [] { return std::string("<p_2, p_2> != 30/29"); });
  }

  for (int m = 0; m <= max_m; ++m) {
    for (int d = 0; d < (m == 0 ? 1 : draws); ++d) {
      const std::vector<Rational> ts = sampler.draw_list(m);
      const ClassicParams cp(ts);
      const BszParams params(ts, {});
      PairingEngine engine(wg, params);
      Rational prod(1);
      for (const Rational& q : ts) prod *= q;
      for (int ell = std::max(m - 1, 0); ell <= max_ell; ++ell) {
        const std::string where = "M=" + std::to_string(m) + " ell=" + std::to_string(ell) + " " + params_label(params);
        const Rational want_n = ell == m - 1 ? 1 - prod : Rational(1);
        t.expect(classic_normalization(ell, cp) == want_n, [&] { return where + ": classic N"; });
        t.expect(classic_norm(ell, cp) == 1 / want_n, [&] { return where + ": classic norm"; });

        const std::vector<Rational> coeff = classic_p(ell, cp);
        t.expect(coeff.back() == 1, [&] { return where + ": classic p not monic"; });

        const Weight lam{ell};
        const BszPolynomial p = monic_p(wg, lam, params);
        bool same = true;
        for (int k = 0; k <= ell; ++k) same = same && p.mono_exp.coefficient(Weight{k}) == coeff[static_cast<std::size_t>(k)];
        for (const auto& [mu, c] : p.mono_exp) same = same && mu[0] >= 0 && mu[0] <= ell;
        t.expect(same, [&] { return where + ": monic_p differs from the closed form"; });
        t.expect(normalization_constant(wg.roots(), lam, params) == want_n, [&] { return where + ": N_lam"; });
        const Rational exact_norm = engine.pair_P_P(lam, lam) / (want_n * want_n);
        t.expect(exact_norm == classic_norm(ell, cp), [&] { return where + ": exact <p, p> = " + to_string(exact_norm); });
      }
    }
  }
  return t;
}

Tally check_saturated_orbit(const WeylGroup& wg, int bound, const ScanLimits& limits, Execution exec) {
  Tally t;
  for (const Weight& lam : dominant_weights_in_box(wg.rank(), bound)) {
    try {
      const PropositionReport s = verify_saturated_prop(wg, lam, limits, exec);
      t.expect(s.passed, [&] { return "saturated proposition fails at " + to_string(lam); });
      const PropositionReport o = verify_orbit_prop(wg, lam, limits, exec);
      t.expect(o.passed, [&] { return "orbit proposition fails at " + to_string(lam); });
    } catch (const CapExceeded& e) {
      t.skip(to_string(lam) + ": " + e.what());
    }
  }
  return t;
}

Tally check_vertex(const WeylGroup& wg, int bound, const ScanLimits& limits, Execution exec) {
  const RootSystem& rs = wg.roots();
  Tally t;
  for (const Weight& lam : dominant_weights_in_box(wg.rank(), bound)) {
    if (!lam.is_strongly_dominant()) continue;
    const std::int64_t ms_max = min_pairing_short(rs, lam);
    const std::optional<std::int64_t> ml_max = min_pairing_long(rs, lam);
    for (std::int64_t ms = 1; ms <= ms_max; ++ms) {
      for (std::int64_t ml = ml_max ? 1 : 0; ml <= ml_max.value_or(0); ++ml) {
        try {
          const PropositionReport r = verify_vertex_prop(wg, lam, static_cast<int>(ms), static_cast<int>(ml), limits, exec);
          t.expect(r.passed, [&] {
            return "vertex proposition fails at " + to_string(lam) + " ms=" + std::to_string(ms) +
                   " ml=" + std::to_string(ml);
          });
        } catch (const CapExceeded& e) {
          t.skip(to_string(lam) + ": " + e.what());
        }
      }
    }
  }
  return t;
}

Tally check_hull(const WeylGroup& wg, int bound) {
  Tally t;
  for (const Weight& lam : dominant_weights_in_box(wg.rank(), bound)) {
    const SaturatedSet sat = saturated_set(wg, lam);
    t.expect(hull_lattice_points(wg, lam) == sat.full_members,
             [&] { return "hull lattice points differ from P(" + to_string(lam) + ")"; });
    t.expect(is_string_closed(wg, sat.full_members), [&] { return "P(" + to_string(lam) + ") is not string-closed"; });
    t.expect(saturated_set_by_strings(wg, lam) == sat.full_members,
             [&] { return "string closure differs from P(" + to_string(lam) + ")"; });
  }
  return t;
}

Tally check_characters(const WeylGroup& wg, int bound) {
  const RootSystem& rs = wg.roots();
  const ExponentialSum a_rho = alternating_sum(wg, rs.rho());
  Tally t;
  for (const Weight& lam : dominant_weights_in_box(wg.rank(), bound)) {
    const SymmetricPolynomial ch = character_to_monomials(wg, lam);
    t.expect(ch.coefficient(lam) == 1, [&] { return "chi_" + to_string(lam) + " is not monic"; });
    bool below = true;
    for (const auto& [mu, c] : ch) below = below && dominance_leq(rs, mu, lam);
    t.expect(below, [&] { return "chi_" + to_string(lam) + " has a key above lam"; });
    t.expect(monomial_dimension(wg, ch) == weyl_dimension(rs, lam),
             [&] { return "dimension of chi_" + to_string(lam) + " differs from the Weyl dimension"; });
    t.expect(multiply(a_rho, to_exponentials(wg, ch)) == alternating_sum(wg, lam + rs.rho()),
             [&] { return "A_rho chi_" + to_string(lam) + " != A_{lam+rho}"; });
  }
  if (rs.type() == SystemType::A2) {
    SymmetricPolynomial adjoint;
    adjoint.add(Weight{1, 1}, Rational(1));
    adjoint.add(Weight{0, 0}, Rational(2));
    t.expect(character_to_monomials(wg, Weight{1, 1}) == adjoint, [] { return std::string("A2 adjoint"); });
  }
  return t;
}

std::vector<std::string_view> suite_names() noexcept {
  return {"lattice", "theorems", "poincare", "classic", "characters"};
}

namespace {

std::vector<SystemType> pick(const SuiteOptions& o, std::vector<SystemType> defaults) {
  return o.systems.empty() ? defaults : o.systems;
}

std::vector<CheckResult> suite_lattice(const SuiteOptions& o) {
  using enum SystemType;
  std::vector<CheckResult> out;
  const int bound = o.bound.value_or(2);
  for (SystemType type : pick(o, {A1, A2, B2, G2, A3, B3})) {
    const WeylGroup wg(type);
    const std::string sys(wg.roots().name());
    out.push_back(check_saturated_orbit(wg, bound, o.limits, o.exec).result("lattice", "saturated+orbit " + sys));
    if (wg.rank() <= 2 || !o.systems.empty()) {
      out.push_back(check_vertex(wg, bound + 1, o.limits, o.exec).result("lattice", "vertex " + sys));
    }
    out.push_back(check_hull(wg, bound).result("lattice", "hull " + sys));
  }
  return out;
}

std::vector<CheckResult> suite_theorems(const SuiteOptions& o) {
  using enum SystemType;
  std::vector<CheckResult> out;
  const int bound = o.bound.value_or(3);
  ParameterSampler sampler(o.seed);
  for (SystemType type : pick(o, {A1, A2, B2, G2})) {
    const WeylGroup wg(type);
    const RootSystem& rs = wg.roots();
    const std::string sys(rs.name());
    const std::vector<Weight> weights = dominant_weights_in_box(rs.rank(), bound);
    Tally bio, formula, norm;
    std::uint64_t incomparable = 0, formula_nonzero = 0;
    for (auto [ms, ml] : effective_configs(rs, o.m_configs)) {
      for (int d = 0; d < (ms + ml == 0 ? 1 : o.draws); ++d) {
        const BszParams params = sampler.draw_params(rs, ms, ml);
        const std::string ctx = sys + " " + params_label(params);
        try {
          PairingEngine engine(wg, params, o.build);
          bio.absorb(check_biorthogonality(engine, weights), ctx);
          formula.absorb(check_explicit_formula(engine, weights), ctx);
          std::uint64_t inc = 0;
          norm.absorb(check_norm_orthogonality(engine, weights, &inc, &formula_nonzero), ctx);
          incomparable = std::max(incomparable, inc);
        } catch (const CapExceeded& e) {
          formula.skip(ctx + ": " + e.what());
          norm.skip(ctx + ": " + e.what());
        }
      }
    }
    out.push_back(bio.result("theorems", "biorthogonality " + sys));
    out.push_back(formula.result("theorems", "explicit-formula " + sys));
    out.push_back(norm.result("theorems", "norm-orthogonality " + sys,
                              std::to_string(incomparable) + " incomparable pairs with a deep member; " +
                                  std::to_string(formula_nonzero) +
                                  " mixed pairs where the shallow formula polynomial is not orthogonal"));
  }
  return out;
}

std::vector<CheckResult> suite_poincare(const SuiteOptions& o) {
  using enum SystemType;
  std::vector<CheckResult> out;
  ParameterSampler sampler(o.seed);
  std::vector<std::pair<Rational, Rational>> params;
  for (int d = 0; d < o.draws; ++d) {
    Rational ts = sampler.draw();
    Rational tl = sampler.draw();
    params.emplace_back(ts, tl);
  }
  for (SystemType type : pick(o, {A1, A2, A3, B2, B3, C3, G2, F4})) {
    const WeylGroup wg(type);
    const int bound = o.bound.value_or(wg.rank() <= 3 ? 2 : 1);
    out.push_back(check_poincare(wg, bound, params).result("poincare", "product=enumeration " + std::string(wg.roots().name())));
  }
  return out;
}

std::vector<CheckResult> suite_classic(const SuiteOptions& o) {
  return {check_classic(o.seed, std::max(o.draws, 3), 3, o.bound.value_or(6)).result("classic", "classic A1")};
}

std::vector<CheckResult> suite_characters(const SuiteOptions& o) {
  using enum SystemType;
  std::vector<CheckResult> out;
  const int bound = o.bound.value_or(3);
  for (SystemType type : pick(o, {A1, A2, B2, G2})) {
    const WeylGroup wg(type);
    out.push_back(check_characters(wg, bound).result("characters", "characters " + std::string(wg.roots().name())));
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& options) {
  if (suite == "lattice") return suite_lattice(options);
  if (suite == "theorems") return suite_theorems(options);
  if (suite == "poincare") return suite_poincare(options);
  if (suite == "classic") return suite_classic(options);
  if (suite == "characters") return suite_characters(options);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (std::string_view name : suite_names()) {
      std::vector<CheckResult> part = run_suite(name, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw InputError("unknown suite '" + std::string(suite) + "' (lattice, theorems, poincare, classic, characters, all)");
}

}  // namespace bsz
