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

#include <algorithm>
#include <stdexcept>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/error.hpp"
#include "bsz/weight_lattice.hpp"

namespace bsz {

/// Dense table of F on {beta in Q_+ : beta_i <= ext_i}, beta in simple-root coordinates.
struct PairingEngine::SeriesBox {
  Weight ext;
  std::vector<Rational> data;

  bool covers(const Weight& beta) const {
    for (int i = 0; i < ext.rank(); ++i) {
      if (beta[i] > ext[i]) return false;
    }
    return true;
  }
  std::size_t index(const Weight& beta) const {
    std::size_t idx = 0;
    for (int i = ext.rank() - 1; i >= 0; --i) {
      idx = idx * static_cast<std::size_t>(ext[i] + 1) + static_cast<std::size_t>(beta[i]);
    }
    return idx;
  }
};

PairingEngine::PairingEngine(const WeylGroup& wg, BszParams params, BuildOptions options)
    : wg_(&wg), params_(std::move(params)), options_(options), characters_(wg) {
  if (wg.roots().simply_laced() && params_.m_long() > 0) {
    throw InputError("PairingEngine: long parameters on a simply-laced system");
  }
}

void PairingEngine::ensure_box(const Weight& beta_sr) {
  if (box_ && box_->covers(beta_sr)) return;
  const RootSystem& rs = wg_->roots();
  const int r = rs.rank();

  auto box = std::make_shared<SeriesBox>();
  box->ext = Weight(r);
  std::size_t size = 1;
  for (int i = 0; i < r; ++i) {
    const std::int64_t old = box_ ? box_->ext[i] : 0;
    box->ext[i] = std::max(beta_sr[i], old + old / 2);
    size *= static_cast<std::size_t>(box->ext[i] + 1);
  }
  box->data.assign(size, Rational(0));
  box->data[0] = 1;

  std::int64_t longest = 0;
  for (int i = 0; i < r; ++i) longest = std::max(longest, box->ext[i]);
  // g_n = f_n - f_{n-1}: coefficients of (1 - z) / c(z).
  auto g_series = [&](RootLength which) {
    const std::vector<Rational> f = inv_c_coefficients(params_, which, static_cast<int>(longest));
    std::vector<Rational> g(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) g[n] = n == 0 ? f[0] : f[n] - f[n - 1];
    return g;
  };
  const std::vector<Rational> gs = g_series(RootLength::short_roots);
  const std::vector<Rational> gl = g_series(RootLength::long_roots);

  std::vector<Weight> coords(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    Weight b(r);
    std::size_t rest = idx;
    for (int i = 0; i < r; ++i) {
      const auto dim = static_cast<std::size_t>(box->ext[i] + 1);
      b[i] = static_cast<std::int64_t>(rest % dim);
      rest /= dim;
    }
    coords[idx] = b;
  }

  for (const Root& alpha : rs.positive_roots()) {
    const std::vector<Rational>& g = alpha.is_long ? gl : gs;
    // In place, highest index first: beta - n alpha always has a smaller index.
    for (std::size_t idx = size; idx-- > 0;) {
      Rational acc = g[0] * box->data[idx];
      Weight b = coords[idx];
      for (std::size_t n = 1; n < g.size(); ++n) {
        b -= alpha.sr_coords;
        if (!b.is_dominant()) break;  // a coordinate went negative
        const Rational& prev = box->data[box->index(b)];
        if (prev != 0) acc += g[n] * prev;
      }
      box->data[idx] = acc;
    }
  }
  box_ = std::move(box);
}

Rational PairingEngine::series_coefficient(const Weight& beta_sr) {
  if (!beta_sr.is_dominant()) return Rational(0);  // outside Q_+
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_box(beta_sr);
  return box_->data[box_->index(beta_sr)];
}

Rational PairingEngine::pair_P_m(const Weight& lam, const Weight& mu) {
  const RootSystem& rs = wg_->roots();
  if (lam.rank() != rs.rank() || mu.rank() != rs.rank()) throw InputError("pair_P_m: weight rank mismatch");
  if (!lam.is_dominant() || !mu.is_dominant()) throw DomainError("pair_P_m: weights must be dominant");

  std::vector<Weight> betas;
  for (const Weight& nu : wg_->orbit(mu)) {
    const auto beta = rs.root_lattice_coordinates(nu - lam);
    if (!beta) return Rational(0);  // lam and mu in different cosets of Q
    if (beta->is_dominant()) betas.push_back(*beta);
  }
  if (betas.empty()) return Rational(0);

  Weight hull = betas.front();
  for (const Weight& b : betas) {
    for (int i = 0; i < hull.rank(); ++i) hull[i] = std::max(hull[i], b[i]);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_box(hull);
  Rational total(0);
  for (const Weight& b : betas) total += box_->data[box_->index(b)];
  return total;
}

const BszPolynomial& PairingEngine::polynomial(const Weight& lam) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = polys_.find(lam);
    if (it != polys_.end()) return *it->second;
  }
  auto p = std::make_unique<BszPolynomial>(build_P(*wg_, lam, params_, options_, &characters_));
  std::lock_guard<std::mutex> lock(mutex_);
  return *polys_.try_emplace(lam, std::move(p)).first->second;
}

Rational PairingEngine::pair_P_P(const Weight& lam, const Weight& mu) {
  const BszPolynomial& p = polynomial(mu);
  Rational total(0);
  for (const auto& [nu, c] : p.mono_exp) total += c * pair_P_m(lam, nu);
  return total;
}

Rational PairingEngine::pair_p_p(const Weight& lam, const Weight& mu) {
  const RootSystem& rs = wg_->roots();
  const BszPolynomial& pl = polynomial(lam);
  const BszPolynomial& pm = polynomial(mu);
  if (!pl.deep && !pm.deep) {
    throw DomainError("<p, p> needs a deep weight; neither " + to_string(lam) + " nor " + to_string(mu) + " is");
  }
  if (pl.deep && pm.deep) return pair_P_P(lam, mu) / (*pl.norm_const * *pm.norm_const);
  if (lam == mu) return Rational(1) / *pl.norm_const;  // unreachable: equal weights share deepness
  const BszPolynomial& d = pl.deep ? pl : pm;
  const Weight& s = pl.deep ? mu : lam;
  if (dominance_leq(rs, d.lam, s)) {
    // Every key of P_d lies below d, hence strictly below s.
    for (const auto& [nu, c] : d.mono_exp) {
      if (!dominance_leq(rs, nu, d.lam)) {
        throw std::logic_error("P_" + to_string(d.lam) + " has key " + to_string(nu) + " outside its dominance ideal");
      }
    }
    return Rational(0);
  }
  for (const Weight& kappa : saturated_set(*wg_, s).dominant_members) {
    const Rational v = pair_P_m(d.lam, kappa);
    if (v != 0) {
      throw std::logic_error("<P_" + to_string(d.lam) + ", m_" + to_string(kappa) + "> = " + to_string(v) +
                           " below the shallow weight " + to_string(s));
    }
  }
  return Rational(0);
}

Rational exact_pairing_P_m(const WeylGroup& wg, const Weight& lam, const Weight& mu, const BszParams& params) {
  PairingEngine engine(wg, params);
  return engine.pair_P_m(lam, mu);
}

Rational exact_pairing_P_P(const WeylGroup& wg, const Weight& lam, const Weight& mu, const BszParams& params,
                           const BuildOptions& options) {
  PairingEngine engine(wg, params, options);
  return engine.pair_P_P(lam, mu);
}

Rational exact_pairing_p_p(const WeylGroup& wg, const Weight& lam, const Weight& mu, const BszParams& params,
                           const BuildOptions& options) {
  PairingEngine engine(wg, params, options);
  return engine.pair_p_p(lam, mu);
}

}  // namespace bsz
