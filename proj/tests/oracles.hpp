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

// Test-only oracles. Each one takes a different road from the library:
// Euclidean root realizations, characters by exact division of alternating
// sums, and the one-variable closed forms written out by hand.

#ifndef BSZ_TESTS_ORACLES_HPP
#define BSZ_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "bsz/rational.hpp"
#include "bsz/root_system.hpp"
#include "bsz/weight.hpp"
#include "bsz/weyl_group.hpp"

namespace bsz::oracle {

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec axpy(const Vec& x, const Rational& s, const Vec& y) {
  Vec out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * y[i];
  return out;
}

/// <a, b^vee> = 2 (a, b) / (b, b).
inline Rational pair(const Vec& a, const Vec& b) { return 2 * dot(a, b) / dot(b, b); }

inline Vec reflect(const Vec& v, const Vec& a) { return axpy(v, -pair(v, a), a); }

/// Simple roots in an explicit Euclidean space, Bourbaki numbering.
struct Euclidean {
  std::vector<Vec> simple;

  static Euclidean of(SystemType t) {
    auto q = [](std::initializer_list<int> xs) {
      Vec v;
      for (int x : xs) v.emplace_back(x);
      return v;
    };
    switch (t) {
      case SystemType::A1:
        return {{q({1, -1})}};
      case SystemType::A2:
        return {{q({1, -1, 0}), q({0, 1, -1})}};
      case SystemType::A3:
        return {{q({1, -1, 0, 0}), q({0, 1, -1, 0}), q({0, 0, 1, -1})}};
      case SystemType::B2:
        return {{q({1, -1}), q({0, 1})}};
      case SystemType::B3:
        return {{q({1, -1, 0}), q({0, 1, -1}), q({0, 0, 1})}};
      case SystemType::C3:
        return {{q({1, -1, 0}), q({0, 1, -1}), q({0, 0, 2})}};
      case SystemType::G2:
        return {{q({1, -1, 0}), q({-2, 1, 1})}};
      default:
        throw std::logic_error("no Euclidean realization in the test oracle");
    }
  }

  /// All roots by closing the simple roots under simple reflections.
  std::set<Vec> roots() const {
    std::set<Vec> all(simple.begin(), simple.end());
    std::vector<Vec> frontier(simple.begin(), simple.end());
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const Vec& v : frontier) {
        for (const Vec& a : simple) {
          Vec w = reflect(v, a);
          if (all.insert(w).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    return all;
  }

  /// Vector with the given simple-root coordinates.
  Vec from_simple(const Weight& sr) const {
    Vec v(simple.front().size(), Rational(0));
    for (std::size_t i = 0; i < simple.size(); ++i) v = axpy(v, Rational(sr[static_cast<int>(i)]), simple[i]);
    return v;
  }

  /// Fundamental weights: omega_i in the span with <omega_i, a_j^vee> = delta_ij.
  std::vector<Vec> fundamental_weights() const {
    const std::size_t r = simple.size();
    // Solve sum_k x_k <a_k, a_j^vee> = delta_ij by Gauss-Jordan.
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Vec> m(r, Vec(r + 1));
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) m[j][k] = pair(simple[k], simple[j]);
        m[j][r] = j == i ? 1 : 0;
      }
      for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        for (std::size_t j = 0; j < r; ++j) {
          if (j == c || m[j][c] == 0) continue;
          const Rational f = m[j][c] / m[c][c];
          for (std::size_t k = c; k <= r; ++k) m[j][k] -= f * m[c][k];
        }
      }
      Vec w(simple.front().size(), Rational(0));
      for (std::size_t k = 0; k < r; ++k) w = axpy(w, m[k][r] / m[k][k], simple[k]);
      out.push_back(w);
    }
    return out;
  }

  Vec from_fundamental(const Weight& fw) const {
    const std::vector<Vec> om = fundamental_weights();
    Vec v(simple.front().size(), Rational(0));
    for (std::size_t i = 0; i < om.size(); ++i) v = axpy(v, Rational(fw[static_cast<int>(i)]), om[i]);
    return v;
  }
};

/// Order on exponents compatible with addition: height first, then lex.
struct ExponentOrder {
  const RootSystem* rs;
  bool operator()(const Weight& a, const Weight& b) const {
    const Weight ha = rs->scaled_simple_root_coordinates(a), hb = rs->scaled_simple_root_coordinates(b);
    if (ha.sum() != hb.sum()) return ha.sum() < hb.sum();
    return a < b;
  }
};

using Poly = std::map<Weight, Rational>;

inline void add_term(Poly& p, const Weight& w, const Rational& c) {
  Rational& slot = p[w];
  slot += c;
  if (slot == 0) p.erase(w);
}

/// sum_w sign(w) e^{w nu}, straight from the group's matrices.
inline Poly alternating(const WeylGroup& wg, const Weight& nu) {
  Poly out;
  for (const WeylElement& w : wg.elements()) add_term(out, w.matrix.apply(nu), Rational(w.sign));
  return out;
}

/// A_{lam+rho} / A_rho by long division; throws if the remainder is nonzero.
/// Returns the dominant-weight coefficients (the monomial expansion).
inline Poly division_character(const WeylGroup& wg, const Weight& lam) {
  const RootSystem& rs = wg.roots();
  const ExponentOrder order{&rs};
  auto leading = [&](const Poly& p) {
    return *std::max_element(p.begin(), p.end(), [&](const auto& x, const auto& y) { return order(x.first, y.first); });
  };
  Poly rem = alternating(wg, lam + rs.rho());
  const Poly divisor = alternating(wg, rs.rho());
  const auto [dlead, dcoef] = leading(divisor);
  Poly quotient;
  while (!rem.empty()) {
    const auto [rlead, rcoef] = leading(rem);
    const Weight shift = rlead - dlead;
    const Rational q = rcoef / dcoef;
    add_term(quotient, shift, q);
    for (const auto& [w, c] : divisor) add_term(rem, w + shift, -q * c);
    if (quotient.size() > 100000) throw std::logic_error("division oracle did not terminate");
  }
  Poly dominant;
  for (const auto& [w, c] : quotient) {
    if (w.is_dominant()) dominant.emplace(w, c);
  }
  return dominant;
}

/// One-variable normalization: 1 - t_1...t_M at ell = M - 1, else 1.
inline Rational classic_normalization(int ell, const std::vector<Rational>& ts) {
  if (ell != static_cast<int>(ts.size()) - 1) return Rational(1);
  Rational p(1);
  for (const Rational& t : ts) p *= t;
  return 1 - p;
}

/// p_ell for the one-variable weight by direct expansion:
/// (c(z) z^{ell+1} - c(1/z) z^{-ell-1}) / (z - 1/z), c(z) = prod (1 + t z^{-2}),
/// divided by the normalization. Returns coefficients of m_0..m_ell.
inline std::vector<Rational> classic_expansion(int ell, const std::vector<Rational>& ts) {
  // c(z) = sum_k e_k z^{-2k}.
  std::vector<Rational> e{Rational(1)};
  for (const Rational& t : ts) {
    e.emplace_back(0);
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += t * e[k - 1];
  }
  // Numerator in powers of z.
  std::map<int, Rational> num;
  for (std::size_t k = 0; k < e.size(); ++k) {
    num[ell + 1 - 2 * static_cast<int>(k)] += e[k];
    num[-(ell + 1) + 2 * static_cast<int>(k)] -= e[k];
  }
  // Divide by z - z^{-1}: quotient q with q(z) (z - 1/z) = num, highest power first.
  std::map<int, Rational> q;
  while (true) {
    auto it = std::find_if(num.rbegin(), num.rend(), [](const auto& kv) { return kv.second != 0; });
    if (it == num.rend()) break;
    const int top = it->first;
    const Rational c = it->second;
    q[top - 1] += c;
    num[top] -= c;
    num[top - 2] += c;
    if (top < -4 * (ell + 4)) throw std::logic_error("classic expansion did not divide");
  }
  const Rational n = classic_normalization(ell, ts);
  std::vector<Rational> out(static_cast<std::size_t>(ell) + 1, Rational(0));
  for (const auto& [p, c] : q) {
    if (c == 0) continue;
    if (p < 0) continue;  // symmetric partner of a positive power
    if (p > ell) throw std::logic_error("classic expansion has degree above ell");
    out[static_cast<std::size_t>(p)] = c / n;
  }
  return out;
}

}  // namespace bsz::oracle

#endif  // BSZ_TESTS_ORACLES_HPP
