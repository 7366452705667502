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

#include "bsz/error.hpp"
#include "bsz/symmetric.hpp"
#include "bsz/weight_lattice.hpp"

namespace bsz {

std::optional<AlternatingReduction> reduce_alternating(const WeylGroup& wg, const Weight& nu) {
  const DominantRepresentative rep = wg.dominant_representative(nu);
  for (int i = 0; i < rep.dominant.rank(); ++i) {
    if (rep.dominant[i] == 0) return std::nullopt;
  }
  return AlternatingReduction{rep.sign, rep.dominant - wg.roots().rho()};
}

SymmetricPolynomial character_to_monomials(const WeylGroup& wg, const Weight& lam) {
  if (!lam.is_dominant()) throw DomainError("character_to_monomials: weight " + to_string(lam) + " is not dominant");
  const RootSystem& rs = wg.roots();
  const SaturatedSet sat = saturated_set(wg, lam);

  // Depth below lam, in units of 1/det of simple-root coordinates.
  auto depth = [&](const Weight& mu) { return rs.scaled_simple_root_coordinates(lam - mu).sum(); };
  std::vector<Weight> order(sat.dominant_members.begin(), sat.dominant_members.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });

  // (nu, alpha) with the short-root-length-2 form: sum_j k_j d_j nu_j.
  auto pair_root = [&](const Weight& nu, const Root& alpha) {
    std::int64_t s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += alpha.sr_coords[j] * rs.symmetrizer()[static_cast<std::size_t>(j)] * nu[j];
    return s;
  };

  std::map<Weight, Rational> mult;
  const Weight top = lam + rs.rho();
  const Rational top_norm = rs.scalar_product(top, top);
  for (const Weight& mu : order) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Rational numer(0);
    for (const Root& alpha : rs.positive_roots()) {
      for (std::int64_t k = 1;; ++k) {
        const Weight up = mu + k * alpha.fw_coords;
        const Weight dom = wg.dominant_representative(up).dominant;
        auto it = mult.find(dom);
        if (it == mult.end()) {
          if (!sat.dominant_members.count(dom)) break;  // left P(lam); strings are unbroken
          throw std::logic_error("Freudenthal recursion visited a weight out of order");
        }
        numer += it->second * pair_root(up, alpha);
      }
    }
    const Weight shifted = mu + rs.rho();
    const Rational denom = top_norm - rs.scalar_product(shifted, shifted);
    Rational m = 2 * numer / denom;
    if (!is_integer(m) || m < 0) throw std::logic_error("non-integral weight multiplicity");
    mult[mu] = m;
  }

  SymmetricPolynomial out;
  for (const auto& [mu, m] : mult) out.add(mu, m);
  return out;
}

Rational weyl_dimension(const RootSystem& rs, const Weight& lam) {
  const Weight shifted = lam + rs.rho();
  Rational d(1);
  for (const Root& alpha : rs.positive_roots()) {
    d *= Rational(coroot_pairing(shifted, alpha), coroot_pairing(rs.rho(), alpha));
  }
  d.canonicalize();
  return d;
}

Rational monomial_dimension(const WeylGroup& wg, const SymmetricPolynomial& f) {
  Rational total(0);
  for (const auto& [lam, c] : f) total += c * static_cast<long>(wg.orbit(lam).size());
  return total;
}

SymmetricPolynomial CharacterTable::monomials_of(const Weight& lam) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(lam);
    if (it != cache_.end()) return it->second;
  }
  SymmetricPolynomial value = character_to_monomials(*wg_, lam);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(lam, std::move(value)).first->second;
}

SymmetricPolynomial expand_characters(const WeylGroup& wg, const CharacterExpansion& ce, CharacterTable* table) {
  SymmetricPolynomial out;
  for (const auto& [mu, c] : ce) {
    out.axpy(c, table ? table->monomials_of(mu) : character_to_monomials(wg, mu));
  }
  return out;
}

}  // namespace bsz
