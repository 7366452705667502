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

#ifndef BSZ_SYMMETRIC_HPP
#define BSZ_SYMMETRIC_HPP

#include <map>
#include <mutex>
#include <optional>

#include "bsz/rational.hpp"
#include "bsz/weight.hpp"
#include "bsz/weyl_group.hpp"

namespace bsz {

/// Finite rational combination of basis elements labelled by weights.
/// Zero coefficients are never stored, so map equality is value equality.
template <class Basis>
class WeightCombination {
 public:
  using Map = std::map<Weight, Rational>;

  WeightCombination() = default;
  explicit WeightCombination(const Map& terms) {
    for (const auto& [w, c] : terms) add(w, c);
  }

  void add(const Weight& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  WeightCombination& operator+=(const WeightCombination& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  WeightCombination& operator-=(const WeightCombination& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  WeightCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  /// Adds s * o.
  void axpy(const Rational& s, const WeightCombination& o) {
    if (s == 0) return;
    for (const auto& [w, c] : o.terms_) add(w, s * c);
  }

  friend WeightCombination operator+(WeightCombination a, const WeightCombination& b) { return a += b; }
  friend WeightCombination operator-(WeightCombination a, const WeightCombination& b) { return a -= b; }
  friend WeightCombination operator*(const Rational& s, WeightCombination a) { return a *= s; }
  friend bool operator==(const WeightCombination& a, const WeightCombination& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

struct ExponentialBasis {};
struct MonomialBasis {};
struct CharacterBasis {};

/// sum c_nu e^{i<nu, x>}: an element of the group algebra of the weight lattice.
using ExponentialSum = WeightCombination<ExponentialBasis>;
/// sum c_lam m_lam over dominant lam.
using SymmetricPolynomial = WeightCombination<MonomialBasis>;
/// sum c_mu chi_mu over dominant mu.
using CharacterExpansion = WeightCombination<CharacterBasis>;

/// e^{i<nu,x>} with coefficient 1.
ExponentialSum exponential(const Weight& nu);

/// m_lam = (1/|W_lam|) sum_w e^{w lam}: the orbit sum, every coefficient 1.
/// Throws DomainError for non-dominant lam.
ExponentialSum monomial(const WeylGroup& wg, const Weight& lam);

ExponentialSum multiply(const ExponentialSum& f, const ExponentialSum& g);

/// sum_w (-1)^w e^{w nu}.
ExponentialSum alternating_sum(const WeylGroup& wg, const Weight& nu);

/// Expands each m_lam into its orbit sum.
ExponentialSum to_exponentials(const WeylGroup& wg, const SymmetricPolynomial& f);

/// Inverse of to_exponentials for W-invariant input. Throws DomainError if
/// the input is not W-invariant.
SymmetricPolynomial collect_monomials(const WeylGroup& wg, const ExponentialSum& f);

struct AlternatingReduction {
  int sign = 1;
  Weight highest;  // dominant; A_nu / A_rho = sign * chi_highest
};

/// A_nu / A_rho reduced to a signed Weyl character: nullopt when nu is singular,
/// otherwise (sign of w with w(nu) dominant, w(nu) - rho).
std::optional<AlternatingReduction> reduce_alternating(const WeylGroup& wg, const Weight& nu);

/// Monomial expansion of the Weyl character chi_lam via Freudenthal's
/// multiplicity formula over the dominant weights below lam. Monic.
SymmetricPolynomial character_to_monomials(const WeylGroup& wg, const Weight& lam);

/// Weyl dimension formula: prod over positive roots of <lam+rho, a^vee>/<rho, a^vee>.
Rational weyl_dimension(const RootSystem& rs, const Weight& lam);

/// Sum of coefficient times orbit size: the number of weights with multiplicity.
Rational monomial_dimension(const WeylGroup& wg, const SymmetricPolynomial& f);

/// Thread-safe memo of character_to_monomials.
class CharacterTable {
 public:
  explicit CharacterTable(const WeylGroup& wg) : wg_(&wg) {}
  SymmetricPolynomial monomials_of(const Weight& lam);

 private:
  const WeylGroup* wg_;
  std::mutex mutex_;
  std::map<Weight, SymmetricPolynomial> cache_;
};

/// Linear extension of character_to_monomials.
SymmetricPolynomial expand_characters(const WeylGroup& wg, const CharacterExpansion& ce,
                                      CharacterTable* table = nullptr);

}  // namespace bsz

#endif  // BSZ_SYMMETRIC_HPP
