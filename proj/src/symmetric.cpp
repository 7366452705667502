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

#include "bsz/symmetric.hpp"

#include "bsz/error.hpp"

namespace bsz {

ExponentialSum exponential(const Weight& nu) {
  ExponentialSum e;
  e.add(nu, Rational(1));
  return e;
}

ExponentialSum monomial(const WeylGroup& wg, const Weight& lam) {
  if (!lam.is_dominant()) throw DomainError("monomial: weight " + to_string(lam) + " is not dominant");
  ExponentialSum e;
  for (const Weight& nu : wg.orbit(lam)) e.add(nu, Rational(1));
  return e;
}

ExponentialSum multiply(const ExponentialSum& f, const ExponentialSum& g) {
  ExponentialSum out;
  for (const auto& [a, ca] : f) {
    for (const auto& [b, cb] : g) out.add(a + b, ca * cb);
  }
  return out;
}

ExponentialSum alternating_sum(const WeylGroup& wg, const Weight& nu) {
  ExponentialSum out;
  for (ElementId w = 0; w < wg.order(); ++w) out.add(wg.act(w, nu), Rational(wg.element(w).sign));
  return out;
}

ExponentialSum to_exponentials(const WeylGroup& wg, const SymmetricPolynomial& f) {
  ExponentialSum out;
  for (const auto& [lam, c] : f) out.axpy(c, monomial(wg, lam));
  return out;
}

SymmetricPolynomial collect_monomials(const WeylGroup& wg, const ExponentialSum& f) {
  SymmetricPolynomial out;
  for (const auto& [nu, c] : f) {
    if (nu.is_dominant()) out.add(nu, c);
  }
  if (!(to_exponentials(wg, out) == f)) throw DomainError("collect_monomials: input is not W-invariant");
  return out;
}

}  // namespace bsz
