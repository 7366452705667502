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

#include "bsz/gram_schmidt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "bsz/error.hpp"
#include "bsz/weight_lattice.hpp"

namespace bsz {

namespace {

constexpr double kMinRcond = 1e-12;

std::int64_t scaled_height(const RootSystem& rs, const Weight& w) {
  return rs.scaled_simple_root_coordinates(w).sum();
}

}  // namespace

std::vector<Weight> linear_extension_lower_set(const RootSystem& rs, const Weight& lam) {
  if (!lam.is_dominant()) throw DomainError("linear_extension_lower_set: weight is not dominant");
  const std::int64_t top = scaled_height(rs, lam);
  const auto key = [&](const Weight& w) { return std::make_tuple(scaled_height(rs, w), w); };
  const auto top_key = key(lam);

  // Fundamental weights have positive height, which bounds each coordinate.
  Weight upper(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    Weight omega(rs.rank());
    omega[j] = 1;
    upper[j] = top / scaled_height(rs, omega);
  }
  std::vector<Weight> out;
  Weight mu(rs.rank());
  while (true) {
    if (key(mu) < top_key && rs.root_lattice_coordinates(lam - mu)) out.push_back(mu);
    int i = 0;
    while (i < rs.rank() && mu[i] == upper[i]) mu[i++] = 0;
    if (i == rs.rank()) break;
    ++mu[i];
  }
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return key(a) < key(b); });
  return out;
}

std::vector<Weight> gram_schmidt_support(const WeylGroup& wg, const Weight& lam, OrderMode mode) {
  if (mode == OrderMode::dominance) {
    const SaturatedSet sat = saturated_set(wg, lam);
    return {sat.dominant_members.begin(), sat.dominant_members.end()};
  }
  std::vector<Weight> out = linear_extension_lower_set(wg.roots(), lam);
  out.push_back(lam);
  return out;
}

NumericPolynomial gram_schmidt_p(const WeylGroup& wg, const MonomialGram& gram, const Weight& lam, OrderMode mode) {
  std::vector<Weight> lower = gram_schmidt_support(wg, lam, mode);
  lower.erase(std::remove(lower.begin(), lower.end(), lam), lower.end());

  NumericPolynomial p;
  p.lam = lam;
  p.coeffs[lam] = 1.0;
  if (lower.empty()) return p;

  // sum_nu a_nu <m_nu, m_kappa> = -<m_lam, m_kappa> for every kappa below lam.
  const auto n = static_cast<Eigen::Index>(lower.size());
  using Matrix = Eigen::Matrix<GramReal, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<GramReal, Eigen::Dynamic, 1>;
  Matrix g(n, n);
  Vector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Weight& kappa = lower[static_cast<std::size_t>(i)];
    rhs(i) = -gram.at(lam, kappa);
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = gram.at(lower[static_cast<std::size_t>(j)], kappa);
  }
  const Eigen::PartialPivLU<Matrix> lu(g);
  p.rcond = static_cast<double>(lu.rcond());
  if (!(p.rcond > kMinRcond)) {
    throw NumericalError("gram_schmidt_p: Gram matrix below " + to_string(lam) + " is numerically singular",
                         p.rcond > 0 ? 1.0 / p.rcond : INFINITY);
  }
  const Vector a = lu.solve(rhs);
  for (Eigen::Index i = 0; i < n; ++i) p.coeffs[lower[static_cast<std::size_t>(i)]] = static_cast<double>(a(i));
  return p;
}

NumericPolynomial gram_schmidt_p(const WeylGroup& wg, const Weight& lam, const BszParams& params,
                                 const TorusGrid& grid, OrderMode mode, Execution exec) {
  const MonomialGram gram = monomial_gram(wg, params, gram_schmidt_support(wg, lam, mode), grid, exec);
  return gram_schmidt_p(wg, gram, lam, mode);
}

ShallowScanReport shallow_orthogonality_scan(const WeylGroup& wg, const BszParams& params, int bound,
                                             const TorusGrid& grid, double threshold, Execution exec) {
  const RootSystem& rs = wg.roots();
  ShallowScanReport report;
  report.system = std::string(rs.name());
  report.params = params;
  report.bound = bound;
  report.points = grid.points();
  report.refined_points = grid.refined().points();
  report.threshold = threshold;

  const int ms = params.m_short(), ml = params.m_long();
  for (const Weight& lam : dominant_weights_in_box(rs.rank(), bound)) {
    if (!is_sufficiently_deep(rs, lam, ms, ml)) report.shallow_weights.push_back(lam);
  }
  report.vacuous = ms < 2 && ml < 2;
  if (report.shallow_weights.empty()) return report;

  std::set<Weight> basis;
  for (const Weight& lam : report.shallow_weights) {
    for (const Weight& mu : gram_schmidt_support(wg, lam, OrderMode::dominance)) basis.insert(mu);
  }
  const std::vector<Weight> basis_list(basis.begin(), basis.end());

  std::vector<std::map<Weight, double>> base, fine;
  {
    const MonomialGram g1 = monomial_gram(wg, params, basis_list, grid, exec);
    const MonomialGram g2 = monomial_gram(wg, params, basis_list, grid.refined(), exec);
    for (const Weight& lam : report.shallow_weights) {
      base.push_back(gram_schmidt_p(wg, g1, lam).coeffs);
      fine.push_back(gram_schmidt_p(wg, g2, lam).coeffs);
    }
    for (std::size_t i = 0; i < report.shallow_weights.size(); ++i) {
      for (std::size_t j = i + 1; j < report.shallow_weights.size(); ++j) {
        const Weight& lam = report.shallow_weights[i];
        const Weight& mu = report.shallow_weights[j];
        if (dominance_leq(rs, lam, mu) || dominance_leq(rs, mu, lam)) continue;
        ShallowPair pair;
        pair.lam = lam;
        pair.mu = mu;
        pair.same_coset = rs.root_lattice_coordinates(lam - mu).has_value();
        pair.value = inner_product(g1, base[i], base[j]);
        pair.refined_value = inner_product(g2, fine[i], fine[j]);
        pair.error_estimate = std::abs(pair.value - pair.refined_value);
        pair.significant = std::abs(pair.value) > threshold;
        report.pairs.push_back(pair);
      }
    }
  }
  return report;
}

}  // namespace bsz
