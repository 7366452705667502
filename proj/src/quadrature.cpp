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

#include "bsz/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "bsz/error.hpp"
#include "bsz/quadrature_kernels.hpp"

namespace bsz {

TorusGrid::TorusGrid(int rank, int points) : rank_(rank), points_(points) {
  if (rank < 1 || rank > kMaxRank) throw InputError("TorusGrid: rank out of range");
  if (points < 2) throw InputError("TorusGrid: need at least 2 points per dimension");
}

int TorusGrid::default_points(int rank) noexcept {
  if (rank <= 2) return 64;
  return rank == 3 ? 32 : 16;
}

std::uint64_t TorusGrid::size() const noexcept {
  std::uint64_t s = 1;
  for (int i = 0; i < rank_; ++i) s *= static_cast<std::uint64_t>(points_);
  return s;
}

double weight_function(const RootSystem& rs, const BszParams& params, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != rs.rank()) throw InputError("weight_function: dimension mismatch");
  double w = 1.0;
  for (const Root& alpha : rs.positive_roots()) {
    double phi = 0.0;
    for (int j = 0; j < rs.rank(); ++j) phi += static_cast<double>(alpha.sr_coords[j]) * theta[static_cast<std::size_t>(j)];
    const double c = std::cos(phi);
    double denom = 1.0;
    for (const Rational& t : params.list(alpha.is_long ? RootLength::long_roots : RootLength::short_roots)) {
      const double td = t.get_d();
      denom *= 1.0 + 2.0 * td * c + td * td;
    }
    w *= (2.0 - 2.0 * c) / denom;
  }
  return w;
}

GramReal MonomialGram::at(const Weight& a, const Weight& b) const {
  auto ia = index.find(a), ib = index.find(b);
  if (ia == index.end() || ib == index.end()) throw InputError("MonomialGram: weight outside the basis");
  return values(ia->second, ib->second);
}

MonomialGram monomial_gram(const WeylGroup& wg, const BszParams& params, std::vector<Weight> basis,
                           const TorusGrid& grid, Execution exec) {
  const RootSystem& rs = wg.roots();
  if (grid.rank() != rs.rank()) throw InputError("monomial_gram: grid rank mismatch");
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  for (const Weight& lam : basis) {
    if (!lam.is_dominant()) throw DomainError("monomial_gram: basis weight " + to_string(lam) + " is not dominant");
  }

  std::vector<Weight> root_freq;
  std::vector<std::vector<GramReal>> root_par;
  for (const Root& alpha : rs.positive_roots()) {
    root_freq.push_back(alpha.sr_coords);
    std::vector<GramReal> ts;
    for (const Rational& t : params.list(alpha.is_long ? RootLength::long_roots : RootLength::short_roots)) {
      ts.push_back(static_cast<GramReal>(t.get_num().get_d()) / static_cast<GramReal>(t.get_den().get_d()));
    }
    root_par.push_back(std::move(ts));
  }

  MonomialGram g;
  g.points = grid.points();
  g.basis = std::move(basis);
  const std::size_t k = g.basis.size();
  g.values.n = k;
  g.values.a.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) g.index.emplace(g.basis[a], a);

  // One sum per coset of Q; monomials from different cosets are orthogonal.
  std::vector<bool> done(k, false);
  const GramReal inv_w = 1 / static_cast<GramReal>(wg.order());
  for (std::size_t first = 0; first < k; ++first) {
    if (done[first]) continue;
    const Weight& rep = g.basis[first];
    std::vector<std::size_t> members;
    GramProblem problem;
    problem.rank = rs.rank();
    problem.points = grid.points();
    problem.root_frequencies = root_freq;
    problem.root_parameters = root_par;
    for (std::size_t a = first; a < k; ++a) {
      if (done[a] || !rs.root_lattice_coordinates(g.basis[a] - rep)) continue;
      done[a] = true;
      members.push_back(a);
      std::vector<Weight> freq;
      for (const Weight& nu : wg.orbit(g.basis[a])) freq.push_back(*rs.root_lattice_coordinates(nu - rep));
      problem.support.push_back(std::move(freq));
    }
    const std::vector<GramReal> packed = gram_sum(problem, exec);
    const std::size_t m = members.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        const GramReal v = packed[packed_index(m, i, j)] * inv_w;
        g.values.a[members[i] * k + members[j]] = v;
        g.values.a[members[j] * k + members[i]] = v;
      }
    }
  }
  return g;
}

double inner_product(const MonomialGram& gram, const std::map<Weight, double>& f, const std::map<Weight, double>& g) {
  GramReal s = 0;
  for (const auto& [a, ca] : f) {
    for (const auto& [b, cb] : g) s += static_cast<GramReal>(ca) * cb * gram.at(a, b);
  }
  return static_cast<double>(s);
}

double inner_product(const MonomialGram& gram, const SymmetricPolynomial& f, const SymmetricPolynomial& g) {
  std::map<Weight, double> fd, gd;
  for (const auto& [w, c] : f) fd.emplace(w, c.get_d());
  for (const auto& [w, c] : g) gd.emplace(w, c.get_d());
  return inner_product(gram, fd, gd);
}

double inner_product_num(const WeylGroup& wg, const SymmetricPolynomial& f, const SymmetricPolynomial& g,
                         const BszParams& params, const TorusGrid& grid, Execution exec) {
  std::vector<Weight> basis;
  for (const auto& [w, c] : f) basis.push_back(w);
  for (const auto& [w, c] : g) basis.push_back(w);
  const MonomialGram gram = monomial_gram(wg, params, std::move(basis), grid, exec);
  return inner_product(gram, f, g);
}

}  // namespace bsz
