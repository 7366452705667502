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

#ifndef BSZ_QUADRATURE_HPP
#define BSZ_QUADRATURE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/lattice_scan.hpp"
#include "bsz/quadrature_kernels.hpp"
#include "bsz/symmetric.hpp"
#include "bsz/weyl_group.hpp"

namespace bsz {

/// Uniform product grid on the torus E / 2 pi P^vee.
///
/// Points are x = sum_j theta_j omega_j^vee with theta_j = 2 pi k_j / N, so a
/// root-lattice exponential e^{i<beta, x>} has integer frequencies given by the
/// simple-root coordinates of beta. Products m_a conj(m_b) with a - b in Q are
/// periodic there after dropping the common phase of the coset; other pairs are
/// orthogonal outright. The rule integrates e^{i<beta,x>} exactly to [beta = 0 mod N].
class TorusGrid {
 public:
  TorusGrid(int rank, int points);
  /// 64 for rank <= 2, 32 for rank 3, 16 for rank 4.
  static int default_points(int rank) noexcept;
  static TorusGrid standard(int rank) { return TorusGrid(rank, default_points(rank)); }

  int rank() const noexcept { return rank_; }
  int points() const noexcept { return points_; }
  std::uint64_t size() const noexcept;
  TorusGrid refined() const { return TorusGrid(rank_, 2 * points_); }

 private:
  int rank_;
  int points_;
};

/// Delta(x) = |delta(x)|^2 / (C(x) C(-x)) at x = sum_j theta_j omega_j^vee.
double weight_function(const RootSystem& rs, const BszParams& params, std::span<const double> theta);

/// Dense symmetric matrix.
struct RealMatrix {
  std::size_t n = 0;
  std::vector<GramReal> a;  // row-major n x n

  GramReal operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// <m_a, m_b>_Delta over a basis of dominant weights, by grid quadrature,
/// normalized by |W| so that <chi_lam, chi_mu> = delta at M = 0.
struct MonomialGram {
  std::vector<Weight> basis;
  std::map<Weight, std::size_t> index;
  RealMatrix values;
  int points = 0;

  GramReal at(const Weight& a, const Weight& b) const;
  bool contains(const Weight& w) const { return index.count(w) != 0; }
};

MonomialGram monomial_gram(const WeylGroup& wg, const BszParams& params, std::vector<Weight> basis,
                           const TorusGrid& grid, Execution exec = Execution::parallel);

/// <f, g>_Delta from a precomputed Gram matrix. Throws InputError on a key
/// outside the Gram basis.
double inner_product(const MonomialGram& gram, const SymmetricPolynomial& f, const SymmetricPolynomial& g);
double inner_product(const MonomialGram& gram, const std::map<Weight, double>& f, const std::map<Weight, double>& g);

/// <f, g>_Delta by quadrature on the given grid.
double inner_product_num(const WeylGroup& wg, const SymmetricPolynomial& f, const SymmetricPolynomial& g,
                         const BszParams& params, const TorusGrid& grid, Execution exec = Execution::parallel);

}  // namespace bsz

#endif  // BSZ_QUADRATURE_HPP
