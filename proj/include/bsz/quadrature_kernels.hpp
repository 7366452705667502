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

#ifndef BSZ_QUADRATURE_KERNELS_HPP
#define BSZ_QUADRATURE_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "bsz/lattice_scan.hpp"
#include "bsz/weight.hpp"

namespace bsz {

/// Accumulation and storage type of the Gram sums. Monomial Gram matrices
/// reach condition numbers near 1e9 at |t| = 1/2, where double rounding alone
/// moves Gram-Schmidt coefficients by about 1e-7.
using GramReal = long double;

/// A weighted Gram sum on the uniform grid theta_j = 2 pi k_j / N of the torus.
///
/// Basis function a is sum_{nu in support[a]} e^{i <nu, theta>} (integer
/// frequencies). The weight is prod over roots of
///   (2 - 2 cos phi) / prod_m (1 + 2 t_m cos phi + t_m^2),  phi = <alpha, theta>.
struct GramProblem {
  int rank = 0;
  int points = 0;
  std::vector<std::vector<Weight>> support;
  std::vector<Weight> root_frequencies;
  std::vector<std::vector<GramReal>> root_parameters;  // the t list of each root's family
};

/// Nodes per block in the parallel kernel. The block partition, and with it the
/// summation order, is independent of the thread count.
inline constexpr std::uint64_t kQuadratureBlock = 512;

/// Upper triangle, row-major, of S_ab = N^{-r} sum_nodes Re(v_a conj(v_b)) w.
/// Reference loop over all nodes in order.
std::vector<GramReal> gram_sum_serial(const GramProblem& problem);

/// Same sum: per-block partials, then a fixed pairwise reduction tree.
/// Bit-identical for every thread count.
std::vector<GramReal> gram_sum_parallel(const GramProblem& problem);

std::vector<GramReal> gram_sum(const GramProblem& problem, Execution exec);

/// Position of (a, b), a <= b, in the packed upper triangle of a k x k matrix.
inline std::size_t packed_index(std::size_t k, std::size_t a, std::size_t b) {
  return a * k - a * (a + 1) / 2 + b;
}

}  // namespace bsz

#endif  // BSZ_QUADRATURE_KERNELS_HPP
