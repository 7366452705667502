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

#ifndef BSZ_GRAM_SCHMIDT_HPP
#define BSZ_GRAM_SCHMIDT_HPP

#include <map>
#include <string>
#include <vector>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/quadrature.hpp"

namespace bsz {

enum class OrderMode {
  dominance,         // orthogonal to every m_mu with mu strictly below lam
  linear_extension,  // orthogonal to every m_mu earlier in (height, lex) order
};

/// Numeric monic orthogonal polynomial: m_lam + sum_mu a_mu m_mu.
struct NumericPolynomial {
  Weight lam;
  std::map<Weight, double> coeffs;
  double rcond = 1.0;  // reciprocal condition estimate of the solved system
};

/// Dominant weights mu in lam + Q with (height, lex)(mu) < (height, lex)(lam).
/// Height is the sum of simple-root coordinates.
std::vector<Weight> linear_extension_lower_set(const RootSystem& rs, const Weight& lam);

/// The weights p_lam is expanded over: P_+(lam) for dominance, the lower set
/// of the linear extension plus lam otherwise.
std::vector<Weight> gram_schmidt_support(const WeylGroup& wg, const Weight& lam, OrderMode mode);

/// Solves the monic orthogonality conditions against a precomputed Gram
/// matrix whose basis covers gram_schmidt_support. Throws NumericalError when
/// the system is numerically singular.
NumericPolynomial gram_schmidt_p(const WeylGroup& wg, const MonomialGram& gram, const Weight& lam,
                                 OrderMode mode = OrderMode::dominance);

NumericPolynomial gram_schmidt_p(const WeylGroup& wg, const Weight& lam, const BszParams& params,
                                 const TorusGrid& grid, OrderMode mode = OrderMode::dominance,
                                 Execution exec = Execution::parallel);

struct ShallowPair {
  Weight lam, mu;
  bool same_coset = false;    // lam - mu in Q; otherwise orthogonal for lattice reasons
  double value = 0.0;         // <p_lam, p_mu> on the base grid
  double refined_value = 0.0; // same on the doubled grid
  double error_estimate = 0.0;
  bool significant = false;   // |value| > threshold
};

struct ShallowScanReport {
  std::string system;
  BszParams params;
  int bound = 0;
  int points = 0;
  int refined_points = 0;
  double threshold = 1e-6;
  bool vacuous = false;  // every weight is deep
  std::vector<Weight> shallow_weights;
  std::vector<ShallowPair> pairs;
};

/// All pairs of non-deep dominant weights with coordinates <= bound that are
/// incomparable in the dominance order, with <p_lam, p_mu> on grid and on the
/// doubled grid. Exploratory; no verdict.
ShallowScanReport shallow_orthogonality_scan(const WeylGroup& wg, const BszParams& params, int bound,
                                             const TorusGrid& grid, double threshold = 1e-6,
                                             Execution exec = Execution::parallel);

}  // namespace bsz

#endif  // BSZ_GRAM_SCHMIDT_HPP
