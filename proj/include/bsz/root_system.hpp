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

#ifndef BSZ_ROOT_SYSTEM_HPP
#define BSZ_ROOT_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsz/rational.hpp"
#include "bsz/weight.hpp"

namespace bsz {

enum class SystemType { A1, A2, A3, A4, B2, B3, B4, C3, C4, D4, G2, F4 };

/// All supported labels in catalogue order.
std::span<const SystemType> supported_systems() noexcept;
std::string_view system_name(SystemType type) noexcept;
/// Throws InputError naming the supported set.
SystemType parse_system(std::string_view name);

/// A root together with the coordinates every consumer needs.
///
/// fw_coords are pairings with the simple coroots, sr_coords the expansion in
/// simple roots, coroot_coords the expansion of the coroot in simple coroots.
/// The coroot pairing <lambda, alpha^vee> is then the dot product of
/// lambda's fundamental-weight coordinates with coroot_coords.
struct Root {
  Weight fw_coords;
  Weight sr_coords;
  Weight coroot_coords;
  bool is_long = false;

  std::int64_t height() const noexcept { return sr_coords.sum(); }
};

/// <lam, alpha^vee>. Throws InputError on a rank mismatch.
std::int64_t coroot_pairing(const Weight& lam, const Root& alpha);

/// Irreducible reduced crystallographic root system of rank <= 4, immutable.
///
/// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so column j is
/// alpha_j in fundamental-weight coordinates. Bourbaki numbering; in B_n the
/// last simple root is short, in C_n it is long, in G2 alpha_1 is short and in
/// F4 alpha_1, alpha_2 are long.
///
/// Positive roots are ordered by height, ties broken by descending
/// lexicographic order of sr_coords, so simple roots come first in index order.
class RootSystem {
 public:
  static RootSystem build(SystemType type);

  SystemType type() const noexcept { return type_; }
  std::string_view name() const noexcept { return system_name(type_); }
  int rank() const noexcept { return rank_; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  bool simply_laced() const noexcept { return long_positive_.empty(); }

  std::span<const Root> positive_roots() const noexcept { return positive_; }
  std::span<const Root> simple_roots() const noexcept { return {positive_.data(), static_cast<std::size_t>(rank_)}; }
  /// Indices into positive_roots().
  std::span<const std::size_t> short_positive() const noexcept { return short_positive_; }
  std::span<const std::size_t> long_positive() const noexcept { return long_positive_; }

  const Weight& rho() const noexcept { return rho_; }
  const Weight& rho_short() const noexcept { return rho_short_; }
  const Weight& rho_long() const noexcept { return rho_long_; }
  std::int64_t weyl_order() const noexcept { return weyl_order_; }

  /// Root-length symmetrizer: d_i = (alpha_i, alpha_i) / 2 with short roots at 1.
  std::span<const std::int64_t> symmetrizer() const noexcept { return {symmetrizer_.data(), static_cast<std::size_t>(rank_)}; }

  /// Expansion of a fundamental-weight vector in simple roots (exact).
  std::vector<Rational> simple_root_coordinates(const Weight& fw) const;
  /// Integer simple-root coordinates when fw lies in the root lattice Q.
  std::optional<Weight> root_lattice_coordinates(const Weight& fw) const;
  /// Numerators of the simple-root coordinates over cartan_determinant().
  Weight scaled_simple_root_coordinates(const Weight& fw) const;
  std::int64_t cartan_determinant() const noexcept { return cartan_det_; }

  /// W-invariant scalar product on weights (short roots have squared length 2).
  Rational scalar_product(const Weight& a, const Weight& b) const;

  /// Index of the root with the given fundamental-weight coordinates among the
  /// positive roots, with sign: +i+1 for positive root i, -(i+1) for its negative.
  std::optional<std::int64_t> find_root(const Weight& fw) const;

 private:
  RootSystem() = default;

  SystemType type_{};
  int rank_ = 0;
  IntMatrix cartan_;
  IntMatrix cartan_adjugate_;
  std::int64_t cartan_det_ = 1;
  std::array<std::int64_t, kMaxRank> symmetrizer_{};
  std::vector<Root> positive_;
  std::vector<std::size_t> short_positive_;
  std::vector<std::size_t> long_positive_;
  Weight rho_, rho_short_, rho_long_;
  std::int64_t weyl_order_ = 1;
  std::map<Weight, std::int64_t> root_lookup_;
};

/// Short and long height statistics of a root:
/// ht_s(alpha) = sum over positive short beta of <alpha, beta^vee>/2, ht_l likewise.
struct HeightStats {
  std::int64_t short_height = 0;
  std::int64_t long_height = 0;
};

/// Throws std::logic_error if a statistic is not integral.
HeightStats height_stats(const RootSystem& rs, const Root& alpha);

/// Classical table values, used to cross-check construction.
std::int64_t classical_positive_root_count(SystemType type) noexcept;
std::int64_t classical_weyl_order(SystemType type) noexcept;

}  // namespace bsz

#endif  // BSZ_ROOT_SYSTEM_HPP
