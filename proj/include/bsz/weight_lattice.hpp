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

#ifndef BSZ_WEIGHT_LATTICE_HPP
#define BSZ_WEIGHT_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bsz/lattice_scan.hpp"
#include "bsz/root_system.hpp"
#include "bsz/weight.hpp"
#include "bsz/weyl_group.hpp"

namespace bsz {

/// mu <= lam in the dominance order: lam - mu is a nonnegative integer
/// combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam);

/// Minimum of <lam, alpha^vee> over positive short roots. Throws DomainError
/// for non-dominant lam.
std::int64_t min_pairing_short(const RootSystem& rs, const Weight& lam);
/// Same over positive long roots; nullopt for simply-laced systems.
std::optional<std::int64_t> min_pairing_long(const RootSystem& rs, const Weight& lam);

/// m_s(lam) >= Ms - 1 and m_l(lam) >= Ml - 1 (long condition vacuous when simply-laced).
bool is_sufficiently_deep(const RootSystem& rs, const Weight& lam, int Ms, int Ml);

/// Over all dominant lam with coordinates <= bound: deep iff
/// lam - (Ms-1) rho_s - (Ml-1) rho_l is dominant.
bool deep_parametrization_check(const RootSystem& rs, int Ms, int Ml, int bound);

/// lam + rho - Ms rho_s - Ml rho_l.
Weight lambda_tilde(const RootSystem& rs, const Weight& lam, int Ms, int Ml);

/// All dominant weights with every coordinate in [0, bound], lexicographic.
std::vector<Weight> dominant_weights_in_box(int rank, int bound);

struct SaturatedSet {
  Weight top;
  std::set<Weight> dominant_members;
  std::set<Weight> full_members;

  bool contains(const Weight& mu) const { return full_members.count(mu) != 0; }
};

/// Dominant part by exhaustive scan of lam - sum k_i alpha_i over the box
/// 0 <= k_i <= (simple-root coordinates of lam), full set by orbit closure.
SaturatedSet saturated_set(const WeylGroup& wg, const Weight& lam);

/// Independent construction: closure of {lam} under alpha-strings.
std::set<Weight> saturated_set_by_strings(const WeylGroup& wg, const Weight& lam);

/// Every alpha-string through every member stays inside the set.
bool is_string_closed(const WeylGroup& wg, const std::set<Weight>& members);

/// mu lies in the convex hull of W(lam): lam - dominant(mu) is a nonnegative
/// rational combination of simple roots.
bool hull_membership(const WeylGroup& wg, const Weight& mu, const Weight& lam);

/// mu in P(lam): dominant(mu) <= lam (dominance includes the lattice condition).
bool in_saturated_set(const WeylGroup& wg, const Weight& mu, const Weight& lam);

/// Lattice points of lam + Q inside Conv(W(lam)), by scanning a bounding box.
std::set<Weight> hull_lattice_points(const WeylGroup& wg, const Weight& lam);

struct ScanLimits {
  std::uint64_t max_vectors = 10'000'000;
  std::size_t max_counterexamples = 16;
};

/// Outcome of one brute-force proposition check.
struct PropositionReport {
  std::string proposition;  // "saturated", "orbit", "vertex"
  Weight weight;
  std::int64_t m_short = 0;
  std::optional<std::int64_t> m_long;
  std::uint64_t vectors_scanned = 0;
  bool passed = true;
  std::vector<std::vector<int>> counterexamples;  // offending n-vectors (positive-root order)
  std::uint64_t hits = 0;                         // n-vectors landing on W(lam) (orbit/vertex)
  bool coefficient_sets_equal = true;             // vertex: n-vectors, not just weights, agree
};

/// For 0 <= n_alpha <= m_s(lam) (short), m_l(lam) (long): lam - sum n_alpha alpha is in P(lam).
/// Throws CapExceeded when the grid exceeds limits.max_vectors.
PropositionReport verify_saturated_prop(const WeylGroup& wg, const Weight& lam, const ScanLimits& limits = {},
                                        Execution exec = Execution::parallel);

/// Same grid: landing on W(lam) forces n_alpha in {0, m}.
PropositionReport verify_orbit_prop(const WeylGroup& wg, const Weight& lam, const ScanLimits& limits = {},
                                    Execution exec = Execution::parallel);

/// lam strongly dominant, 0 < ms <= m_s(lam), 0 < ml <= m_l(lam) (ml ignored when
/// simply-laced): the weights of the grid on W(lam) are exactly
/// lam - ms sum_{S_w short} alpha - ml sum_{S_w long} alpha, w in W_{lam~},
/// lam~ = lam - ms rho_s - ml rho_l.
PropositionReport verify_vertex_prop(const WeylGroup& wg, const Weight& lam, int ms, int ml,
                                     const ScanLimits& limits = {}, Execution exec = Execution::parallel);

}  // namespace bsz

#endif  // BSZ_WEIGHT_LATTICE_HPP
