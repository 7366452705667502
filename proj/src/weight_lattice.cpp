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

#include "bsz/weight_lattice.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "bsz/error.hpp"

namespace bsz {

namespace {

void require_dominant(const Weight& lam, const char* op) {
  if (!lam.is_dominant()) throw DomainError(std::string(op) + ": weight " + to_string(lam) + " is not dominant");
}

// Visits every integer vector k with 0 <= k[i] <= upper[i].
template <class F>
void for_each_in_box(const Weight& upper, F&& f) {
  for (int i = 0; i < upper.rank(); ++i)
    if (upper[i] < 0) return;
  Weight k(upper.rank());
  while (true) {
    f(k);
    int i = 0;
    for (; i < upper.rank(); ++i) {
      if (k[i] < upper[i]) {
        ++k[i];
        break;
      }
      k[i] = 0;
    }
    if (i == upper.rank()) return;
  }
}

std::vector<Weight> root_weights(const RootSystem& rs) {
  std::vector<Weight> out;
  for (const Root& r : rs.positive_roots()) out.push_back(r.fw_coords);
  return out;
}

std::vector<int> coefficient_bounds(const RootSystem& rs, std::int64_t short_bound, std::int64_t long_bound) {
  std::vector<int> bounds;
  for (const Root& r : rs.positive_roots()) bounds.push_back(static_cast<int>(r.is_long ? long_bound : short_bound));
  return bounds;
}

void check_cap(const CoefficientGrid& grid, const ScanLimits& limits, const std::string& what) {
  if (grid.size() > limits.max_vectors) throw CapExceeded(what, grid.size(), limits.max_vectors);
}

}  // namespace

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam) {
  const auto k = rs.root_lattice_coordinates(lam - mu);
  if (!k) return false;
  return k->is_dominant();  // all simple-root coordinates >= 0
}

std::int64_t min_pairing_short(const RootSystem& rs, const Weight& lam) {
  require_dominant(lam, "min_pairing_short");
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k : rs.short_positive()) m = std::min(m, coroot_pairing(lam, rs.positive_roots()[k]));
  return m;
}

std::optional<std::int64_t> min_pairing_long(const RootSystem& rs, const Weight& lam) {
  require_dominant(lam, "min_pairing_long");
  if (rs.simply_laced()) return std::nullopt;
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k : rs.long_positive()) m = std::min(m, coroot_pairing(lam, rs.positive_roots()[k]));
  return m;
}

bool is_sufficiently_deep(const RootSystem& rs, const Weight& lam, int Ms, int Ml) {
  if (min_pairing_short(rs, lam) < Ms - 1) return false;
  const auto ml = min_pairing_long(rs, lam);
  return !ml || *ml >= Ml - 1;
}

bool deep_parametrization_check(const RootSystem& rs, int Ms, int Ml, int bound) {
  for (const Weight& lam : dominant_weights_in_box(rs.rank(), bound)) {
    const Weight shifted = lam - static_cast<std::int64_t>(Ms - 1) * rs.rho_short() -
                           static_cast<std::int64_t>(Ml - 1) * rs.rho_long();
    if (is_sufficiently_deep(rs, lam, Ms, Ml) != shifted.is_dominant()) return false;
  }
  return true;
}

Weight lambda_tilde(const RootSystem& rs, const Weight& lam, int Ms, int Ml) {
  return lam + rs.rho() - static_cast<std::int64_t>(Ms) * rs.rho_short() -
         static_cast<std::int64_t>(Ml) * rs.rho_long();
}

std::vector<Weight> dominant_weights_in_box(int rank, int bound) {
  std::vector<Weight> out;
  Weight upper(rank);
  for (int i = 0; i < rank; ++i) upper[i] = bound;
  for_each_in_box(upper, [&](const Weight& k) { out.push_back(k); });
  std::sort(out.begin(), out.end());
  return out;
}

SaturatedSet saturated_set(const WeylGroup& wg, const Weight& lam) {
  require_dominant(lam, "saturated_set");
  const RootSystem& rs = wg.roots();
  SaturatedSet s;
  s.top = lam;
  // Inverse Cartan entries are nonnegative, so k = C^{-1}(lam - mu) <= C^{-1} lam for dominant mu.
  const Weight scaled = rs.scaled_simple_root_coordinates(lam);
  Weight upper(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) upper[i] = scaled[i] / rs.cartan_determinant();
  for_each_in_box(upper, [&](const Weight& k) {
    const Weight mu = lam - rs.cartan().apply(k);
    if (mu.is_dominant()) s.dominant_members.insert(mu);
  });
  for (const Weight& mu : s.dominant_members) {
    for (const Weight& v : wg.orbit(mu)) s.full_members.insert(v);
  }
  return s;
}

std::set<Weight> saturated_set_by_strings(const WeylGroup& wg, const Weight& lam) {
  const RootSystem& rs = wg.roots();
  std::set<Weight> members{lam};
  std::deque<Weight> queue{lam};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (const Root& r : rs.positive_roots()) {
      for (int sgn : {1, -1}) {
        const std::int64_t p = sgn * coroot_pairing(mu, r);
        for (std::int64_t l = 1; l <= p; ++l) {
          const Weight next = mu - (sgn * l) * r.fw_coords;
          if (members.insert(next).second) queue.push_back(next);
        }
      }
    }
  }
  return members;
}

bool is_string_closed(const WeylGroup& wg, const std::set<Weight>& members) {
  for (const Weight& mu : members) {
    for (const Root& r : wg.roots().positive_roots()) {
      for (int sgn : {1, -1}) {
        const std::int64_t p = sgn * coroot_pairing(mu, r);
        for (std::int64_t l = 1; l <= p; ++l) {
          if (!members.count(mu - (sgn * l) * r.fw_coords)) return false;
        }
      }
    }
  }
  return true;
}

bool hull_membership(const WeylGroup& wg, const Weight& mu, const Weight& lam) {
  require_dominant(lam, "hull_membership");
  const Weight dom = wg.dominant_representative(mu).dominant;
  const Weight scaled = wg.roots().scaled_simple_root_coordinates(lam - dom);
  // det > 0 for every finite Cartan matrix, so signs carry over unscaled.
  return scaled.is_dominant();
}

bool in_saturated_set(const WeylGroup& wg, const Weight& mu, const Weight& lam) {
  return dominance_leq(wg.roots(), wg.dominant_representative(mu).dominant, lam);
}

std::set<Weight> hull_lattice_points(const WeylGroup& wg, const Weight& lam) {
  require_dominant(lam, "hull_lattice_points");
  const RootSystem& rs = wg.roots();
  // Every hull point mu satisfies w0(lam) <= mu <= lam over the rationals.
  const Weight lowest = wg.act(wg.longest(), lam);
  const auto span = rs.root_lattice_coordinates(lam - lowest);
  std::set<Weight> out;
  for_each_in_box(*span, [&](const Weight& k) {
    const Weight mu = lam - rs.cartan().apply(k);
    if (hull_membership(wg, mu, lam)) out.insert(mu);
  });
  return out;
}

PropositionReport verify_saturated_prop(const WeylGroup& wg, const Weight& lam, const ScanLimits& limits,
                                        Execution exec) {
  const RootSystem& rs = wg.roots();
  PropositionReport rep;
  rep.proposition = "saturated";
  rep.weight = lam;
  rep.m_short = min_pairing_short(rs, lam);
  rep.m_long = min_pairing_long(rs, lam);
  const CoefficientGrid grid(coefficient_bounds(rs, rep.m_short, rep.m_long.value_or(0)));
  check_cap(grid, limits, "saturated-set scan for " + to_string(lam));
  const auto roots = root_weights(rs);
  const auto bad = select_grid_points(
      grid, lam, roots, [&](const Weight& nu, std::span<const int>) { return !in_saturated_set(wg, nu, lam); },
      exec);
  rep.vectors_scanned = grid.size();
  rep.passed = bad.empty();
  for (std::size_t i = 0; i < bad.size() && i < limits.max_counterexamples; ++i)
    rep.counterexamples.push_back(grid.decode(bad[i]));
  return rep;
}

PropositionReport verify_orbit_prop(const WeylGroup& wg, const Weight& lam, const ScanLimits& limits,
                                    Execution exec) {
  const RootSystem& rs = wg.roots();
  PropositionReport rep;
  rep.proposition = "orbit";
  rep.weight = lam;
  rep.m_short = min_pairing_short(rs, lam);
  rep.m_long = min_pairing_long(rs, lam);
  const CoefficientGrid grid(coefficient_bounds(rs, rep.m_short, rep.m_long.value_or(0)));
  check_cap(grid, limits, "orbit scan for " + to_string(lam));
  const auto roots = root_weights(rs);
  const auto on_orbit = select_grid_points(
      grid, lam, roots,
      [&](const Weight& nu, std::span<const int>) { return wg.dominant_representative(nu).dominant == lam; }, exec);
  rep.vectors_scanned = grid.size();
  rep.hits = on_orbit.size();
  const auto bounds = grid.bounds();
  for (std::uint64_t idx : on_orbit) {
    const auto n = grid.decode(idx);
    bool ok = true;
    for (std::size_t k = 0; k < n.size(); ++k) ok = ok && (n[k] == 0 || n[k] == bounds[k]);
    if (!ok) {
      rep.passed = false;
      if (rep.counterexamples.size() < limits.max_counterexamples) rep.counterexamples.push_back(n);
    }
  }
  return rep;
}

PropositionReport verify_vertex_prop(const WeylGroup& wg, const Weight& lam, int ms, int ml,
                                     const ScanLimits& limits, Execution exec) {
  const RootSystem& rs = wg.roots();
  if (!lam.is_strongly_dominant()) {
    throw DomainError("verify_vertex_prop: weight " + to_string(lam) + " is not strongly dominant");
  }
  PropositionReport rep;
  rep.proposition = "vertex";
  rep.weight = lam;
  rep.m_short = ms;
  const std::int64_t msl = min_pairing_short(rs, lam);
  if (ms <= 0 || ms > msl) {
    throw DomainError("verify_vertex_prop: need 0 < ms <= " + std::to_string(msl) + ", got " + std::to_string(ms));
  }
  if (!rs.simply_laced()) {
    const std::int64_t mll = *min_pairing_long(rs, lam);
    if (ml <= 0 || ml > mll) {
      throw DomainError("verify_vertex_prop: need 0 < ml <= " + std::to_string(mll) + ", got " + std::to_string(ml));
    }
    rep.m_long = ml;
  } else {
    ml = 0;
  }

  const CoefficientGrid grid(coefficient_bounds(rs, ms, ml));
  check_cap(grid, limits, "vertex scan for " + to_string(lam));
  const auto roots = root_weights(rs);
  const auto on_orbit = select_grid_points(
      grid, lam, roots,
      [&](const Weight& nu, std::span<const int>) { return wg.dominant_representative(nu).dominant == lam; }, exec);
  rep.vectors_scanned = grid.size();
  rep.hits = on_orbit.size();

  std::set<Weight> scanned_weights;
  std::set<std::vector<int>> scanned_vectors;
  for (std::uint64_t idx : on_orbit) {
    const auto n = grid.decode(idx);
    Weight nu = lam;
    for (std::size_t k = 0; k < n.size(); ++k) nu -= static_cast<std::int64_t>(n[k]) * roots[k];
    scanned_weights.insert(nu);
    scanned_vectors.insert(n);
  }

  const Weight tilde = lam - static_cast<std::int64_t>(ms) * rs.rho_short() - static_cast<std::int64_t>(ml) * rs.rho_long();
  std::set<Weight> predicted_weights;
  std::set<std::vector<int>> predicted_vectors;
  for (ElementId w : wg.stabilizer(tilde)) {
    std::vector<int> n(roots.size(), 0);
    Weight nu = lam;
    for (std::size_t k : wg.inversion_set(w)) {
      n[k] = rs.positive_roots()[k].is_long ? ml : ms;
      nu -= static_cast<std::int64_t>(n[k]) * roots[k];
    }
    predicted_weights.insert(nu);
    predicted_vectors.insert(n);
  }

  rep.passed = scanned_weights == predicted_weights;
  rep.coefficient_sets_equal = scanned_vectors == predicted_vectors;
  if (!rep.passed) {
    std::vector<std::vector<int>> diff;
    std::set_symmetric_difference(scanned_vectors.begin(), scanned_vectors.end(), predicted_vectors.begin(),
                                  predicted_vectors.end(), std::back_inserter(diff));
    for (std::size_t i = 0; i < diff.size() && i < limits.max_counterexamples; ++i) rep.counterexamples.push_back(diff[i]);
  }
  return rep;
}

}  // namespace bsz
