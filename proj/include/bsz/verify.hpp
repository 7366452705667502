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

#ifndef BSZ_VERIFY_HPP
#define BSZ_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/lattice_scan.hpp"
#include "bsz/weight_lattice.hpp"

namespace bsz {

enum class CheckStatus { pass, fail, skip };
std::string_view status_name(CheckStatus s) noexcept;

/// One named exact check over a family of cases.
struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string detail;  // first failure, skip reason, or a summary
};

/// Counts cases and keeps the first failure message.
class Tally {
 public:
  template <class Msg>
  void expect(bool ok, Msg&& msg) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = msg();
  }
  void skip(std::string reason) {
    if (skip_reason_.empty()) skip_reason_ = std::move(reason);
  }
  /// Adds another tally's counts; its messages get the context prefix.
  void absorb(const Tally& other, const std::string& context);
  std::uint64_t cases() const noexcept { return cases_; }
  std::uint64_t failures() const noexcept { return failures_; }
  CheckResult result(std::string suite, std::string name, std::string summary = {}) const;

 private:
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
  std::string skip_reason_;
};

using MConfig = std::pair<int, int>;  // (M_s, M_l)

/// Grid and sampling settings. Unset fields take per-suite defaults.
struct SuiteOptions {
  std::vector<SystemType> systems;
  std::optional<int> bound;
  std::uint64_t seed = 20240607;
  int draws = 5;
  std::vector<MConfig> m_configs{{0, 0}, {1, 1}, {2, 1}, {2, 2}};
  ScanLimits limits;
  BuildOptions build;
  Execution exec = Execution::parallel;
};

/// Distinct (M_s, M_l) after dropping M_l on simply-laced systems.
std::vector<MConfig> effective_configs(const RootSystem& rs, const std::vector<MConfig>& configs);

// Per-system checks. Each returns a Tally the caller names.

/// <P_lam, m_mu> = 1 at mu = lam and 0 unless mu > lam.
Tally check_biorthogonality(PairingEngine& engine, const std::vector<Weight>& weights);
/// Deep lam: triangular, leading coefficient = N_lam = enumerated Poincare series of W_{lam~}.
Tally check_explicit_formula(PairingEngine& engine, const std::vector<Weight>& weights);
/// Deep lam: <P_lam, P_lam> = N_lam. Both deep: <P_lam, P_mu> = 0. Exactly one
/// deep: <p_lam, p_mu> = 0 for the orthogonal polynomials (see pair_p_p).
/// All pairs: <P_lam, P_mu> symmetric.
/// incomparable_pairs receives the unordered incomparable pairs with one deep member;
/// formula_mixed_nonzero counts mixed pairs whose formula polynomials are not orthogonal.
Tally check_norm_orthogonality(PairingEngine& engine, const std::vector<Weight>& weights,
                               std::uint64_t* incomparable_pairs = nullptr,
                               std::uint64_t* formula_mixed_nonzero = nullptr);
/// Product formula = enumeration over the stabilizer for each dominant lam~ in the box.
Tally check_poincare(const WeylGroup& wg, int bound, const std::vector<std::pair<Rational, Rational>>& params);
/// Closed-form A1 values against the general machinery, M <= max_m, M-1 <= ell <= max_ell.
Tally check_classic(std::uint64_t seed, int draws, int max_m, int max_ell);
/// Saturated and orbit propositions for every dominant lam with coordinates <= bound.
Tally check_saturated_orbit(const WeylGroup& wg, int bound, const ScanLimits& limits, Execution exec);
/// Vertex proposition for strongly dominant lam <= bound and every admissible (ms, ml).
Tally check_vertex(const WeylGroup& wg, int bound, const ScanLimits& limits, Execution exec);
/// Lattice points of the orbit hull = P(lam); P(lam) string-closed; equals the string closure.
Tally check_hull(const WeylGroup& wg, int bound);
/// Monic, triangular, Weyl dimension, and A_rho * chi_lam = A_{lam+rho}.
Tally check_characters(const WeylGroup& wg, int bound);

/// Suites: "lattice", "theorems", "poincare", "classic", "characters"; "all" runs each.
/// Throws InputError for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& options);
std::vector<std::string_view> suite_names() noexcept;

}  // namespace bsz

#endif  // BSZ_VERIFY_HPP
