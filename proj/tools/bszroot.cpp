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

// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 verification failure, 3 enumeration cap exceeded.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/error.hpp"
#include "bsz/gram_schmidt.hpp"
#include "bsz/quadrature.hpp"
#include "bsz/root_system.hpp"
#include "bsz/serialize.hpp"
#include "bsz/univariate.hpp"
#include "bsz/verify.hpp"
#include "bsz/weight_lattice.hpp"
#include "bsz/weyl_group.hpp"

namespace {

using bsz::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitCap = 3;

struct RunConfig {
  std::string system = "A1";
  std::string weight;
  std::string mu;
  std::string ts;
  std::string tl;
  std::string kind = "Pm";
  std::string mode = "dominance";
  std::string suite = "all";
  std::string format = "json";
  int grid = 0;  // 0: default for the rank
  std::optional<int> bound;
  std::uint64_t seed = 20240607;
  std::uint64_t cap = 10'000'000;
  double threshold = 1e-6;
  bool serial = false;
};

/// A command's result: JSON document plus a flat table for csv/plain.
struct Output {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int exit_code = kExitOk;
};

std::vector<bsz::Rational> parse_list(const std::string& text) {
  std::vector<bsz::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(bsz::parse_rational(item));
  }
  return out;
}

bsz::Execution exec_of(const RunConfig& c) { return c.serial ? bsz::Execution::serial : bsz::Execution::parallel; }

bsz::BuildOptions build_of(const RunConfig& c) { return bsz::BuildOptions{c.cap}; }

bsz::Weight require_weight(const RunConfig& c, const bsz::RootSystem& rs, const std::string& text, const char* flag) {
  if (text.empty()) throw bsz::InputError(std::string("missing ") + flag);
  const bsz::Weight w = bsz::parse_weight(text);
  if (w.rank() != rs.rank()) {
    throw bsz::InputError(std::string(flag) + " " + text + " has " + std::to_string(w.rank()) + " coordinates; " +
                          std::string(rs.name()) + " has rank " + std::to_string(rs.rank()));
  }
  (void)c;
  return w;
}

bsz::BszParams params_of(const RunConfig& c, const bsz::RootSystem& rs) {
  return bsz::BszParams::for_system(rs, parse_list(c.ts), parse_list(c.tl));
}

bsz::TorusGrid grid_of(const RunConfig& c, int rank) {
  return c.grid > 0 ? bsz::TorusGrid(rank, c.grid) : bsz::TorusGrid::standard(rank);
}

Output cmd_list_systems() {
  Output out;
  out.json = Json::array();
  out.header = {"system", "rank", "positive_roots", "weyl_order", "simply_laced"};
  for (bsz::SystemType t : bsz::supported_systems()) {
    const bsz::RootSystem rs = bsz::RootSystem::build(t);
    Json r;
    r["system"] = rs.name();
    r["rank"] = rs.rank();
    r["positive_roots"] = rs.positive_roots().size();
    r["weyl_order"] = rs.weyl_order();
    r["simply_laced"] = rs.simply_laced();
    out.json.push_back(r);
    out.rows.push_back({std::string(rs.name()), std::to_string(rs.rank()), std::to_string(rs.positive_roots().size()),
                        std::to_string(rs.weyl_order()), rs.simply_laced() ? "yes" : "no"});
  }
  return out;
}

Output cmd_roots(const RunConfig& c) {
  const bsz::RootSystem rs = bsz::RootSystem::build(bsz::parse_system(c.system));
  Output out;
  out.json = bsz::root_system_to_json(rs);
  out.header = {"index", "fw", "sr", "coroot", "long", "height", "ht_s", "ht_l"};
  std::size_t i = 0;
  for (const bsz::Root& a : rs.positive_roots()) {
    const bsz::HeightStats h = bsz::height_stats(rs, a);
    out.rows.push_back({std::to_string(i++), bsz::to_string(a.fw_coords), bsz::to_string(a.sr_coords),
                        bsz::to_string(a.coroot_coords), a.is_long ? "yes" : "no", std::to_string(a.height()),
                        std::to_string(h.short_height), std::to_string(h.long_height)});
  }
  return out;
}

Output cmd_weyl(const RunConfig& c) {
  const bsz::WeylGroup wg(bsz::parse_system(c.system));
  Output out;
  if (c.weight.empty()) {
    out.json = bsz::weyl_group_to_json(wg);
    out.header = {"index", "sign", "len_s", "len_l"};
    for (std::size_t i = 0; i < wg.order(); ++i) {
      const bsz::WeylElement& w = wg.element(i);
      out.rows.push_back({std::to_string(i), std::to_string(w.sign), std::to_string(w.len_s), std::to_string(w.len_l)});
    }
    return out;
  }
  const bsz::Weight lam = require_weight(c, wg.roots(), c.weight, "--weight");
  const bsz::DominantRepresentative rep = wg.dominant_representative(lam);
  const std::vector<bsz::ElementId> stab = wg.stabilizer(lam);
  Json j;
  j["system"] = wg.roots().name();
  j["weight"] = bsz::to_string(lam);
  j["dominant"] = bsz::to_string(rep.dominant);
  j["sign"] = rep.sign;
  j["orbit_size"] = wg.orbit(lam).size();
  j["stabilizer_order"] = stab.size();
  const std::vector<bsz::Rational> ts = parse_list(c.ts), tl = parse_list(c.tl);
  if (!ts.empty() || !tl.empty()) {
    const bsz::Rational s = ts.empty() ? bsz::Rational(0) : ts.front();
    const bsz::Rational l = tl.empty() ? bsz::Rational(0) : tl.front();
    j["poincare_ts"] = bsz::to_string(s);
    j["poincare_tl"] = bsz::to_string(l);
    j["poincare_enumerated"] = bsz::to_string(bsz::poincare_enumerated(wg, stab, s, l));
    if (lam.is_dominant()) j["poincare_product"] = bsz::to_string(bsz::poincare_product(wg.roots(), lam, s, l));
  }
  out.json = j;
  out.header = {"key", "value"};
  for (const auto& [k, v] : j.items()) out.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  return out;
}

void combination_rows(Output& out, const std::string& kind, const Json& j) {
  for (const auto& [k, v] : j.items()) out.rows.push_back({kind, k, v.get<std::string>()});
}

Output cmd_expand(const RunConfig& c) {
  const bsz::WeylGroup wg(bsz::parse_system(c.system));
  const bsz::Weight lam = require_weight(c, wg.roots(), c.weight, "--weight");
  const bsz::BszPolynomial p = bsz::build_P(wg, lam, params_of(c, wg.roots()), build_of(c));
  Output out;
  out.json = bsz::polynomial_to_json(wg.roots(), p);
  out.header = {"kind", "weight", "coefficient"};
  combination_rows(out, "character", out.json["characters"]);
  combination_rows(out, "monomial", out.json["monomials"]);
  if (p.norm_const) out.rows.push_back({"norm", bsz::to_string(lam), bsz::to_string(*p.norm_const)});
  return out;
}

Output cmd_norm(const RunConfig& c) {
  const bsz::WeylGroup wg(bsz::parse_system(c.system));
  const bsz::RootSystem& rs = wg.roots();
  const bsz::Weight lam = require_weight(c, rs, c.weight, "--weight");
  const bsz::BszParams params = params_of(c, rs);
  const bsz::Rational n = bsz::normalization_constant(rs, lam, params);
  const bsz::Weight tilde = bsz::lambda_tilde(rs, lam, params.m_short(), params.m_long());
  Json j;
  j["system"] = rs.name();
  j["weight"] = bsz::to_string(lam);
  j["ts"] = bsz::rational_list_to_json(params.ts());
  j["tl"] = bsz::rational_list_to_json(params.tl());
  j["lambda_tilde"] = bsz::to_string(tilde);
  j["bold_ts"] = bsz::to_string(params.bold_ts());
  j["bold_tl"] = bsz::to_string(params.bold_tl());
  j["norm"] = bsz::to_string(n);
  j["monic_norm"] = bsz::to_string(1 / n);
  j["stabilizer_series"] =
      bsz::to_string(bsz::poincare_enumerated(wg, wg.stabilizer(tilde), params.bold_ts(), params.bold_tl()));
  Output out;
  out.json = j;
  out.header = {"key", "value"};
  for (const auto& [k, v] : j.items()) out.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  return out;
}

Output cmd_pair(const RunConfig& c) {
  const bsz::WeylGroup wg(bsz::parse_system(c.system));
  const bsz::RootSystem& rs = wg.roots();
  const bsz::Weight lam = require_weight(c, rs, c.weight, "--weight");
  const bsz::Weight mu = require_weight(c, rs, c.mu, "--mu");
  const bsz::BszParams params = params_of(c, rs);
  if (c.kind != "Pm" && c.kind != "PP" && c.kind != "pp") throw bsz::InputError("--kind must be Pm, PP or pp");
  bsz::PairingEngine engine(wg, params, build_of(c));
  const bsz::Rational value = c.kind == "Pm"   ? engine.pair_P_m(lam, mu)
                              : c.kind == "PP" ? engine.pair_P_P(lam, mu)
                                               : engine.pair_p_p(lam, mu);
  Json j;
  j["system"] = rs.name();
  j["kind"] = c.kind;
  j["lambda"] = bsz::to_string(lam);
  j["mu"] = bsz::to_string(mu);
  j["ts"] = bsz::rational_list_to_json(params.ts());
  j["tl"] = bsz::rational_list_to_json(params.tl());
  j["value"] = bsz::to_string(value);
  Output out;
  out.header = {"kind", "lambda", "mu", "value", "numeric", "grid"};
  std::vector<std::string> row{c.kind, bsz::to_string(lam), bsz::to_string(mu), bsz::to_string(value), "", ""};
  if (c.grid > 0) {
    const bsz::TorusGrid grid(rs.rank(), c.grid);
    double num = 0.0;
    if (c.kind == "pp") {
      // Both sides by numeric Gram-Schmidt on the same grid.
      std::vector<bsz::Weight> basis = bsz::gram_schmidt_support(wg, lam, bsz::OrderMode::dominance);
      for (const bsz::Weight& nu : bsz::gram_schmidt_support(wg, mu, bsz::OrderMode::dominance)) basis.push_back(nu);
      const bsz::MonomialGram gram = bsz::monomial_gram(wg, params, basis, grid, exec_of(c));
      num = bsz::inner_product(gram, bsz::gram_schmidt_p(wg, gram, lam).coeffs, bsz::gram_schmidt_p(wg, gram, mu).coeffs);
    } else {
      bsz::SymmetricPolynomial g;
      if (c.kind == "Pm") {
        g.add(mu, bsz::Rational(1));
      } else {
        g = engine.polynomial(mu).mono_exp;
      }
      num = bsz::inner_product_num(wg, engine.polynomial(lam).mono_exp, g, params, grid, exec_of(c));
    }
    Json n;
    n["grid"] = c.grid;
    n["value"] = num;
    n["abs_error"] = std::abs(num - value.get_d());
    j["numeric"] = n;
    row[4] = bsz::format_double(num);
    row[5] = std::to_string(c.grid);
  }
  out.json = j;
  out.rows.push_back(row);
  return out;
}

Output cmd_classic(const RunConfig& c) {
  const bsz::ClassicParams cp(parse_list(c.ts));
  if (c.weight.empty()) throw bsz::InputError("missing --weight (the degree ell)");
  const bsz::Weight w = bsz::parse_weight(c.weight);
  if (w.rank() != 1) throw bsz::InputError("classic takes a single degree, e.g. --weight 3");
  const int ell = static_cast<int>(w[0]);
  const std::vector<bsz::Rational> coeff = bsz::classic_p(ell, cp);
  Json mono = Json::object();
  Output out;
  out.header = {"k", "coefficient"};
  for (int k = ell; k >= 0; --k) {
    const bsz::Rational& q = coeff[static_cast<std::size_t>(k)];
    if (q == 0) continue;
    mono["[" + std::to_string(k) + "]"] = bsz::to_string(q);
    out.rows.push_back({std::to_string(k), bsz::to_string(q)});
  }
  Json j;
  j["ell"] = ell;
  j["ts"] = bsz::rational_list_to_json(cp.ts);
  j["monomials"] = mono;
  j["normalization"] = bsz::to_string(bsz::classic_normalization(ell, cp));
  j["norm"] = bsz::to_string(bsz::classic_norm(ell, cp));
  out.json = j;
  return out;
}

Output cmd_gram(const RunConfig& c) {
  const bsz::WeylGroup wg(bsz::parse_system(c.system));
  const bsz::RootSystem& rs = wg.roots();
  const bsz::Weight lam = require_weight(c, rs, c.weight, "--weight");
  const bsz::BszParams params = params_of(c, rs);
  bsz::OrderMode mode;
  if (c.mode == "dominance") {
    mode = bsz::OrderMode::dominance;
  } else if (c.mode == "linear") {
    mode = bsz::OrderMode::linear_extension;
  } else {
    throw bsz::InputError("--mode must be dominance or linear");
  }
  const bsz::TorusGrid grid = grid_of(c, rs.rank());
  const bsz::NumericPolynomial p = bsz::gram_schmidt_p(wg, lam, params, grid, mode, exec_of(c));
  Json j;
  j["system"] = rs.name();
  j["weight"] = bsz::to_string(lam);
  j["ts"] = bsz::rational_list_to_json(params.ts());
  j["tl"] = bsz::rational_list_to_json(params.tl());
  j["mode"] = c.mode;
  j["deep"] = bsz::is_sufficiently_deep(rs, lam, params.m_short(), params.m_long());
  Json numeric = bsz::numeric_polynomial_to_json(p);
  numeric["grid"] = grid.points();
  Output out;
  out.header = {"weight", "numeric", "exact", "abs_error"};
  std::optional<bsz::BszPolynomial> exact;
  if (j["deep"].get<bool>()) exact = bsz::monic_p(wg, lam, params, build_of(c));
  double max_dev = 0.0;
  for (const auto& [mu, v] : p.coeffs) {
    std::vector<std::string> row{bsz::to_string(mu), bsz::format_double(v), "", ""};
    if (exact) {
      const bsz::Rational e = exact->mono_exp.coefficient(mu);
      row[2] = bsz::to_string(e);
      const double dev = std::abs(v - e.get_d());
      row[3] = bsz::format_double(dev);
      max_dev = std::max(max_dev, dev);
    }
    out.rows.push_back(row);
  }
  if (exact) {
    for (const auto& [mu, e] : exact->mono_exp) {
      if (!p.coeffs.count(mu)) max_dev = std::max(max_dev, std::abs(e.get_d()));
    }
    j["monic"] = bsz::combination_to_json(rs, lam, exact->mono_exp);
    numeric["max_abs_deviation"] = max_dev;
  }
  j["numeric"] = numeric;
  out.json = j;
  return out;
}

Output cmd_scan_shallow(const RunConfig& c) {
  const bsz::WeylGroup wg(bsz::parse_system(c.system));
  const bsz::RootSystem& rs = wg.roots();
  const bsz::BszParams params = params_of(c, rs);
  const bsz::ShallowScanReport r = bsz::shallow_orthogonality_scan(wg, params, c.bound.value_or(2), grid_of(c, rs.rank()),
                                                                   c.threshold, exec_of(c));
  Output out;
  out.json = bsz::shallow_scan_to_json(r);
  if (r.pairs.empty()) out.json["note"] = r.vacuous ? "every weight is sufficiently deep" : "no incomparable shallow pairs";
  out.header = {"lambda", "mu", "same_coset", "value", "refined_value", "error_estimate", "significant"};
  for (const bsz::ShallowPair& p : r.pairs) {
    out.rows.push_back({bsz::to_string(p.lam), bsz::to_string(p.mu), p.same_coset ? "yes" : "no", bsz::format_double(p.value),
                        bsz::format_double(p.refined_value), bsz::format_double(p.error_estimate),
                        p.significant ? "yes" : "no"});
  }
  return out;
}

Output cmd_verify(const RunConfig& c, bool system_given) {
  bsz::SuiteOptions o;
  if (system_given) o.systems = {bsz::parse_system(c.system)};
  o.bound = c.bound;
  o.seed = c.seed;
  o.limits.max_vectors = c.cap;
  o.build.max_assignments = c.cap;
  o.exec = exec_of(c);
  const std::vector<bsz::CheckResult> results = bsz::run_suite(c.suite, o);

  Output out;
  out.header = {"suite", "check", "status", "cases", "failures", "detail"};
  Json checks = Json::array();
  bool failed = false, skipped = false;
  for (const bsz::CheckResult& r : results) {
    Json e;
    e["suite"] = r.suite;
    e["check"] = r.name;
    e["status"] = bsz::status_name(r.status);
    e["cases"] = r.cases;
    e["failures"] = r.failures;
    e["detail"] = r.detail;
    if (r.status == bsz::CheckStatus::skip) e["cap_exceeded"] = true;
    checks.push_back(e);
    failed = failed || r.status == bsz::CheckStatus::fail;
    skipped = skipped || r.status == bsz::CheckStatus::skip;
    out.rows.push_back({r.suite, r.name, std::string(bsz::status_name(r.status)), std::to_string(r.cases),
                        std::to_string(r.failures), r.detail});
  }
  out.json["suite"] = c.suite;
  out.json["seed"] = c.seed;
  out.json["checks"] = checks;
  out.json["passed"] = !failed && !skipped;
  out.exit_code = failed ? kExitVerifyFail : skipped ? kExitCap : kExitOk;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.json.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t i = 0; i < out.header.size(); ++i) std::cout << (i ? "," : "") << csv_field(out.header[i]);
    std::cout << '\n';
    for (const auto& row : out.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
      std::cout << '\n';
    }
  } else {
    std::vector<std::size_t> width(out.header.size());
    for (std::size_t i = 0; i < out.header.size(); ++i) width[i] = out.header[i].size();
    for (const auto& row : out.rows) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::cout << (i ? "  " : "");
        if (i + 1 < cells.size()) std::cout << std::left << std::setw(static_cast<int>(width[i]));
        std::cout << cells[i];
      }
      std::cout << '\n';
    };
    line(out.header);
    for (const auto& row : out.rows) line(row);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bszroot: exact orthogonal polynomials with factorized weights on root systems"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  // Values like "2,1" or "1/2,1/3" stay whole; the CLI parses the lists itself.
  auto config = std::make_shared<CLI::ConfigTOML>();
  config->arrayDelimiter(';');
  app.config_formatter(config);

  RunConfig c;
  auto* system_opt = app.add_option("--system", c.system, "root system label, e.g. B2");
  app.add_option("--weight", c.weight, "weight in fundamental-weight coordinates, e.g. 2,1");
  app.add_option("--mu", c.mu, "second weight for pair");
  app.add_option("--ts", c.ts, "short-root parameters, e.g. 1/2,-1/3");
  app.add_option("--tl", c.tl, "long-root parameters");
  app.add_option("--grid", c.grid, "quadrature points per torus dimension")->check(CLI::PositiveNumber);
  app.add_option("--bound", c.bound, "coordinate bound for weight grids")->check(CLI::NonNegativeNumber);
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--seed", c.seed, "seed for random parameter draws");
  app.add_option("--cap", c.cap, "enumeration cap (n-vectors, C-expansion assignments)");
  app.add_option("--suite", c.suite, "verify suite")
      ->check(CLI::IsMember({"lattice", "theorems", "poincare", "classic", "characters", "all"}));
  app.add_option("--threshold", c.threshold, "significance threshold for scan-shallow");
  app.add_option("--kind", c.kind, "pair: Pm for <P_lam, m_mu>, PP for <P_lam, P_mu> (formula polynomials), "
                 "pp for <p_lam, p_mu> (monic orthogonal polynomials, one weight deep)");
  app.add_option("--mode", c.mode, "gram: dominance or linear");
  app.add_flag("--serial", c.serial, "use the serial reference kernels");

  app.add_subcommand("list-systems", "supported root systems");
  app.add_subcommand("roots", "positive roots and Cartan data");
  app.add_subcommand("weyl", "Weyl group table, or orbit data for --weight");
  app.add_subcommand("expand", "P_lam in characters and monomials");
  app.add_subcommand("norm", "normalization constant N_lam");
  app.add_subcommand("pair", "exact pairing <P_lam, m_mu>, <P_lam, P_mu> or <p_lam, p_mu>");
  app.add_subcommand("classic", "one-variable closed form");
  app.add_subcommand("gram", "numeric Gram-Schmidt polynomial");
  app.add_subcommand("scan-shallow", "orthogonality scan over shallow weights");
  app.add_subcommand("verify", "run a verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    Output out;
    if (cmd == "list-systems") out = cmd_list_systems();
    else if (cmd == "roots") out = cmd_roots(c);
    else if (cmd == "weyl") out = cmd_weyl(c);
    else if (cmd == "expand") out = cmd_expand(c);
    else if (cmd == "norm") out = cmd_norm(c);
    else if (cmd == "pair") out = cmd_pair(c);
    else if (cmd == "classic") out = cmd_classic(c);
    else if (cmd == "gram") out = cmd_gram(c);
    else if (cmd == "scan-shallow") out = cmd_scan_shallow(c);
    else out = cmd_verify(c, system_opt->count() > 0);
    emit(out, c.format);
    return out.exit_code;
  } catch (const bsz::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bsz::NumericalError& e) {
    std::cerr << "error: " << e.what() << " (condition estimate " << e.condition_estimate() << ")\n";
    return kExitUsage;
  }
}
