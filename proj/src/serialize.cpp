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

#include "bsz/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "bsz/error.hpp"

namespace bsz {

Json weight_to_json(const Weight& w) {
  Json j = Json::array();
  for (std::int64_t c : w.coords()) j.push_back(c);
  return j;
}

Json rational_list_to_json(const std::vector<Rational>& list) {
  Json j = Json::array();
  for (const Rational& q : list) j.push_back(to_string(q));
  return j;
}

std::vector<Rational> rational_list_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

template <class Basis>
Json combination_to_json(const RootSystem& rs, const Weight& top, const WeightCombination<Basis>& f) {
  std::vector<std::tuple<std::int64_t, Weight, Rational>> rows;
  for (const auto& [mu, c] : f) rows.emplace_back(rs.scaled_simple_root_coordinates(top - mu).sum(), mu, c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  Json j = Json::object();
  for (const auto& [h, mu, c] : rows) j[to_string(mu)] = to_string(c);
  return j;
}

template <class Basis>
WeightCombination<Basis> combination_from_json(const Json& j) {
  WeightCombination<Basis> f;
  for (const auto& [key, value] : j.items()) f.add(parse_weight(key), parse_rational(value.template get<std::string>()));
  return f;
}

template Json combination_to_json(const RootSystem&, const Weight&, const ExponentialSum&);
template Json combination_to_json(const RootSystem&, const Weight&, const SymmetricPolynomial&);
template Json combination_to_json(const RootSystem&, const Weight&, const CharacterExpansion&);
template ExponentialSum combination_from_json(const Json&);
template SymmetricPolynomial combination_from_json(const Json&);
template CharacterExpansion combination_from_json(const Json&);

Json root_system_to_json(const RootSystem& rs) {
  Json j;
  j["system"] = rs.name();
  j["rank"] = rs.rank();
  Json cartan = Json::array();
  for (int r = 0; r < rs.rank(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < rs.rank(); ++c) row.push_back(rs.cartan()(r, c));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  j["simply_laced"] = rs.simply_laced();
  j["positive_root_count"] = rs.positive_roots().size();
  j["weyl_order"] = rs.weyl_order();
  j["rho"] = weight_to_json(rs.rho());
  j["rho_short"] = weight_to_json(rs.rho_short());
  j["rho_long"] = weight_to_json(rs.rho_long());
  Json roots = Json::array();
  for (const Root& alpha : rs.positive_roots()) {
    const HeightStats h = height_stats(rs, alpha);
    Json r;
    r["fw"] = weight_to_json(alpha.fw_coords);
    r["sr"] = weight_to_json(alpha.sr_coords);
    r["coroot"] = weight_to_json(alpha.coroot_coords);
    r["long"] = alpha.is_long;
    r["height"] = alpha.height();
    r["ht_s"] = h.short_height;
    r["ht_l"] = h.long_height;
    roots.push_back(r);
  }
  j["positive_roots"] = roots;
  return j;
}

Json weyl_group_to_json(const WeylGroup& wg) {
  Json j;
  j["system"] = wg.roots().name();
  j["order"] = wg.order();
  Json elements = Json::array();
  for (const WeylElement& w : wg.elements()) {
    Json m = Json::array();
    for (int r = 0; r < wg.rank(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < wg.rank(); ++c) row.push_back(w.matrix(r, c));
      m.push_back(row);
    }
    Json e;
    e["matrix"] = m;
    e["sign"] = w.sign;
    e["len_s"] = w.len_s;
    e["len_l"] = w.len_l;
    elements.push_back(e);
  }
  j["elements"] = elements;
  return j;
}

Json polynomial_to_json(const RootSystem& rs, const BszPolynomial& p) {
  Json j;
  j["system"] = rs.name();
  j["weight"] = to_string(p.lam);
  j["ts"] = rational_list_to_json(p.params.ts());
  j["tl"] = rational_list_to_json(p.params.tl());
  j["deep"] = p.deep;
  j["characters"] = combination_to_json(rs, p.lam, p.char_exp);
  j["monomials"] = combination_to_json(rs, p.lam, p.mono_exp);
  if (p.norm_const) {
    j["norm"] = to_string(*p.norm_const);
    SymmetricPolynomial monic = p.mono_exp;
    monic *= 1 / *p.norm_const;
    j["monic"] = combination_to_json(rs, p.lam, monic);
  }
  return j;
}

BszPolynomial polynomial_from_json(const Json& j) {
  try {
    BszPolynomial p;
    p.lam = parse_weight(j.at("weight").get<std::string>());
    p.params = BszParams(rational_list_from_json(j.at("ts")), rational_list_from_json(j.at("tl")));
    p.deep = j.at("deep").get<bool>();
    p.char_exp = combination_from_json<CharacterBasis>(j.at("characters"));
    p.mono_exp = combination_from_json<MonomialBasis>(j.at("monomials"));
    if (j.contains("norm")) p.norm_const = parse_rational(j.at("norm").get<std::string>());
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("polynomial_from_json: ") + e.what());
  }
}

Json proposition_report_to_json(const PropositionReport& r) {
  Json j;
  j["proposition"] = r.proposition;
  j["weight"] = to_string(r.weight);
  j["m_short"] = r.m_short;
  j["m_long"] = r.m_long ? Json(*r.m_long) : Json(nullptr);
  j["vectors_scanned"] = r.vectors_scanned;
  j["hits"] = r.hits;
  j["passed"] = r.passed;
  if (r.proposition == "vertex") j["coefficient_sets_equal"] = r.coefficient_sets_equal;
  j["counterexamples"] = r.counterexamples;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json numeric_polynomial_to_json(const NumericPolynomial& p) {
  Json coeffs = Json::object();
  for (const auto& [w, c] : p.coeffs) coeffs[to_string(w)] = c;
  Json j;
  j["weight"] = to_string(p.lam);
  j["coefficients"] = coeffs;
  j["rcond"] = p.rcond;
  return j;
}

Json shallow_scan_to_json(const ShallowScanReport& r) {
  Json j;
  j["system"] = r.system;
  j["ts"] = rational_list_to_json(r.params.ts());
  j["tl"] = rational_list_to_json(r.params.tl());
  j["bound"] = r.bound;
  j["vacuous"] = r.vacuous;
  Json shallow = Json::array();
  for (const Weight& w : r.shallow_weights) shallow.push_back(to_string(w));
  j["shallow_weights"] = shallow;
  Json numeric;
  numeric["grid"] = r.points;
  numeric["refined_grid"] = r.refined_points;
  numeric["threshold"] = r.threshold;
  Json pairs = Json::array();
  for (const ShallowPair& p : r.pairs) {
    Json e;
    e["lambda"] = to_string(p.lam);
    e["mu"] = to_string(p.mu);
    e["same_coset"] = p.same_coset;
    e["value"] = p.value;
    e["refined_value"] = p.refined_value;
    e["error_estimate"] = p.error_estimate;
    e["significant"] = p.significant;
    pairs.push_back(e);
  }
  numeric["pairs"] = pairs;
  j["numeric"] = numeric;
  return j;
}

}  // namespace bsz
