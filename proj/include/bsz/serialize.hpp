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

#ifndef BSZ_SERIALIZE_HPP
#define BSZ_SERIALIZE_HPP

#include <nlohmann/json.hpp>
#include <vector>

#include "bsz/bsz_polynomial.hpp"
#include "bsz/gram_schmidt.hpp"
#include "bsz/root_system.hpp"
#include "bsz/symmetric.hpp"
#include "bsz/weight_lattice.hpp"
#include "bsz/weyl_group.hpp"

namespace bsz {

/// Key order is insertion order, so equal values serialize to equal bytes.
using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);  // [a, b, ...]
Json rational_list_to_json(const std::vector<Rational>& list);  // ["p/q", ...]
std::vector<Rational> rational_list_from_json(const Json& j);

/// Keys ordered by the height of top - mu, then lexicographically; values "p/q".
template <class Basis>
Json combination_to_json(const RootSystem& rs, const Weight& top, const WeightCombination<Basis>& f);
/// Parses {"[a,b]": "p/q", ...}.
template <class Basis>
WeightCombination<Basis> combination_from_json(const Json& j);

Json root_system_to_json(const RootSystem& rs);
Json weyl_group_to_json(const WeylGroup& wg);

/// {"system", "weight", "ts", "tl", "deep", "characters", "monomials", "norm"?, "monic"?}.
Json polynomial_to_json(const RootSystem& rs, const BszPolynomial& p);
/// Inverse of polynomial_to_json (the "monic" field is derived and ignored).
BszPolynomial polynomial_from_json(const Json& j);

Json proposition_report_to_json(const PropositionReport& r);
Json numeric_polynomial_to_json(const NumericPolynomial& p);
Json shallow_scan_to_json(const ShallowScanReport& r);

/// Shortest decimal that round-trips the double.
std::string format_double(double x);

}  // namespace bsz

#endif  // BSZ_SERIALIZE_HPP
