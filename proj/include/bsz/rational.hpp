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

#ifndef BSZ_RATIONAL_HPP
#define BSZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bsz {

/// Exact rational number (GMP), always kept in canonical form.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws InputError on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" string, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// base^exponent for exponent >= 0, with 0^0 = 1.
Rational power(const Rational& base, long exponent);

bool is_integer(const Rational& q);

/// True iff q lies in (-1, 1) and is nonzero.
bool in_parameter_domain(const Rational& q);

}  // namespace bsz

#endif  // BSZ_RATIONAL_HPP
