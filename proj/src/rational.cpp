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

#include "bsz/rational.hpp"

#include <cctype>

#include "bsz/error.hpp"

namespace bsz {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("malformed rational '" + std::string(text) + "', expected p/q");
  }
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) throw DomainError("negative exponent in power()");
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool in_parameter_domain(const Rational& q) { return q != 0 && q > -1 && q < 1; }

}  // namespace bsz
