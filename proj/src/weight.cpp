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

#include "bsz/weight.hpp"

#include <charconv>
#include <cctype>
#include <vector>

#include "bsz/error.hpp"

namespace bsz {

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw InputError("weight rank out of range: " + std::to_string(rank));
}

Weight::Weight(std::initializer_list<std::int64_t> coords)
    : Weight(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Weight::Weight(std::span<const std::int64_t> coords) : Weight(static_cast<int>(coords.size())) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

bool Weight::is_zero() const noexcept {
  for (int i = 0; i < rank_; ++i)
    if ((*this)[i] != 0) return false;
  return true;
}

bool Weight::is_dominant() const noexcept {
  for (int i = 0; i < rank_; ++i)
    if ((*this)[i] < 0) return false;
  return true;
}

bool Weight::is_strongly_dominant() const noexcept {
  for (int i = 0; i < rank_; ++i)
    if ((*this)[i] < 1) return false;
  return true;
}

std::int64_t Weight::sum() const noexcept {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += (*this)[i];
  return s;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank_ != rank_) throw InputError("weight dimension mismatch");
  for (int i = 0; i < rank_; ++i) (*this)[i] += other[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank_ != rank_) throw InputError("weight dimension mismatch");
  for (int i = 0; i < rank_; ++i) (*this)[i] -= other[i];
  return *this;
}

Weight& Weight::operator*=(std::int64_t factor) noexcept {
  for (int i = 0; i < rank_; ++i) (*this)[i] *= factor;
  return *this;
}

std::string to_string(const Weight& w) {
  std::string out = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  out += ']';
  return out;
}

Weight parse_weight(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                               text[i] == '[' || text[i] == ']'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    std::int64_t v = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) {
      throw InputError("malformed weight '" + std::string(text) + "', expected comma-separated integers");
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !(std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                             text[i] == ']')) {
      throw InputError("malformed weight '" + std::string(text) + "'");
    }
    skip();
  }
  if (values.empty() || values.size() > static_cast<std::size_t>(kMaxRank)) {
    throw InputError("weight '" + std::string(text) + "' must have 1.." + std::to_string(kMaxRank) +
                     " coordinates");
  }
  return Weight(std::span<const std::int64_t>(values));
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9E3779B97F4A7C15ULL;
  for (std::int64_t c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 0 || n > kMaxRank) throw InputError("matrix size out of range");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Weight IntMatrix::apply(const Weight& v) const {
  if (v.rank() != n_) throw InputError("matrix/weight dimension mismatch");
  Weight out(n_);
  for (int r = 0; r < n_; ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < n_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Weight IntMatrix::column(int c) const {
  Weight out(n_);
  for (int r = 0; r < n_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::int64_t IntMatrix::determinant() const {
  // Bareiss fraction-free elimination; exact for integer input.
  IntMatrix m = *this;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n_; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n_; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n_; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n_; ++r) {
      for (int c = k + 1; c < n_; ++c) {
        m(r, c) = (m(r, c) * m(k, k) - m(r, k) * m(k, c)) / prev;
      }
    }
    prev = m(k, k);
  }
  return n_ == 0 ? 1 : sign * m(n_ - 1, n_ - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix dimension mismatch");
  IntMatrix out(a.n_);
  for (int r = 0; r < a.n_; ++r)
    for (int c = 0; c < a.n_; ++c) {
      std::int64_t s = 0;
      for (int k = 0; k < a.n_; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

}  // namespace bsz
