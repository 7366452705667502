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

#ifndef BSZ_WEIGHT_HPP
#define BSZ_WEIGHT_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace bsz {

inline constexpr int kMaxRank = 4;

/// Integer vector of length rank <= kMaxRank.
///
/// Used for weights in the fundamental-weight basis (entry i is the pairing
/// with the i-th simple coroot) and, where noted, for simple-root coordinates.
/// Ordering is lexicographic on the coordinates (rank first).
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<std::int64_t> coords);
  explicit Weight(std::span<const std::int64_t> coords);

  int rank() const noexcept { return rank_; }
  std::int64_t operator[](int i) const noexcept { return coords_[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) noexcept { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> coords() const noexcept {
    return {coords_.data(), static_cast<std::size_t>(rank_)};
  }

  bool is_zero() const noexcept;
  /// All coordinates >= 0.
  bool is_dominant() const noexcept;
  /// All coordinates >= 1 (every positive coroot pairing is then >= 1).
  bool is_strongly_dominant() const noexcept;
  std::int64_t sum() const noexcept;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(std::int64_t factor) noexcept;

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) noexcept { return a *= k; }
  friend Weight operator-(Weight a) noexcept { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  int rank_ = 0;
  std::array<std::int64_t, kMaxRank> coords_{};
};

/// "[a,b,...]"
std::string to_string(const Weight& w);

/// Accepts "2,1", "[2,1]", "2 1". Throws InputError.
Weight parse_weight(std::string_view text);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Square integer matrix of size rank <= kMaxRank acting on Weight columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n);
  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }
  std::int64_t operator()(int r, int c) const noexcept { return a_[index(r, c)]; }
  std::int64_t& operator()(int r, int c) noexcept { return a_[index(r, c)]; }

  Weight apply(const Weight& v) const;
  Weight column(int c) const;
  std::int64_t determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  static constexpr std::size_t index(int r, int c) noexcept {
    return static_cast<std::size_t>(r * kMaxRank + c);
  }
  int n_ = 0;
  std::array<std::int64_t, kMaxRank * kMaxRank> a_{};
};

}  // namespace bsz

#endif  // BSZ_WEIGHT_HPP
