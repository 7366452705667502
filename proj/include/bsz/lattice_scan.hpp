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

#ifndef BSZ_LATTICE_SCAN_HPP
#define BSZ_LATTICE_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "bsz/weight.hpp"

namespace bsz {

enum class Execution { serial, parallel };

/// Mixed-radix grid of coefficient vectors n with 0 <= n[k] <= bounds[k].
/// Index 0 is n = 0; n[0] is the fastest digit.
class CoefficientGrid {
 public:
  explicit CoefficientGrid(std::vector<int> bounds);

  std::span<const int> bounds() const noexcept { return bounds_; }
  /// Number of grid points, saturated at UINT64_MAX.
  std::uint64_t size() const noexcept { return size_; }
  std::vector<int> decode(std::uint64_t index) const;

 private:
  std::vector<int> bounds_;
  std::uint64_t size_ = 1;
};

/// Points per work unit in the parallel scan. Fixed so the merge order does not
/// depend on the thread count.
inline constexpr std::uint64_t kScanChunk = 4096;

/// Serial reference: decodes every index independently and evaluates
/// pred(top - sum_k n[k] roots[k], n). Returns matching indices, ascending.
template <class Pred>
std::vector<std::uint64_t> select_grid_points_serial(const CoefficientGrid& grid, const Weight& top,
                                                     std::span<const Weight> roots, Pred&& pred) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t idx = 0; idx < grid.size(); ++idx) {
    const std::vector<int> n = grid.decode(idx);
    Weight nu = top;
    for (std::size_t k = 0; k < n.size(); ++k) nu -= static_cast<std::int64_t>(n[k]) * roots[k];
    if (pred(nu, std::span<const int>(n))) out.push_back(idx);
  }
  return out;
}

/// Chunked scan with incremental counter updates; OpenMP over chunks.
/// Same result as the serial reference for any thread count.
template <class Pred>
std::vector<std::uint64_t> select_grid_points_parallel(const CoefficientGrid& grid, const Weight& top,
                                                       std::span<const Weight> roots, Pred&& pred) {
  const std::uint64_t total = grid.size();
  const std::int64_t chunks = static_cast<std::int64_t>((total + kScanChunk - 1) / kScanChunk);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(chunks));
  const std::span<const int> bounds = grid.bounds();

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kScanChunk;
    const std::uint64_t end = std::min(total, begin + kScanChunk);
    std::vector<int> n = grid.decode(begin);
    Weight nu = top;
    for (std::size_t k = 0; k < n.size(); ++k) nu -= static_cast<std::int64_t>(n[k]) * roots[k];
    auto& hits = partial[static_cast<std::size_t>(c)];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (pred(nu, std::span<const int>(n))) hits.push_back(idx);
      for (std::size_t k = 0; k < n.size(); ++k) {
        if (n[k] < bounds[k]) {
          ++n[k];
          nu -= roots[k];
          break;
        }
        nu += static_cast<std::int64_t>(n[k]) * roots[k];
        n[k] = 0;
      }
    }
  }

  std::vector<std::uint64_t> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

template <class Pred>
std::vector<std::uint64_t> select_grid_points(const CoefficientGrid& grid, const Weight& top,
                                              std::span<const Weight> roots, Pred&& pred, Execution exec) {
  if (exec == Execution::serial) return select_grid_points_serial(grid, top, roots, pred);
  return select_grid_points_parallel(grid, top, roots, pred);
}

}  // namespace bsz

#endif  // BSZ_LATTICE_SCAN_HPP
