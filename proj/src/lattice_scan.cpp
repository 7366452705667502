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

#include "bsz/lattice_scan.hpp"

#include <limits>

#include "bsz/error.hpp"

namespace bsz {

CoefficientGrid::CoefficientGrid(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (int b : bounds_) {
    if (b < 0) throw InputError("negative coefficient bound");
    const std::uint64_t radix = static_cast<std::uint64_t>(b) + 1;
    size_ = size_ > kMax / radix ? kMax : size_ * radix;
  }
}

std::vector<int> CoefficientGrid::decode(std::uint64_t index) const {
  std::vector<int> n(bounds_.size());
  for (std::size_t k = 0; k < bounds_.size(); ++k) {
    const std::uint64_t radix = static_cast<std::uint64_t>(bounds_[k]) + 1;
    n[k] = static_cast<int>(index % radix);
    index /= radix;
  }
  return n;
}

}  // namespace bsz
