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

#include "bsz/quadrature_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bsz/error.hpp"

namespace bsz {

namespace {

/// Per-problem tables shared by both kernels.
class NodeEvaluator {
 public:
  explicit NodeEvaluator(const GramProblem& p) : p_(p), k_(p.support.size()) {
    if (p.rank < 1 || p.rank > kMaxRank || p.points < 1) throw InputError("gram_sum: bad grid");
    const auto n = static_cast<std::size_t>(p.points);
    cos_.resize(n);
    sin_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const GramReal angle = 2 * std::numbers::pi_v<GramReal> * static_cast<GramReal>(j) / static_cast<GramReal>(n);
      cos_[j] = std::cos(angle);
      sin_[j] = std::sin(angle);
    }
    nodes_ = 1;
    for (int i = 0; i < p.rank; ++i) nodes_ *= static_cast<std::uint64_t>(p.points);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t basis_size() const noexcept { return k_; }
  std::size_t packed_size() const noexcept { return k_ * (k_ + 1) / 2; }

  /// Adds the contribution of one node (k = grid multi-index) into acc.
  void accumulate(const Weight& k, std::vector<GramReal>& re, std::vector<GramReal>& im,
                  std::vector<GramReal>& acc) const {
    GramReal w = 1;
    for (std::size_t r = 0; r < p_.root_frequencies.size(); ++r) {
      const GramReal c = cos_[phase(p_.root_frequencies[r], k)];
      GramReal denom = 1;
      for (GramReal t : p_.root_parameters[r]) denom *= 1 + 2 * t * c + t * t;
      w *= (2 - 2 * c) / denom;
    }
    if (w == 0) return;
    for (std::size_t a = 0; a < k_; ++a) {
      GramReal x = 0, y = 0;
      for (const Weight& nu : p_.support[a]) {
        const std::size_t ph = phase(nu, k);
        x += cos_[ph];
        y += sin_[ph];
      }
      re[a] = x;
      im[a] = y;
    }
    std::size_t idx = 0;
    for (std::size_t a = 0; a < k_; ++a) {
      const GramReal wa = w * re[a], wb = w * im[a];
      for (std::size_t b = a; b < k_; ++b) acc[idx++] += wa * re[b] + wb * im[b];
    }
  }

  Weight decode(std::uint64_t node) const {
    Weight k(p_.rank);
    for (int i = 0; i < p_.rank; ++i) {
      k[i] = static_cast<std::int64_t>(node % static_cast<std::uint64_t>(p_.points));
      node /= static_cast<std::uint64_t>(p_.points);
    }
    return k;
  }

  void scale(std::vector<GramReal>& acc) const {
    const GramReal inv = 1 / static_cast<GramReal>(nodes_);
    for (GramReal& v : acc) v *= inv;
  }

 private:
  std::size_t phase(const Weight& nu, const Weight& k) const {
    std::int64_t s = 0;
    for (int i = 0; i < p_.rank; ++i) s += nu[i] * k[i];
    s %= p_.points;
    if (s < 0) s += p_.points;
    return static_cast<std::size_t>(s);
  }

  const GramProblem& p_;
  std::size_t k_;
  std::uint64_t nodes_ = 1;
  std::vector<GramReal> cos_, sin_;
};

}  // namespace

std::vector<GramReal> gram_sum_serial(const GramProblem& problem) {
  const NodeEvaluator ev(problem);
  std::vector<GramReal> acc(ev.packed_size(), 0);
  std::vector<GramReal> re(ev.basis_size()), im(ev.basis_size());
  for (std::uint64_t node = 0; node < ev.nodes(); ++node) ev.accumulate(ev.decode(node), re, im, acc);
  ev.scale(acc);
  return acc;
}

std::vector<GramReal> gram_sum_parallel(const GramProblem& problem) {
  const NodeEvaluator ev(problem);
  const std::uint64_t total = ev.nodes();
  const auto blocks = static_cast<std::int64_t>((total + kQuadratureBlock - 1) / kQuadratureBlock);
  std::vector<std::vector<GramReal>> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel
  {
    std::vector<GramReal> re(ev.basis_size()), im(ev.basis_size());
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
      auto& acc = partial[static_cast<std::size_t>(b)];
      acc.assign(ev.packed_size(), 0);
      const std::uint64_t begin = static_cast<std::uint64_t>(b) * kQuadratureBlock;
      const std::uint64_t end = std::min(total, begin + kQuadratureBlock);
      for (std::uint64_t node = begin; node < end; ++node) ev.accumulate(ev.decode(node), re, im, acc);
    }
  }

  // Pairwise tree: stride 1, 2, 4, ... over the block list.
  for (std::size_t stride = 1; stride < partial.size(); stride *= 2) {
    for (std::size_t i = 0; i + stride < partial.size(); i += 2 * stride) {
      auto& dst = partial[i];
      const auto& src = partial[i + stride];
      for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += src[j];
    }
  }
  std::vector<GramReal> acc = partial.empty() ? std::vector<GramReal>(ev.packed_size(), 0) : std::move(partial[0]);
  ev.scale(acc);
  return acc;
}

std::vector<GramReal> gram_sum(const GramProblem& problem, Execution exec) {
  return exec == Execution::serial ? gram_sum_serial(problem) : gram_sum_parallel(problem);
}

}  // namespace bsz
