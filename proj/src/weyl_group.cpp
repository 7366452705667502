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

#include "bsz/weyl_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bsz/error.hpp"

namespace bsz {

namespace {

// r_i(lam) = lam - lam_i alpha_i, i.e. I - alpha_i e_i^T.
IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  IntMatrix m = IntMatrix::identity(n);
  const Weight alpha = rs.cartan().column(i);
  for (int r = 0; r < n; ++r) m(r, i) -= alpha[r];
  return m;
}

}  // namespace

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.rank();
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(rs_, i));

  std::set<IntMatrix> seen{IntMatrix::identity(n)};
  std::vector<IntMatrix> level{IntMatrix::identity(n)};
  std::vector<IntMatrix> ordered;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    ordered.insert(ordered.end(), level.begin(), level.end());
    std::vector<IntMatrix> next;
    for (const IntMatrix& m : level) {
      for (const IntMatrix& g : gens) {
        IntMatrix p = m * g;
        if (seen.insert(p).second) next.push_back(p);
      }
    }
    level = std::move(next);
  }

  const auto roots = rs_.positive_roots();
  elements_.reserve(ordered.size());
  for (const IntMatrix& m : ordered) {
    WeylElement e;
    e.matrix = m;
    e.sign = static_cast<int>(m.determinant());
    for (const Root& r : roots) {
      const auto image = rs_.find_root(m.apply(r.fw_coords));
      if (!image) throw std::logic_error("Weyl element does not permute the roots");
      if (*image < 0) (r.is_long ? e.len_l : e.len_s) += 1;
    }
    index_.emplace(m, elements_.size());
    elements_.push_back(e);
  }
  for (const IntMatrix& g : gens) simple_.push_back(index_.at(g));
  longest_ = elements_.size() - 1;
  for (ElementId k = 0; k < elements_.size(); ++k) {
    if (elements_[k].length() > elements_[longest_].length()) longest_ = k;
  }
}

ElementId WeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::logic_error("matrix is not an element of the Weyl group");
  return it->second;
}

ElementId WeylGroup::compose(ElementId a, ElementId b) const {
  return find(elements_.at(a).matrix * elements_.at(b).matrix);
}

ElementId WeylGroup::inverse(ElementId a) const {
  for (ElementId k = 0; k < elements_.size(); ++k) {
    if (compose(a, k) == identity()) return k;
  }
  throw std::logic_error("element without inverse");
}

Weight WeylGroup::act(ElementId w, const Weight& lam) const {
  if (lam.rank() != rank()) throw InputError("act: weight rank does not match the system");
  return elements_.at(w).matrix.apply(lam);
}

DominantRepresentative WeylGroup::dominant_representative(const Weight& lam) const {
  if (lam.rank() != rank()) throw InputError("dominant_representative: weight rank does not match the system");
  Weight mu = lam;
  IntMatrix w = IntMatrix::identity(rank());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank(); ++i) {
      if (mu[i] < 0) {
        const IntMatrix& r = elements_[simple_[static_cast<std::size_t>(i)]].matrix;
        mu = r.apply(mu);
        w = r * w;
        moved = true;
        break;
      }
    }
  }
  const ElementId id = find(w);
  return {mu, id, elements_[id].sign};
}

DominantRepresentative WeylGroup::dominant_representative_by_scan(const Weight& lam) const {
  std::optional<DominantRepresentative> best;
  for (ElementId k = 0; k < elements_.size(); ++k) {
    Weight mu = act(k, lam);
    if (!mu.is_dominant()) continue;
    if (!best || elements_[k].length() < elements_[best->element].length()) {
      best = DominantRepresentative{mu, k, elements_[k].sign};
    }
  }
  return *best;
}

std::vector<ElementId> WeylGroup::stabilizer(const Weight& lam) const {
  std::vector<ElementId> out;
  for (ElementId k = 0; k < elements_.size(); ++k) {
    if (act(k, lam) == lam) out.push_back(k);
  }
  return out;
}

std::vector<Weight> WeylGroup::orbit(const Weight& lam) const {
  std::set<Weight> pts;
  for (ElementId k = 0; k < elements_.size(); ++k) pts.insert(act(k, lam));
  return {pts.begin(), pts.end()};
}

std::vector<std::size_t> WeylGroup::inversion_set(ElementId w) const {
  std::vector<std::size_t> out;
  const auto roots = rs_.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto image = rs_.find_root(act(w, roots[k].fw_coords));
    if (*image < 0) out.push_back(k);
  }
  return out;
}

Rational poincare_enumerated(const WeylGroup& wg, std::span<const ElementId> stab, const Rational& ts,
                             const Rational& tl) {
  Rational sum(0);
  for (ElementId id : stab) {
    const WeylElement& e = wg.element(id);
    sum += power(ts, e.len_s) * power(tl, e.len_l);
  }
  return sum;
}

Rational poincare_product(const RootSystem& rs, const Weight& lam_tilde, const Rational& ts, const Rational& tl) {
  if (!lam_tilde.is_dominant()) {
    throw DomainError("poincare_product: weight " + to_string(lam_tilde) + " is not dominant");
  }
  Rational result(1);
  for (const Root& alpha : rs.positive_roots()) {
    if (coroot_pairing(lam_tilde, alpha) != 0) continue;
    const HeightStats h = height_stats(rs, alpha);
    const Rational denom = 1 - power(ts, h.short_height) * power(tl, h.long_height);
    if (denom == 0) {
      throw DomainError("poincare_product: vanishing denominator for root " + to_string(alpha.fw_coords));
    }
    const Rational numer = alpha.is_long ? 1 - power(ts, h.short_height) * power(tl, 1 + h.long_height)
                                         : 1 - power(ts, 1 + h.short_height) * power(tl, h.long_height);
    result *= numer / denom;
  }
  return result;
}

}  // namespace bsz
