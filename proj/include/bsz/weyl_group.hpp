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

#ifndef BSZ_WEYL_GROUP_HPP
#define BSZ_WEYL_GROUP_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "bsz/rational.hpp"
#include "bsz/root_system.hpp"
#include "bsz/weight.hpp"

namespace bsz {

/// A Weyl group element as an integer matrix on fundamental-weight coordinates.
struct WeylElement {
  IntMatrix matrix;
  int sign = 1;   // determinant
  int len_s = 0;  // inverted short positive roots
  int len_l = 0;  // inverted long positive roots

  int length() const noexcept { return len_s + len_l; }
};

/// Index of an element in WeylGroup::elements().
using ElementId = std::size_t;

struct DominantRepresentative {
  Weight dominant;
  ElementId element = 0;  // dominant == act(element, input), shortest such element
  int sign = 1;
};

/// The Weyl group of a root system, fully enumerated.
///
/// Elements are listed breadth-first from the identity under right
/// multiplication by simple reflections; within a BFS level they are sorted
/// lexicographically by matrix entries. Element 0 is the identity. The table is
/// immutable after construction and safe to share between threads.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);
  explicit WeylGroup(SystemType type) : WeylGroup(RootSystem::build(type)) {}

  const RootSystem& roots() const noexcept { return rs_; }
  int rank() const noexcept { return rs_.rank(); }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const WeylElement> elements() const noexcept { return elements_; }
  const WeylElement& element(ElementId id) const { return elements_.at(id); }

  ElementId identity() const noexcept { return 0; }
  ElementId longest() const noexcept { return longest_; }
  ElementId simple_reflection(int i) const { return simple_.at(static_cast<std::size_t>(i)); }
  ElementId find(const IntMatrix& m) const;
  ElementId compose(ElementId a, ElementId b) const;  // a * b
  ElementId inverse(ElementId a) const;

  Weight act(ElementId w, const Weight& lam) const;

  /// Simple-reflection descent: apply r_i while some coordinate i is negative.
  DominantRepresentative dominant_representative(const Weight& lam) const;
  /// Same result, found by scanning the orbit (test oracle).
  DominantRepresentative dominant_representative_by_scan(const Weight& lam) const;

  std::vector<ElementId> stabilizer(const Weight& lam) const;
  /// Distinct orbit elements, sorted.
  std::vector<Weight> orbit(const Weight& lam) const;
  /// Positive roots inverted by w, as indices into roots().positive_roots().
  std::vector<std::size_t> inversion_set(ElementId w) const;

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::vector<ElementId> simple_;
  std::map<IntMatrix, ElementId> index_;
  ElementId longest_ = 0;
};

/// sum over w in stab of ts^{len_s(w)} tl^{len_l(w)}.
Rational poincare_enumerated(const WeylGroup& wg, std::span<const ElementId> stab, const Rational& ts,
                             const Rational& tl);

/// Product form of the same series for the stabilizer of a dominant weight:
/// over positive roots with <lam_tilde, alpha^vee> = 0,
///   short: (1 - ts^{1+hs} tl^{hl}) / (1 - ts^{hs} tl^{hl}),
///   long:  (1 - ts^{hs} tl^{1+hl}) / (1 - ts^{hs} tl^{hl}).
/// Throws DomainError on a vanishing denominator or a non-dominant lam_tilde.
Rational poincare_product(const RootSystem& rs, const Weight& lam_tilde, const Rational& ts, const Rational& tl);

}  // namespace bsz

#endif  // BSZ_WEYL_GROUP_HPP
