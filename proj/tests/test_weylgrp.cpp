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


#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bsz/root_system.hpp"
#include "bsz/weyl_group.hpp"

using namespace bsz;

TEST_SUITE("weylgrp") {
  TEST_CASE("orders and signs") {
    const WeylGroup a1(SystemType::A1);
    REQUIRE(a1.order() == 2);
    std::multiset<int> signs;
    for (const WeylElement& w : a1.elements()) signs.insert(w.sign);
    CHECK(signs == std::multiset<int>{-1, 1});

    const WeylGroup g2(SystemType::G2);
    REQUIRE(g2.order() == 12);
    std::set<int> lengths;
    for (const WeylElement& w : g2.elements()) lengths.insert(w.length());
    CHECK(lengths == std::set<int>{0, 1, 2, 3, 4, 5, 6});
  }

  TEST_CASE("B2 length pairs are symmetric under the longest element") {
    const WeylGroup b2(SystemType::B2);
    REQUIRE(b2.order() == 8);
    std::multiset<std::pair<int, int>> pairs, flipped;
    for (const WeylElement& w : b2.elements()) {
      pairs.emplace(w.len_s, w.len_l);
      flipped.emplace(2 - w.len_s, 2 - w.len_l);
    }
    CHECK(pairs == flipped);
    CHECK(b2.element(b2.longest()).len_s == 2);
    CHECK(b2.element(b2.longest()).len_l == 2);
  }

  TEST_CASE("element invariants on every system") {
    for (SystemType t : supported_systems()) {
      CAPTURE(system_name(t));
      const WeylGroup wg(t);
      const RootSystem& rs = wg.roots();
      CHECK(static_cast<std::int64_t>(wg.order()) == rs.weyl_order());
      CHECK(wg.element(0).matrix == IntMatrix::identity(rs.rank()));
      if (wg.order() > 200) continue;  // F4, B4, C4, D4: the table checks above suffice
      std::set<IntMatrix> distinct;
      for (ElementId id = 0; id < wg.order(); ++id) {
        const WeylElement& w = wg.element(id);
        distinct.insert(w.matrix);
        CHECK(w.sign == w.matrix.determinant());
        CHECK(w.sign == ((w.len_s + w.len_l) % 2 == 0 ? 1 : -1));
        // Inversions counted directly on the matrices.
        int inv_s = 0, inv_l = 0;
        for (const Root& a : rs.positive_roots()) {
          const auto image = rs.root_lattice_coordinates(w.matrix.apply(a.fw_coords));
          REQUIRE(image.has_value());
          bool negative = false;
          for (int i = 0; i < rs.rank(); ++i) negative = negative || (*image)[i] < 0;
          if (negative) ++(a.is_long ? inv_l : inv_s);
        }
        CHECK(inv_s == w.len_s);
        CHECK(inv_l == w.len_l);
        CHECK(wg.inversion_set(id).size() == static_cast<std::size_t>(w.length()));
      }
      CHECK(distinct.size() == wg.order());
    }
  }

  TEST_CASE("action") {
    const WeylGroup a1(SystemType::A1);
    CHECK(a1.act(a1.identity(), Weight{4}) == Weight{4});
    CHECK(a1.act(a1.simple_reflection(0), Weight{3}) == Weight{-3});
    const WeylGroup a2(SystemType::A2);
    CHECK(a2.act(a2.simple_reflection(0), Weight{1, 0}) == Weight{-1, 1});
  }

  TEST_CASE("dominant representative") {
    const WeylGroup a1(SystemType::A1);
    const DominantRepresentative r = a1.dominant_representative(Weight{-3});
    CHECK(r.dominant == Weight{3});
    CHECK(r.element == a1.simple_reflection(0));
    CHECK(r.sign == -1);
    const DominantRepresentative id = a1.dominant_representative(Weight{2});
    CHECK(id.element == a1.identity());
    CHECK(id.sign == 1);

    for (SystemType t : {SystemType::B2, SystemType::G2, SystemType::A3, SystemType::B3}) {
      const WeylGroup wg(t);
      const int r2 = wg.rank();
      Weight w(r2);
      for (int i = 0; i < r2; ++i) w[i] = (i % 2 == 0 ? -1 : 2) + i;
      const DominantRepresentative fast = wg.dominant_representative(w);
      const DominantRepresentative scan = wg.dominant_representative_by_scan(w);
      CHECK(fast.dominant == scan.dominant);
      CHECK(fast.sign == scan.sign);
      CHECK(wg.act(fast.element, w) == fast.dominant);
      // Orbit scan, written out: the unique dominant member of the orbit.
      int dominant_members = 0;
      for (const WeylElement& e : wg.elements()) {
        if (e.matrix.apply(w).is_dominant()) {
          ++dominant_members;
          CHECK(e.matrix.apply(w) == fast.dominant);
        }
      }
      CHECK(dominant_members >= 1);
    }
    const WeylGroup b2(SystemType::B2);
    CHECK(b2.dominant_representative(Weight{-1, 2}).dominant == b2.dominant_representative_by_scan(Weight{-1, 2}).dominant);
  }

  TEST_CASE("stabilizers and orbits") {
    const WeylGroup b2(SystemType::B2);
    CHECK(b2.stabilizer(Weight{1, 1}).size() == 1);
    CHECK(b2.stabilizer(Weight{0, 0}).size() == 8);
    CHECK(b2.stabilizer(Weight{0, 1}).size() == 2);
    CHECK(b2.orbit(Weight{1, 0}).size() == 4);
    const WeylGroup f4(SystemType::F4);
    CHECK(f4.stabilizer(Weight{0, 0, 0, 0}).size() == 1152);
    CHECK(f4.orbit(Weight{1, 0, 0, 0}).size() * f4.stabilizer(Weight{1, 0, 0, 0}).size() == 1152);
  }

  TEST_CASE("inversion sets") {
    const WeylGroup g2(SystemType::G2);
    CHECK(g2.inversion_set(g2.identity()).empty());
    CHECK(g2.inversion_set(g2.longest()).size() == 6);
    for (int i = 0; i < 2; ++i) {
      const std::vector<std::size_t> inv = g2.inversion_set(g2.simple_reflection(i));
      REQUIRE(inv.size() == 1);
      CHECK(g2.roots().positive_roots()[inv[0]].sr_coords == g2.roots().simple_roots()[static_cast<std::size_t>(i)].sr_coords);
    }
  }

  TEST_CASE("group operations") {
    const WeylGroup b3(SystemType::B3);
    for (ElementId a = 0; a < b3.order(); a += 5) {
      CHECK(b3.compose(a, b3.inverse(a)) == b3.identity());
      for (ElementId b = 0; b < b3.order(); b += 7) {
        CHECK(b3.element(b3.compose(a, b)).matrix == b3.element(a).matrix * b3.element(b).matrix);
      }
    }
  }

  TEST_CASE("Poincare series") {
    const Rational t(1, 3), u(-2, 5);
    const WeylGroup a1(SystemType::A1);
    const std::vector<ElementId> none{a1.identity()};
    CHECK(poincare_enumerated(a1, none, t, u) == 1);
    CHECK(poincare_enumerated(a1, a1.stabilizer(Weight{0}), t, u) == 1 + t);
    CHECK(poincare_product(a1.roots(), Weight{0}, t, u) == 1 + t);
    CHECK(poincare_product(a1.roots(), Weight{3}, t, u) == 1);

    const WeylGroup a2(SystemType::A2);
    CHECK(poincare_enumerated(a2, a2.stabilizer(Weight{0, 0}), t, u) == 1 + 2 * t + 2 * t * t + t * t * t);
    CHECK(poincare_product(a2.roots(), Weight{0, 0}, t, u) == (1 + t) * (1 + t + t * t));

    // Two-parameter check on B2: W(B2) is generated by one short and one long
    // reflection; sum over the 8 elements of ts^len_s tl^len_l by hand.
    const WeylGroup b2(SystemType::B2);
    std::map<std::pair<int, int>, int> count;
    for (const WeylElement& w : b2.elements()) ++count[{w.len_s, w.len_l}];
    Rational by_hand(0);
    for (const auto& [k, n] : count) by_hand += n * power(t, k.first) * power(u, k.second);
    CHECK(poincare_enumerated(b2, b2.stabilizer(Weight{0, 0}), t, u) == by_hand);
    CHECK(poincare_product(b2.roots(), Weight{0, 0}, t, u) == by_hand);
    CHECK(by_hand == (1 + t) * (1 + u) * (1 + t * u));
  }
}
