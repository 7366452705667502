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

#include <set>

#include "bsz/error.hpp"
#include "bsz/root_system.hpp"
#include "oracles.hpp"

using namespace bsz;
namespace eu = bsz::oracle;

namespace {

const SystemType kEuclidean[] = {SystemType::A1, SystemType::A2, SystemType::A3, SystemType::B2,
                                 SystemType::B3, SystemType::C3, SystemType::G2};

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("small systems") {
    const RootSystem a1 = RootSystem::build(SystemType::A1);
    CHECK(a1.positive_roots().size() == 1);
    CHECK(a1.rho() == Weight{1});
    CHECK(a1.long_positive().empty());

    const RootSystem b2 = RootSystem::build(SystemType::B2);
    CHECK(b2.positive_roots().size() == 4);
    CHECK(b2.short_positive().size() == 2);
    CHECK(b2.long_positive().size() == 2);
    CHECK(b2.weyl_order() == 8);

    const RootSystem g2 = RootSystem::build(SystemType::G2);
    CHECK(g2.positive_roots().size() == 6);
    CHECK(g2.short_positive().size() == 3);
    CHECK(g2.long_positive().size() == 3);
    CHECK(g2.weyl_order() == 12);
  }

  TEST_CASE("unknown label names the supported set") {
    CHECK_THROWS_AS(parse_system("E6"), InputError);
    CHECK_THROWS_AS(parse_system("g2"), InputError);
    try {
      parse_system("E6");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("F4") != std::string::npos);
    }
  }

  TEST_CASE("classical tables") {
    for (SystemType t : supported_systems()) {
      CAPTURE(system_name(t));
      const RootSystem rs = RootSystem::build(t);
      CHECK(static_cast<std::int64_t>(rs.positive_roots().size()) == classical_positive_root_count(t));
      CHECK(rs.weyl_order() == classical_weyl_order(t));
    }
  }

  TEST_CASE("structural invariants on every system") {
    for (SystemType t : supported_systems()) {
      CAPTURE(system_name(t));
      const RootSystem rs = RootSystem::build(t);
      const int r = rs.rank();
      Weight twice_rho(r);
      for (const Root& a : rs.positive_roots()) {
        twice_rho += a.fw_coords;
        for (int i = 0; i < r; ++i) CHECK(a.sr_coords[i] >= 0);
        // fw = Cartan * sr, with a_ij = <alpha_j, alpha_i^vee>.
        for (int i = 0; i < r; ++i) {
          std::int64_t s = 0;
          for (int j = 0; j < r; ++j) s += rs.cartan()(i, j) * a.sr_coords[j];
          CHECK(s == a.fw_coords[i]);
        }
        const HeightStats h = height_stats(rs, a);
        CHECK(h.short_height + h.long_height >= 1);
      }
      CHECK(twice_rho == 2 * rs.rho());
      CHECK(rs.rho() == rs.rho_short() + rs.rho_long());
      for (int i = 0; i < r; ++i) CHECK(rs.rho()[i] == 1);
      CHECK(rs.short_positive().size() + rs.long_positive().size() == rs.positive_roots().size());
      if (rs.simply_laced()) CHECK(rs.long_positive().empty());
      for (const Root& s : rs.simple_roots()) CHECK(s.height() == 1);
      // Height-graded order.
      for (std::size_t k = 1; k < rs.positive_roots().size(); ++k) {
        CHECK(rs.positive_roots()[k - 1].height() <= rs.positive_roots()[k].height());
      }
      for (const Root& s : rs.simple_roots()) CHECK(coroot_pairing(rs.rho(), s) == 1);
    }
  }

  TEST_CASE("Euclidean realization agrees") {
    for (SystemType t : kEuclidean) {
      CAPTURE(system_name(t));
      const RootSystem rs = RootSystem::build(t);
      const eu::Euclidean e = eu::Euclidean::of(t);
      const std::set<eu::Vec> all = e.roots();
      CHECK(all.size() == 2 * rs.positive_roots().size());

      std::set<eu::Vec> mine;
      eu::Vec zero(e.simple.front().size(), Rational(0));
      Rational short_len(-1);
      for (const Root& a : rs.positive_roots()) {
        const eu::Vec v = e.from_simple(a.sr_coords);
        mine.insert(v);
        mine.insert(eu::axpy(zero, Rational(-1), v));
        if (!a.is_long) short_len = eu::dot(v, v);
      }
      CHECK(mine == all);

      // Cartan round trip and lengths.
      for (int i = 0; i < rs.rank(); ++i) {
        for (int j = 0; j < rs.rank(); ++j) {
          CHECK(eu::pair(e.simple[static_cast<std::size_t>(j)], e.simple[static_cast<std::size_t>(i)]) ==
                rs.cartan()(i, j));
        }
      }
      for (const Root& a : rs.positive_roots()) {
        const eu::Vec v = e.from_simple(a.sr_coords);
        CHECK(a.is_long == (eu::dot(v, v) > short_len));
      }

      // Pairings and height statistics from the Euclidean vectors.
      for (const Weight& lam : {rs.rho(), Weight(rs.rank()), 2 * rs.rho() + rs.simple_roots()[0].fw_coords}) {
        const eu::Vec lv = e.from_fundamental(lam);
        for (const Root& a : rs.positive_roots()) {
          CHECK(Rational(coroot_pairing(lam, a)) == eu::pair(lv, e.from_simple(a.sr_coords)));
        }
      }
      for (const Root& a : rs.positive_roots()) {
        const eu::Vec v = e.from_simple(a.sr_coords);
        Rational hs(0), hl(0);
        for (const Root& b : rs.positive_roots()) {
          (b.is_long ? hl : hs) += eu::pair(v, e.from_simple(b.sr_coords)) / 2;
        }
        const HeightStats h = height_stats(rs, a);
        CHECK(Rational(h.short_height) == hs);
        CHECK(Rational(h.long_height) == hl);
      }
    }
  }

  TEST_CASE("frozen pairings") {
    const RootSystem a1 = RootSystem::build(SystemType::A1);
    CHECK(coroot_pairing(Weight{5}, a1.positive_roots()[0]) == 5);

    const RootSystem a2 = RootSystem::build(SystemType::A2);
    const HeightStats top = height_stats(a2, a2.positive_roots().back());
    CHECK(top.short_height == 2);
    CHECK(top.long_height == 0);
    const HeightStats simple = height_stats(a1, a1.positive_roots()[0]);
    CHECK(simple.short_height == 1);
    CHECK(simple.long_height == 0);

    // G2 highest root is long, 3 alpha_1 + 2 alpha_2; its coroot is
    // alpha_1^vee + 2 alpha_2^vee, so <rho, theta^vee> = 3.
    const RootSystem g2 = RootSystem::build(SystemType::G2);
    const Root& theta = g2.positive_roots().back();
    CHECK(theta.sr_coords == Weight{3, 2});
    CHECK(theta.is_long);
    CHECK(coroot_pairing(Weight{1, 1}, theta) == 3);
  }

  TEST_CASE("lattice coordinates") {
    const RootSystem a1 = RootSystem::build(SystemType::A1);
    CHECK(a1.root_lattice_coordinates(Weight{2}) == Weight{1});
    CHECK_FALSE(a1.root_lattice_coordinates(Weight{1}).has_value());
    const RootSystem g2 = RootSystem::build(SystemType::G2);
    // P = Q for G2.
    CHECK(g2.root_lattice_coordinates(Weight{1, 0}).has_value());
    CHECK(g2.root_lattice_coordinates(Weight{0, 1}).has_value());
  }
}
