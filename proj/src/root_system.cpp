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

#include "bsz/root_system.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "bsz/error.hpp"

namespace bsz {

namespace {

constexpr std::array<SystemType, 12> kSystems = {
    SystemType::A1, SystemType::A2, SystemType::A3, SystemType::A4, SystemType::B2, SystemType::B3,
    SystemType::B4, SystemType::C3, SystemType::C4, SystemType::D4, SystemType::G2, SystemType::F4};

struct TypeData {
  char family;
  int rank;
};

TypeData type_data(SystemType t) {
  switch (t) {
    case SystemType::A1: return {'A', 1};
    case SystemType::A2: return {'A', 2};
    case SystemType::A3: return {'A', 3};
    case SystemType::A4: return {'A', 4};
    case SystemType::B2: return {'B', 2};
    case SystemType::B3: return {'B', 3};
    case SystemType::B4: return {'B', 4};
    case SystemType::C3: return {'C', 3};
    case SystemType::C4: return {'C', 4};
    case SystemType::D4: return {'D', 4};
    case SystemType::G2: return {'G', 2};
    case SystemType::F4: return {'F', 4};
  }
  return {'A', 1};
}

// Cartan matrix a_ij = <alpha_j, alpha_i^vee> and root-length symmetrizer.
void classical_data(SystemType t, IntMatrix& a, std::array<std::int64_t, kMaxRank>& d) {
  const auto [family, n] = type_data(t);
  a = IntMatrix(n);
  d.fill(0);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2;
    d[static_cast<std::size_t>(i)] = 1;
  }
  auto link = [&](int i, int j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) d[static_cast<std::size_t>(i)] = 2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      d[static_cast<std::size_t>(n - 1)] = 2;
      break;
    case 'D':
      link(0, 1);
      link(1, 2);
      link(1, 3);
      break;
    case 'G':
      a(0, 1) = -3;  // alpha_1 short
      a(1, 0) = -1;
      d[1] = 3;
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      a(1, 2) = -1;
      a(2, 1) = -2;
      d[0] = 2;
      d[1] = 2;
      break;
    default:
      break;
  }
}

IntMatrix adjugate(const IntMatrix& m) {
  const int n = m.size();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      adj(i, j) = (((i + j) % 2) ? -1 : 1) * minor.determinant();
    }
  }
  return adj;
}

}  // namespace

std::span<const SystemType> supported_systems() noexcept { return kSystems; }

std::string_view system_name(SystemType type) noexcept {
  switch (type) {
    case SystemType::A1: return "A1";
    case SystemType::A2: return "A2";
    case SystemType::A3: return "A3";
    case SystemType::A4: return "A4";
    case SystemType::B2: return "B2";
    case SystemType::B3: return "B3";
    case SystemType::B4: return "B4";
    case SystemType::C3: return "C3";
    case SystemType::C4: return "C4";
    case SystemType::D4: return "D4";
    case SystemType::G2: return "G2";
    case SystemType::F4: return "F4";
  }
  return "?";
}

SystemType parse_system(std::string_view name) {
  for (SystemType t : kSystems) {
    if (system_name(t) == name) return t;
  }
  std::string supported;
  for (SystemType t : kSystems) {
    if (!supported.empty()) supported += ", ";
    supported += system_name(t);
  }
  throw InputError("unsupported root system '" + std::string(name) + "'; supported: " + supported);
}

std::int64_t coroot_pairing(const Weight& lam, const Root& alpha) {
  if (lam.rank() != alpha.coroot_coords.rank()) throw InputError("coroot pairing: dimension mismatch");
  std::int64_t s = 0;
  for (int j = 0; j < lam.rank(); ++j) s += lam[j] * alpha.coroot_coords[j];
  return s;
}

RootSystem RootSystem::build(SystemType type) {
  RootSystem rs;
  rs.type_ = type;
  classical_data(type, rs.cartan_, rs.symmetrizer_);
  const int n = rs.cartan_.size();
  rs.rank_ = n;
  rs.cartan_det_ = rs.cartan_.determinant();
  rs.cartan_adjugate_ = adjugate(rs.cartan_);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.symmetrizer_[static_cast<std::size_t>(i)] * rs.cartan_(i, j) !=
          rs.symmetrizer_[static_cast<std::size_t>(j)] * rs.cartan_(j, i))
        throw std::logic_error("Cartan matrix is not symmetrizable with the tabulated root lengths");

  // Root-string closure: beta + alpha_i is a root iff p = q - <beta, alpha_i^vee> > 0,
  // where q is the largest k with beta - k alpha_i a root.
  std::set<Weight> known;  // simple-root coordinates of positive roots
  std::vector<std::vector<Weight>> levels(1);
  for (int i = 0; i < n; ++i) {
    Weight e(n);
    e[i] = 1;
    levels[0].push_back(e);
    known.insert(e);
  }
  auto fw_of = [&](const Weight& sr) { return rs.cartan_.apply(sr); };
  for (std::size_t h = 0; h < levels.size(); ++h) {
    std::set<Weight> next;
    for (const Weight& beta : levels[h]) {
      const Weight fw = fw_of(beta);
      for (int i = 0; i < n; ++i) {
        std::int64_t q = 0;
        Weight down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++q;
        }
        if (q - fw[i] > 0) {
          Weight up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    if (next.empty()) break;
    levels.emplace_back(next.rbegin(), next.rend());
    known.insert(next.begin(), next.end());
  }

  std::int64_t max_len = 0;
  for (const auto& level : levels) {
    for (const Weight& sr : level) {
      Root r;
      r.sr_coords = sr;
      r.fw_coords = fw_of(sr);
      rs.positive_.push_back(r);
    }
  }
  // Level 0 was built in index order; later levels in descending lex order.
  std::vector<std::int64_t> half_len(rs.positive_.size());
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    const Root& r = rs.positive_[k];
    std::int64_t len2 = 0;  // (alpha, alpha) = sum_j k_j d_j <alpha, alpha_j^vee>
    for (int j = 0; j < n; ++j) len2 += r.sr_coords[j] * rs.symmetrizer_[static_cast<std::size_t>(j)] * r.fw_coords[j];
    if (len2 % 2 != 0) throw std::logic_error("odd root length");
    half_len[k] = len2 / 2;
    max_len = std::max(max_len, half_len[k]);
  }
  std::int64_t min_len = *std::min_element(half_len.begin(), half_len.end());
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    Root& r = rs.positive_[k];
    r.is_long = (min_len != max_len) && half_len[k] == max_len;
    r.coroot_coords = Weight(n);
    for (int j = 0; j < n; ++j) {
      const std::int64_t num = r.sr_coords[j] * rs.symmetrizer_[static_cast<std::size_t>(j)];
      if (num % half_len[k] != 0) throw std::logic_error("non-integral coroot coordinates");
      r.coroot_coords[j] = num / half_len[k];
    }
    (r.is_long ? rs.long_positive_ : rs.short_positive_).push_back(k);
  }

  Weight two_rho(n), two_rho_s(n), two_rho_l(n);
  for (const Root& r : rs.positive_) {
    two_rho += r.fw_coords;
    (r.is_long ? two_rho_l : two_rho_s) += r.fw_coords;
  }
  auto halve = [](const Weight& w) {
    Weight h(w.rank());
    for (int i = 0; i < w.rank(); ++i) {
      if (w[i] % 2 != 0) throw std::logic_error("half-sum of roots is not integral");
      h[i] = w[i] / 2;
    }
    return h;
  };
  rs.rho_ = halve(two_rho);
  rs.rho_short_ = halve(two_rho_s);
  rs.rho_long_ = halve(two_rho_l);

  // |W| = prod over positive roots of (ht + 1) / ht (the Poincare polynomial at t = 1).
  Rational order(1);
  for (const Root& r : rs.positive_) order *= Rational(r.height() + 1, r.height());
  order.canonicalize();
  if (!is_integer(order)) throw std::logic_error("non-integral Weyl group order");
  rs.weyl_order_ = order.get_num().get_si();

  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    rs.root_lookup_.emplace(rs.positive_[k].fw_coords, static_cast<std::int64_t>(k) + 1);
    rs.root_lookup_.emplace(-rs.positive_[k].fw_coords, -static_cast<std::int64_t>(k) - 1);
  }
  return rs;
}

std::vector<Rational> RootSystem::simple_root_coordinates(const Weight& fw) const {
  const Weight scaled = scaled_simple_root_coordinates(fw);
  std::vector<Rational> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    out[static_cast<std::size_t>(i)] = Rational(scaled[i], cartan_det_);
    out[static_cast<std::size_t>(i)].canonicalize();
  }
  return out;
}

Weight RootSystem::scaled_simple_root_coordinates(const Weight& fw) const {
  if (fw.rank() != rank_) throw InputError("weight has rank " + std::to_string(fw.rank()) + ", system " +
                                           std::string(name()) + " has rank " + std::to_string(rank_));
  return cartan_adjugate_.apply(fw);
}

std::optional<Weight> RootSystem::root_lattice_coordinates(const Weight& fw) const {
  Weight scaled = scaled_simple_root_coordinates(fw);
  for (int i = 0; i < rank_; ++i) {
    if (scaled[i] % cartan_det_ != 0) return std::nullopt;
    scaled[i] /= cartan_det_;
  }
  return scaled;
}

Rational RootSystem::scalar_product(const Weight& a, const Weight& b) const {
  const Weight kb = scaled_simple_root_coordinates(b);
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += kb[j] * symmetrizer_[static_cast<std::size_t>(j)] * a[j];
  Rational q(s, cartan_det_);
  q.canonicalize();
  return q;
}

std::optional<std::int64_t> RootSystem::find_root(const Weight& fw) const {
  auto it = root_lookup_.find(fw);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

HeightStats height_stats(const RootSystem& rs, const Root& alpha) {
  std::int64_t twice_s = 0;
  std::int64_t twice_l = 0;
  const auto roots = rs.positive_roots();
  for (std::size_t k : rs.short_positive()) twice_s += coroot_pairing(alpha.fw_coords, roots[k]);
  for (std::size_t k : rs.long_positive()) twice_l += coroot_pairing(alpha.fw_coords, roots[k]);
  if (twice_s % 2 != 0 || twice_l % 2 != 0) throw std::logic_error("non-integral height statistic");
  return {twice_s / 2, twice_l / 2};
}

std::int64_t classical_positive_root_count(SystemType type) noexcept {
  switch (type) {
    case SystemType::A1: return 1;
    case SystemType::A2: return 3;
    case SystemType::A3: return 6;
    case SystemType::A4: return 10;
    case SystemType::B2: return 4;
    case SystemType::B3: return 9;
    case SystemType::B4: return 16;
    case SystemType::C3: return 9;
    case SystemType::C4: return 16;
    case SystemType::D4: return 12;
    case SystemType::G2: return 6;
    case SystemType::F4: return 24;
  }
  return 0;
}

std::int64_t classical_weyl_order(SystemType type) noexcept {
  switch (type) {
    case SystemType::A1: return 2;
    case SystemType::A2: return 6;
    case SystemType::A3: return 24;
    case SystemType::A4: return 120;
    case SystemType::B2: return 8;
    case SystemType::B3: return 48;
    case SystemType::B4: return 384;
    case SystemType::C3: return 48;
    case SystemType::C4: return 384;
    case SystemType::D4: return 192;
    case SystemType::G2: return 12;
    case SystemType::F4: return 1152;
  }
  return 0;
}

}  // namespace bsz
