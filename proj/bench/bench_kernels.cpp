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

// Serial reference vs OpenMP kernel timings.
//
//   bsz_bench [repeats]
//
// Reports the best wall time of each variant and checks that both produce
// the same result (bit-identical for the lattice scans, 1e-16 relative for
// the floating Gram sums).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bsz/bsz_polynomial.hpp"
#include "bsz/quadrature.hpp"
#include "bsz/weight_lattice.hpp"

using namespace bsz;

namespace {

double best_of(int repeats, const std::function<void()>& body) {
  double best = INFINITY;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void report(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-48s  serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name.c_str(), serial, parallel,
              serial / parallel, agree ? "agree" : "DISAGREE");
}

bool close(const MonomialGram& a, const MonomialGram& b) {
  for (std::size_t i = 0; i < a.values.a.size(); ++i) {
    const GramReal x = a.values.a[i], y = b.values.a[i];
    if (std::abs(x - y) > 1e-16L * std::max(1.0L, std::abs(x))) return false;
  }
  return a.values.a.size() == b.values.a.size();
}

void bench_gram(const char* label, SystemType type, const BszParams& params, int bound, int points, int repeats) {
  const WeylGroup wg(type);
  const std::vector<Weight> basis = dominant_weights_in_box(wg.rank(), bound);
  const TorusGrid grid(wg.rank(), points);
  MonomialGram s, p;
  const double ts = best_of(repeats, [&] { s = monomial_gram(wg, params, basis, grid, Execution::serial); });
  const double tp = best_of(repeats, [&] { p = monomial_gram(wg, params, basis, grid, Execution::parallel); });
  report(std::string("gram ") + label, ts, tp, close(s, p));
}

void bench_scan(const char* label, SystemType type, const Weight& lam, int repeats) {
  const WeylGroup wg(type);
  PropositionReport s, p;
  const double ts = best_of(repeats, [&] { s = verify_saturated_prop(wg, lam, {}, Execution::serial); });
  const double tp = best_of(repeats, [&] { p = verify_saturated_prop(wg, lam, {}, Execution::parallel); });
  const bool agree = s.passed == p.passed && s.vectors_scanned == p.vectors_scanned;
  report(std::string("saturated scan ") + label + " (" + std::to_string(s.vectors_scanned) + " n-vectors)", ts, tp,
         agree);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::stoi(argv[1])) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP: both variants run serially\n");
#endif
  const BszParams g2({Rational(1, 2), Rational(-1, 3)}, {Rational(2, 5), Rational(-1, 4)});
  bench_gram("G2 box 3, N=64", SystemType::G2, g2, 3, 64, repeats);
  bench_gram("G2 box 5, N=256", SystemType::G2, g2, 5, 256, repeats);
  const BszParams b3({Rational(1, 3)}, {Rational(-1, 2)});
  bench_gram("B3 box 2, N=32", SystemType::B3, b3, 2, 32, repeats);
  bench_scan("B3 [3,3,3]", SystemType::B3, Weight{3, 3, 3}, repeats);
  bench_scan("G2 [4,4]", SystemType::G2, Weight{4, 4}, repeats);
  return 0;
}
