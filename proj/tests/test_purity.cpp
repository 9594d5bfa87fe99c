// Copyright 2026 The entspec Authors
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

#include <cmath>
#include <random>

#include "entspec/error.hpp"
#include "entspec/purity.hpp"
#include "oracles.hpp"

using namespace entspec;

namespace {

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool near_power_of_two(double x, double tol) {
  return std::abs(x - std::exp2(std::round(std::log2(x)))) <= tol;
}

} // namespace

TEST_CASE("reduce: GHZ keeps two diagonal branches") {
  for (const auto& part : enumerate_balanced(4)) {
    const auto rho = reduce(make_ghz(4), part);
    REQUIRE(rho.dim() == 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        const double expected = (r == c && (r == 0 || r == 3)) ? 0.5 : 0.0;
        CHECK(std::abs(rho(r, c) - expected) < 1e-15);
      }
    }
  }
}

TEST_CASE("reduce: product state is a projector onto j_A = 0") {
  for (const auto& part : enumerate_balanced(4)) {
    const auto rho = reduce(make_basis(4, 0), part);
    for (std::size_t r = 0; r < rho.dim(); ++r)
      for (std::size_t c = 0; c < rho.dim(); ++c)
        CHECK(rho(r, c) == Complex(r == 0 && c == 0 ? 1.0 : 0.0));
  }
}

TEST_CASE("reduce matches the brute-force partial trace and is a density matrix") {
  for (unsigned n = 2; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto psi = make_random(n, RandomSeed{seed * 31 + n});
      for (std::uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
        const Bipartition part(n, mask);
        const auto rho = reduce(psi, part);
        CHECK(max_abs_diff(rho.entries(), oracle::brute_force_reduced(psi, mask)) < 1e-13);
        CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
        CHECK(rho.hermiticity_defect() < 1e-12);
        CHECK(oracle::min_eigenvalue(rho.entries(), rho.dim()) >= -1e-10);
      }
    }
  }
}

TEST_CASE("GramMatrix rejects non-density data") {
  CHECK_THROWS_AS(GramMatrix(1, {0.5, 0.1, 0.2, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(GramMatrix(1, {0.5, 0.0, 0.0, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(GramMatrix(1, {1.0}), std::invalid_argument);
}

TEST_CASE("purity examples") {
  for (const auto& part : enumerate_balanced(5)) {
    const auto ghz = purity(make_ghz(5), part);
    CHECK(ghz.purity == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ghz.participation == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ghz.entangled_qubits == doctest::Approx(1.0).epsilon(1e-14));

    const auto w = purity(make_w(5), part);
    CHECK(w.purity == doctest::Approx(13.0 / 25.0).epsilon(1e-14));
    CHECK(w.participation == doctest::Approx(25.0 / 13.0).epsilon(1e-14));

    const auto zero = purity(make_basis(5, 0), part);
    CHECK(zero.purity == 1.0);
    CHECK(zero.participation == 1.0);
  }
  CHECK_THROWS_AS(purity(make_ghz(4), Bipartition(5, 0b11)), std::invalid_argument);
  CHECK_THROWS_AS(reduce(make_ghz(4), Bipartition(5, 0b11)), std::invalid_argument);
}

TEST_CASE("quartic oracle") {
  CHECK(purity_quartic_oracle(make_ghz(4), Bipartition(4, 0b0011)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(purity_quartic_oracle(make_w(2), Bipartition(2, 0b01)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(purity_quartic_oracle(make_ghz(13), Bipartition(13, 0b111111)), CapExceeded);

  SUBCASE("agrees with the Gram contraction on 100 random states at n = 6") {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto psi = make_random(6, derive_seed(RandomSeed{6}, s));
      for (const auto& part : enumerate_balanced(6)) {
        worst = std::max(worst, std::abs(purity(psi, part).purity - purity_quartic_oracle(psi, part)));
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("W closed form") {
  CHECK(w_participation_closed_form(5, 2) == doctest::Approx(25.0 / 13.0));
  CHECK(w_participation_closed_form(9, 4) == doctest::Approx(81.0 / 41.0));
  CHECK(w_participation_closed_form(6, 3) == 2.0);
  CHECK_THROWS_AS(w_participation_closed_form(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(w_participation_closed_form(5, 5), std::invalid_argument);

  for (unsigned n = 2; n <= 12; ++n) {
    const auto w = make_w(n);
    for (std::uint64_t mask = 1; mask + 1 < (1ull << n); mask = mask * 3 + 1) {
      const Bipartition part(n, mask);
      CHECK(purity(w, part).participation ==
            doctest::Approx(w_participation_closed_form(n, part.size_a())).epsilon(1e-12));
    }
  }
}

TEST_CASE("bounds, complement symmetry and stabilizer flatness") {
  std::mt19937_64 rng(77);
  for (unsigned n = 2; n <= 11; ++n) {
    const auto psi = make_random(n, RandomSeed{rng()});
    for (const auto& part : enumerate_balanced(n)) {
      const auto rec = purity(psi, part);
      const double cap = static_cast<double>(std::min(part.dim_a(), part.dim_b()));
      CHECK(rec.participation >= 1.0 - 1e-9);
      CHECK(rec.participation <= cap + 1e-9);
      CHECK(std::abs(rec.participation * rec.purity - 1.0) <= 1e-12);

      const auto other = complement(part);
      CHECK(std::abs(purity(psi, other).purity - rec.purity) < 1e-10);
      // Larger side directly.
      CHECK(std::abs(reduce(psi, other).frobenius_squared() - rec.purity) < 1e-10);
    }
  }

  for (Topology t : {Topology::chain, Topology::ring}) {
    for (unsigned n = 3; n <= 12; ++n) {
      const auto c = make_cluster(n, t);
      for (const auto& part : enumerate_balanced(n)) {
        CHECK(near_power_of_two(purity(c, part).participation, 1e-6));
      }
    }
  }
}

TEST_CASE("frobenius norm equals the trace of the square") {
  const auto psi = make_random(6, RandomSeed{123});
  for (const auto& part : enumerate_balanced(6)) {
    const auto rho = reduce(psi, part);
    CHECK(rho.frobenius_squared() == doctest::Approx(oracle::trace_of_square(rho.entries())));
  }
}
