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

#include "entspec/purity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "entspec/error.hpp"

namespace entspec {

GramMatrix::GramMatrix(unsigned size_a, std::vector<Complex> entries)
    : size_a_(size_a), entries_(std::move(entries)) {
  if (entries_.size() != dim() * dim()) {
    throw std::invalid_argument("Gram matrix needs " + std::to_string(dim() * dim()) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  if (!(hermiticity_defect() <= 1e-12)) {
    throw std::invalid_argument("Gram matrix is not Hermitian");
  }
  if (!(std::abs(trace() - 1.0) <= 1e-10)) {
    throw std::invalid_argument("Gram matrix trace differs from 1 by more than 1e-10");
  }
}

Complex GramMatrix::trace() const noexcept {
  Complex t{};
  for (std::size_t j = 0; j < dim(); ++j) t += (*this)(j, j);
  return t;
}

double GramMatrix::frobenius_squared() const noexcept {
  double sum = 0.0;
  for (const Complex& c : entries_) sum += std::norm(c);
  return sum;
}

double GramMatrix::hermiticity_defect() const noexcept {
  double defect = 0.0;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = r; c < dim(); ++c) {
      defect = std::max(defect, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return defect;
}

PurityRecord PurityRecord::from_purity(double purity) noexcept {
  const double participation = 1.0 / purity;
  return {purity, participation, std::log2(participation)};
}

namespace {

void check_match(const PureState& state, const Bipartition& part) {
  if (state.qubits() != part.qubits()) {
    throw std::invalid_argument("state has " + std::to_string(state.qubits()) +
                                " qubits but bipartition has " + std::to_string(part.qubits()));
  }
}

// Row-major dim_a x dim_b coefficient matrix M[j][l] = z_k with
// k = deposit(j, mask) | deposit(l, ~mask).
std::vector<Complex> gather(const PureState& state, std::uint64_t mask_a, std::uint64_t mask_b) {
  const std::size_t dim_a = std::size_t{1} << std::popcount(mask_a);
  const std::size_t dim_b = std::size_t{1} << std::popcount(mask_b);

  std::vector<std::uint64_t> offsets_b(dim_b);
  // Enumerates all submasks of mask_b in increasing compressed order.
  for (std::uint64_t l = 0, m = 0; l < dim_b; ++l, m = ((m | ~mask_b) + 1) & mask_b) {
    offsets_b[l] = m;
  }

  std::vector<Complex> matrix(dim_a * dim_b);
  const auto z = state.amplitudes();
  Complex* out = matrix.data();
  for (std::uint64_t j = 0, ma = 0; j < dim_a; ++j, ma = ((ma | ~mask_a) + 1) & mask_a) {
    for (std::size_t l = 0; l < dim_b; ++l) *out++ = z[ma | offsets_b[l]];
  }
  return matrix;
}

// sum_l row_r[l] * conj(row_c[l])
inline Complex row_product(const Complex* row_r, const Complex* row_c, std::size_t len) noexcept {
  double re = 0.0, im = 0.0;
  for (std::size_t l = 0; l < len; ++l) {
    const double ar = row_r[l].real(), ai = row_r[l].imag();
    const double br = row_c[l].real(), bi = row_c[l].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

} // namespace

GramMatrix reduce(const PureState& state, const Bipartition& part) {
  check_match(state, part);
  const std::size_t dim_a = part.dim_a();
  const std::size_t dim_b = part.dim_b();
  const auto matrix = gather(state, part.mask(), part.complement_mask());

  std::vector<Complex> rho(dim_a * dim_a);
  for (std::size_t r = 0; r < dim_a; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      const Complex v = row_product(&matrix[r * dim_b], &matrix[c * dim_b], dim_b);
      rho[r * dim_a + c] = v;
      rho[c * dim_a + r] = std::conj(v);
    }
    rho[r * dim_a + r].imag(0.0);
  }
  return GramMatrix(part.size_a(), std::move(rho));
}

PurityRecord purity(const PureState& state, const Bipartition& part) {
  check_match(state, part);
  // tr rho_A^2 = tr rho_B^2; contract over the larger side.
  std::uint64_t mask_a = part.mask();
  std::uint64_t mask_b = part.complement_mask();
  if (std::popcount(mask_a) > std::popcount(mask_b)) std::swap(mask_a, mask_b);

  const std::size_t dim_a = std::size_t{1} << std::popcount(mask_a);
  const std::size_t dim_b = std::size_t{1} << std::popcount(mask_b);
  const auto matrix = gather(state, mask_a, mask_b);

  double diagonal = 0.0;
  double off_diagonal = 0.0;
  for (std::size_t r = 0; r < dim_a; ++r) {
    const Complex* row_r = &matrix[r * dim_b];
    for (std::size_t c = 0; c < r; ++c) {
      off_diagonal += std::norm(row_product(row_r, &matrix[c * dim_b], dim_b));
    }
    const double d = row_product(row_r, row_r, dim_b).real();
    diagonal += d * d;
  }
  return PurityRecord::from_purity(diagonal + 2.0 * off_diagonal);
}

double purity_quartic_oracle(const PureState& state, const Bipartition& part) {
  check_match(state, part);
  if (state.qubits() > kQuarticOracleMaxQubits) {
    throw CapExceeded("quartic purity oracle is limited to n <= " +
                      std::to_string(kQuarticOracleMaxQubits) + " (cost O(4^n)), got n=" +
                      std::to_string(state.qubits()));
  }
  const std::size_t dim_a = part.dim_a();
  const std::size_t dim_b = part.dim_b();
  std::vector<Complex> z(dim_a * dim_b);
  for (std::uint64_t k = 0; k < state.dimension(); ++k) {
    const SplitIndex ab = split_index(k, part);
    z[ab.a * dim_b + ab.b] = state[k];
  }
  auto at = [&](std::size_t j, std::size_t l) { return z[j * dim_b + l]; };

  Complex sum{};
  for (std::size_t j = 0; j < dim_a; ++j)
    for (std::size_t jp = 0; jp < dim_a; ++jp)
      for (std::size_t l = 0; l < dim_b; ++l)
        for (std::size_t lp = 0; lp < dim_b; ++lp)
          sum += at(j, l) * std::conj(at(jp, l)) * at(jp, lp) * std::conj(at(j, lp));
  return sum.real();
}

double w_participation_closed_form(unsigned n, unsigned size_a) {
  if (size_a < 1 || size_a >= n) {
    throw std::invalid_argument("subsystem size must satisfy 1 <= n_A < n");
  }
  const double a = size_a;
  const double b = n - size_a;
  const double total = n;
  return total * total / (a * a + b * b);
}

} // namespace entspec
