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

#include "entspec/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace entspec {

void check_qubit_count(unsigned n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " outside supported range [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

double norm_squared(std::span<const Complex> amplitudes) noexcept {
  double sum = 0.0;
  for (const Complex& z : amplitudes) sum += std::norm(z);
  return sum;
}

PureState::PureState(unsigned n, std::vector<Complex> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n);
  const std::size_t expected = std::size_t{1} << n;
  if (amplitudes_.size() != expected) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not equal 2^" + std::to_string(n));
  }
  const double deviation = std::abs(entspec::norm_squared(amplitudes_) - 1.0);
  if (!(deviation <= kNormTolerance)) {
    throw std::invalid_argument("state is not normalized: |sum |z|^2 - 1| = " +
                                std::to_string(deviation));
  }
}

double PureState::norm_squared() const noexcept { return entspec::norm_squared(amplitudes_); }

RandomSeed derive_seed(RandomSeed base, std::uint64_t index) {
  std::uint64_t z = base.value + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return RandomSeed{z ^ (z >> 31)};
}

PureState make_basis(unsigned n, std::uint64_t index) {
  check_qubit_count(n);
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim) {
    throw std::invalid_argument("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(n) + " qubits");
  }
  std::vector<Complex> z(dim);
  z[index] = 1.0;
  return PureState(n, std::move(z));
}

PureState make_ghz(unsigned n) {
  check_qubit_count(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> z(dim);
  z.front() = z.back() = 1.0 / std::sqrt(2.0);
  return PureState(n, std::move(z));
}

PureState make_w(unsigned n) {
  check_qubit_count(n);
  std::vector<Complex> z(std::size_t{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (unsigned q = 0; q < n; ++q) z[std::size_t{1} << q] = amp;
  return PureState(n, std::move(z));
}

PureState make_cluster(unsigned n, Topology topology) {
  check_qubit_count(n);
  if (n < 2) throw std::invalid_argument("cluster state needs at least 2 qubits");
  if (topology == Topology::ring && n < 3) {
    throw std::invalid_argument("ring cluster state needs at least 3 qubits");
  }

  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  if (topology == Topology::ring) edges.emplace_back(n - 1, 0);

  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * n);
  std::vector<Complex> z(dim, amp);
  // CZ on (i, j) flips the sign of every amplitude with both bits set.
  for (auto [i, j] : edges) {
    const std::size_t both = (std::size_t{1} << i) | (std::size_t{1} << j);
    for (std::size_t k = 0; k < dim; ++k) {
      if ((k & both) == both) z[k] = -z[k];
    }
  }
  return PureState(n, std::move(z));
}

PureState make_random(unsigned n, RandomSeed seed) {
  check_qubit_count(n);
  std::mt19937_64 engine(seed.value);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> z(std::size_t{1} << n);
  for (Complex& c : z) {
    const double re = normal(engine);
    const double im = normal(engine);
    c = Complex(re, im);
  }
  const double scale = 1.0 / std::sqrt(entspec::norm_squared(z));
  for (Complex& c : z) c *= scale;
  return PureState(n, std::move(z));
}

namespace {

void check_unitary(const Unitary2& u) {
  // (u^dagger u)[r][c] = sum_k conj(u[k][r]) u[k][c]
  double defect = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Complex entry = std::conj(u[r]) * u[c] + std::conj(u[2 + r]) * u[2 + c];
      const Complex identity = r == c ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(entry - identity));
    }
  }
  if (!(defect <= 1e-12)) {
    throw std::invalid_argument("matrix is not unitary: max |u^dagger u - I| = " +
                                std::to_string(defect));
  }
}

} // namespace

PureState apply_single_qubit_unitary(const PureState& state, unsigned qubit, const Unitary2& u) {
  if (qubit >= state.qubits()) {
    throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range for " +
                                std::to_string(state.qubits()) + " qubits");
  }
  check_unitary(u);

  const std::size_t bit = std::size_t{1} << qubit;
  std::vector<Complex> z(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t k0 = 0; k0 < z.size(); ++k0) {
    if (k0 & bit) continue;
    const std::size_t k1 = k0 | bit;
    const Complex a0 = z[k0];
    const Complex a1 = z[k1];
    z[k0] = u[0] * a0 + u[1] * a1;
    z[k1] = u[2] * a0 + u[3] * a1;
  }
  return PureState(state.qubits(), std::move(z));
}

} // namespace entspec
