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

#pragma once

#include <cstdint>
#include <vector>

#include "entspec/bipartition.hpp"
#include "entspec/state.hpp"

namespace entspec {

/// Reduced density matrix rho_A = tr_B |psi><psi|, N_A x N_A, row-major.
class GramMatrix {
public:
  GramMatrix(unsigned size_a, std::vector<Complex> entries);

  unsigned size_a() const noexcept { return size_a_; }
  std::size_t dim() const noexcept { return std::size_t{1} << size_a_; }
  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim() + col];
  }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  Complex trace() const noexcept;

  /// sum_{j,j'} |rho[j][j']|^2, which equals tr rho^2 for Hermitian rho.
  double frobenius_squared() const noexcept;

  /// max_{j,j'} |rho[j][j'] - conj(rho[j'][j])|.
  double hermiticity_defect() const noexcept;

private:
  unsigned size_a_;
  std::vector<Complex> entries_;
};

struct PurityRecord {
  double purity = 1.0;           // pi_AB = tr rho_A^2
  double participation = 1.0;    // N_AB = 1 / pi_AB
  double entangled_qubits = 0.0; // n_AB = log2 N_AB

  static PurityRecord from_purity(double purity) noexcept;
};

/// Gathers the amplitudes into an N_A x N_B matrix M and returns M M^dagger.
/// Honors the mask literally, so an unbalanced mask reduces onto the larger
/// side. Throws std::invalid_argument on qubit-count mismatch.
GramMatrix reduce(const PureState& state, const Bipartition& part);

/// Purity of the bipartition, computed on whichever side is smaller.
PurityRecord purity(const PureState& state, const Bipartition& part);

inline constexpr unsigned kQuarticOracleMaxQubits = 12;

/// Direct quadruple sum
///   sum_{j,j',l,l'} z_{jl} conj(z_{j'l}) z_{j'l'} conj(z_{jl'}).
/// Cost is O(N^2); refuses n > kQuarticOracleMaxQubits with CapExceeded.
double purity_quartic_oracle(const PureState& state, const Bipartition& part);

/// Exact W-state participation n^2 / (n_A^2 + n_B^2) for a split (n_A, n_B).
double w_participation_closed_form(unsigned n, unsigned size_a);

} // namespace entspec
