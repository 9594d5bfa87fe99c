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

#include <array>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace entspec {

using Complex = std::complex<double>;

/// Largest supported register: 2^24 amplitudes, 256 MiB at double precision.
inline constexpr unsigned kMaxQubits = 24;

/// Accepted deviation of sum |z_k|^2 from one for an in-memory state.
inline constexpr double kNormTolerance = 1e-12;

struct RandomSeed {
  std::uint64_t value = 0;
};

/// Per-sample seed for averaging runs: splitmix64 of (base, index).
RandomSeed derive_seed(RandomSeed base, std::uint64_t index);

enum class Topology { chain, ring };

/// 2x2 complex matrix in row-major order: {u00, u01, u10, u11}.
using Unitary2 = std::array<Complex, 4>;

/// Immutable n-qubit pure state. Qubit i is bit i of the basis index
/// (bit 0 least significant). Amplitude count is exactly 2^n and the
/// norm is one within kNormTolerance.
class PureState {
public:
  /// Validates length and normalization; throws std::invalid_argument.
  PureState(unsigned n, std::vector<Complex> amplitudes);

  unsigned qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t k) const noexcept { return amplitudes_[k]; }

  /// Sum of |z_k|^2.
  double norm_squared() const noexcept;

  friend bool operator==(const PureState&, const PureState&) = default;

private:
  unsigned n_;
  std::vector<Complex> amplitudes_;
};

/// Throws std::invalid_argument unless 1 <= n <= kMaxQubits.
void check_qubit_count(unsigned n);

/// sum |z_k|^2 for an arbitrary amplitude array.
double norm_squared(std::span<const Complex> amplitudes) noexcept;

PureState make_basis(unsigned n, std::uint64_t index);
PureState make_ghz(unsigned n);
PureState make_w(unsigned n);

/// Graph state: CZ along every edge of the chain (or ring) applied to |+>^n.
PureState make_cluster(unsigned n, Topology topology = Topology::chain);

/// Haar-random state from i.i.d. complex Gaussians, deterministic in (n, seed).
PureState make_random(unsigned n, RandomSeed seed);

/// Applies u to one qubit. Throws std::invalid_argument when u is not
/// unitary within 1e-12 or the qubit index is out of range.
PureState apply_single_qubit_unitary(const PureState& state, unsigned qubit,
                                     const Unitary2& u);

// QSV1 binary format: "QSV1", u32 n, u64 count, then count (re, im) float64
// pairs, all little-endian. Loading also accepts a text fixture with a
// header line "n=<n>" followed by "index,re,im" lines for nonzero entries.

/// Amplitude deviation tolerated when loading from disk.
inline constexpr double kLoadNormTolerance = 1e-9;

std::vector<std::uint8_t> encode_qsv1(const PureState& state);
PureState decode_state(std::span<const std::uint8_t> bytes);

void save_state(const PureState& state, const std::filesystem::path& path);
PureState load_state(const std::filesystem::path& path);

} // namespace entspec
