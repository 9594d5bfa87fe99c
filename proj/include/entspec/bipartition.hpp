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
#include <string>
#include <vector>

namespace entspec {

/// Split of n qubits into subsystems A (set bits of the mask) and B.
/// Requires 0 < mask < 2^n, so both sides are nonempty.
class Bipartition {
public:
  Bipartition(unsigned n, std::uint64_t mask);

  unsigned qubits() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::uint64_t complement_mask() const noexcept;

  unsigned size_a() const noexcept;
  unsigned size_b() const noexcept { return n_ - size_a(); }
  std::uint64_t dim_a() const noexcept { return std::uint64_t{1} << size_a(); }
  std::uint64_t dim_b() const noexcept { return std::uint64_t{1} << size_b(); }

  /// n_A == floor(n / 2).
  bool balanced() const noexcept { return size_a() == n_ / 2; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
  unsigned n_;
  std::uint64_t mask_;
};

std::uint64_t binomial(unsigned n, unsigned k);

/// binomial(n, floor(n/2)).
std::uint64_t count_balanced(unsigned n);

/// All masks of weight floor(n/2), strictly ascending. For even n a mask
/// and its complement both appear. Throws std::invalid_argument for n < 2.
std::vector<Bipartition> enumerate_balanced(unsigned n);

/// Next larger integer with the same popcount (Gosper's hack). Returns 0
/// when the successor does not fit in 64 bits.
std::uint64_t next_same_weight(std::uint64_t x) noexcept;

/// Gathers the bits of x selected by mask into the low bits, lowest first.
std::uint64_t extract_bits(std::uint64_t x, std::uint64_t mask) noexcept;

/// Inverse of extract_bits: scatters the low bits of x onto mask positions.
std::uint64_t deposit_bits(std::uint64_t x, std::uint64_t mask) noexcept;

struct SplitIndex {
  std::uint64_t a;  // j_A, index inside subsystem A
  std::uint64_t b;  // l_B, index inside subsystem B
  friend bool operator==(const SplitIndex&, const SplitIndex&) = default;
};

/// Basis label k -> (j_A, l_B). Throws std::invalid_argument if k >= 2^n.
SplitIndex split_index(std::uint64_t k, const Bipartition& part);

/// (j_A, l_B) -> k, the inverse of split_index.
std::uint64_t join_index(SplitIndex ab, const Bipartition& part);

/// The B side as its own bipartition, with population n_B.
Bipartition complement(const Bipartition& part);

/// "0x" followed by ceil(n/4) zero-padded uppercase hex digits, e.g. 0x0F3.
std::string mask_hex(const Bipartition& part);

} // namespace entspec
