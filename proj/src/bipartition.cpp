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

#include "entspec/bipartition.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "entspec/state.hpp"

namespace entspec {

Bipartition::Bipartition(unsigned n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("bipartition needs 2 <= n <= " + std::to_string(kMaxQubits) +
                                ", got " + std::to_string(n));
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (mask == 0 || mask >= full) {
    throw std::invalid_argument("mask must select a proper nonempty subset of " +
                                std::to_string(n) + " qubits");
  }
}

std::uint64_t Bipartition::complement_mask() const noexcept {
  return ~mask_ & ((std::uint64_t{1} << n_) - 1);
}

unsigned Bipartition::size_a() const noexcept {
  return static_cast<unsigned>(std::popcount(mask_));
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (unsigned i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::uint64_t count_balanced(unsigned n) { return binomial(n, n / 2); }

std::uint64_t next_same_weight(std::uint64_t x) noexcept {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  if (ripple == 0) return 0;
  const std::uint64_t ones = ((ripple ^ x) >> 2) / lowest;
  return ripple | ones;
}

std::vector<Bipartition> enumerate_balanced(unsigned n) {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("balanced bipartitions need 2 <= n <= " +
                                std::to_string(kMaxQubits) + ", got " + std::to_string(n));
  }
  const unsigned weight = n / 2;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<Bipartition> out;
  out.reserve(count_balanced(n));
  for (std::uint64_t m = (std::uint64_t{1} << weight) - 1; m < limit; m = next_same_weight(m)) {
    out.emplace_back(n, m);
  }
  return out;
}

std::uint64_t extract_bits(std::uint64_t x, std::uint64_t mask) noexcept {
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint64_t low = mask & (~mask + 1);
    if (x & low) out |= bit;
    mask ^= low;
  }
  return out;
}

std::uint64_t deposit_bits(std::uint64_t x, std::uint64_t mask) noexcept {
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint64_t low = mask & (~mask + 1);
    if (x & bit) out |= low;
    mask ^= low;
  }
  return out;
}

SplitIndex split_index(std::uint64_t k, const Bipartition& part) {
  if (k >= (std::uint64_t{1} << part.qubits())) {
    throw std::invalid_argument("basis index " + std::to_string(k) + " out of range for " +
                                std::to_string(part.qubits()) + " qubits");
  }
  return {extract_bits(k, part.mask()), extract_bits(k, part.complement_mask())};
}

std::uint64_t join_index(SplitIndex ab, const Bipartition& part) {
  if (ab.a >= part.dim_a() || ab.b >= part.dim_b()) {
    throw std::invalid_argument("subsystem index out of range");
  }
  return deposit_bits(ab.a, part.mask()) | deposit_bits(ab.b, part.complement_mask());
}

Bipartition complement(const Bipartition& part) {
  return Bipartition(part.qubits(), part.complement_mask());
}

std::string mask_hex(const Bipartition& part) {
  const int digits = static_cast<int>((part.qubits() + 3) / 4);
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%0*llX", digits,
                static_cast<unsigned long long>(part.mask()));
  return buf;
}

} // namespace entspec
