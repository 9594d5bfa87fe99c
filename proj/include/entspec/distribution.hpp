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

#include <cstddef>
#include <optional>
#include <vector>

#include "entspec/bipartition.hpp"
#include "entspec/state.hpp"

namespace entspec {

struct SweepRecord {
  Bipartition part;
  double purity;
  double participation;
};

/// One record per balanced bipartition, ascending by mask.
struct SweepResult {
  unsigned n = 0;
  unsigned size_a = 0;
  std::vector<SweepRecord> records;

  std::size_t count() const noexcept { return records.size(); }
};

/// Sweeps are O(binomial(n, n/2) * 2^(3n/2)); beyond 16 qubits they take hours.
inline constexpr unsigned kDefaultSweepMaxQubits = 16;

struct SweepOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  unsigned max_qubits = kDefaultSweepMaxQubits;
};

/// Evaluates purity() on every balanced mask. Output is bit-identical for
/// every thread count. Throws CapExceeded above options.max_qubits and
/// std::invalid_argument for n < 2.
SweepResult sweep(const PureState& state, const SweepOptions& options = {});

struct EmpiricalStats {
  std::size_t count = 0;           // n_p
  double mean_participation = 0;   // <N_AB>
  double std_participation = 0;    // population convention
  double mean_purity = 0;
  double min_participation = 0;
  double max_participation = 0;
};

EmpiricalStats empirical_stats(const SweepResult& result);

enum class MuMode { exact, asymptotic };

/// Large-N typical-state parameters for balanced bipartitions of n qubits.
struct AnalyticParams {
  unsigned n = 0;
  double dim = 0;    // N = 2^n
  double dim_a = 0;  // N_A
  double dim_b = 0;  // N_B
  double alpha = 0;  // 4 for even n, 9/2 for odd n
  double mu_exact = 0;       // (N_A + N_B - 1) / N
  double mu_asymptotic = 0;  // sqrt(alpha / N)
  double sigma_pi2 = 0;      // variance of the purity, 2 / N^2
  double sigma_n = 0;        // width of N_AB, sqrt(2) / alpha

  double mu(MuMode mode) const noexcept {
    return mode == MuMode::exact ? mu_exact : mu_asymptotic;
  }
};

AnalyticParams analytic_params(unsigned n);

/// p(x) = exp(-(1/x - mu)^2 / (2 sigma_pi2)) / (x^2 sqrt(2 pi sigma_pi2)).
/// Throws std::invalid_argument for x <= 0.
double density(double x, const AnalyticParams& params,
               MuMode mode = MuMode::exact);

struct DensitySample {
  double x;
  double density;
};

/// `points` equally spaced x over (1, 2^{n_A}], i.e. excluding x = 1.
std::vector<DensitySample> density_table(const AnalyticParams& params,
                                         std::size_t points,
                                         MuMode mode = MuMode::exact);

struct HistogramRange {
  double lower;
  double upper;
};

struct HistogramBin {
  double lower;
  double upper;
  std::size_t count;
};

inline constexpr std::size_t kDefaultHistogramBins = 40;

/// Equal-width bins over `range`, default (1, 2^{n_A}). A value on an inner
/// boundary goes to the upper bin; the last bin is closed. Values outside
/// the range are counted in the nearest edge bin so counts sum to n_p.
std::vector<HistogramBin> histogram(const SweepResult& result,
                                    std::size_t bins = kDefaultHistogramBins,
                                    std::optional<HistogramRange> range = {});

/// Index of the first bin holding the largest count.
std::size_t histogram_mode(const std::vector<HistogramBin>& bins);

struct AnalyticComparison {
  double mean_gap;  // |<N_AB> - 1/mu| / (1/mu)
  double std_gap;   // |sigma_emp - sigma_N| / sigma_N
  double sup_gap;   // max_bin |count/(n_p w) - p(center)| * w
};

/// Diagnostics only; uses the default histogram over `bins` bins.
AnalyticComparison compare_to_analytic(const SweepResult& result,
                                       const AnalyticParams& params,
                                       std::size_t bins = kDefaultHistogramBins,
                                       MuMode mode = MuMode::exact);

} // namespace entspec
