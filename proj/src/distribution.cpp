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

#include "entspec/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "entspec/error.hpp"
#include "entspec/purity.hpp"

namespace entspec {

SweepResult sweep(const PureState& state, const SweepOptions& options) {
  const unsigned n = state.qubits();
  if (n < 2) throw std::invalid_argument("sweep needs at least 2 qubits");
  if (n > options.max_qubits) {
    throw CapExceeded("sweep refused: n=" + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(options.max_qubits) + " qubits");
  }

  const auto parts = enumerate_balanced(n);
  std::vector<PurityRecord> values(parts.size());

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(parts.size()));

  // Each index is written by exactly one worker, so the result does not
  // depend on the schedule.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < parts.size(); i = next++) values[i] = purity(state, parts[i]);
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  SweepResult result{n, n / 2, {}};
  result.records.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    result.records.push_back({parts[i], values[i].purity, values[i].participation});
  }
  return result;
}

EmpiricalStats empirical_stats(const SweepResult& result) {
  if (result.records.empty()) throw std::invalid_argument("empirical stats of an empty sweep");
  const double count = static_cast<double>(result.count());

  EmpiricalStats s;
  s.count = result.count();
  s.min_participation = result.records.front().participation;
  s.max_participation = s.min_participation;
  double sum = 0.0, sum_purity = 0.0;
  for (const auto& r : result.records) {
    sum += r.participation;
    sum_purity += r.purity;
    s.min_participation = std::min(s.min_participation, r.participation);
    s.max_participation = std::max(s.max_participation, r.participation);
  }
  s.mean_participation = sum / count;
  s.mean_purity = sum_purity / count;

  double squares = 0.0;
  for (const auto& r : result.records) {
    const double d = r.participation - s.mean_participation;
    squares += d * d;
  }
  s.std_participation = std::sqrt(squares / count);
  return s;
}

AnalyticParams analytic_params(unsigned n) {
  if (n < 2 || n > 62) {
    throw std::invalid_argument("analytic parameters need 2 <= n <= 62, got " + std::to_string(n));
  }
  AnalyticParams p;
  p.n = n;
  p.dim = std::ldexp(1.0, static_cast<int>(n));
  p.dim_a = std::ldexp(1.0, static_cast<int>(n / 2));
  p.dim_b = std::ldexp(1.0, static_cast<int>((n + 1) / 2));
  p.alpha = n % 2 == 0 ? 8.0 / 2.0 : 9.0 / 2.0;
  p.mu_exact = (p.dim_a + p.dim_b - 1.0) / p.dim;
  p.mu_asymptotic = std::sqrt(p.alpha / p.dim);
  p.sigma_pi2 = 2.0 / (p.dim * p.dim);
  p.sigma_n = std::numbers::sqrt2 / p.alpha;
  return p;
}

double density(double x, const AnalyticParams& params, MuMode mode) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("density is defined for finite x > 0, got " + std::to_string(x));
  }
  const double u = 1.0 / x - params.mu(mode);
  const double norm = 1.0 / (x * x * std::sqrt(2.0 * std::numbers::pi * params.sigma_pi2));
  return norm * std::exp(-u * u / (2.0 * params.sigma_pi2));
}

std::vector<DensitySample> density_table(const AnalyticParams& params, std::size_t points,
                                         MuMode mode) {
  if (points < 1) throw std::invalid_argument("density table needs at least one point");
  const double step = (params.dim_a - 1.0) / static_cast<double>(points);
  std::vector<DensitySample> out;
  out.reserve(points);
  for (std::size_t i = 1; i <= points; ++i) {
    const double x = i == points ? params.dim_a : 1.0 + step * static_cast<double>(i);
    out.push_back({x, density(x, params, mode)});
  }
  return out;
}

std::vector<HistogramBin> histogram(const SweepResult& result, std::size_t bins,
                                    std::optional<HistogramRange> range) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  const HistogramRange r =
      range.value_or(HistogramRange{1.0, std::ldexp(1.0, static_cast<int>(result.size_a))});
  if (!(r.lower < r.upper) || !std::isfinite(r.lower) || !std::isfinite(r.upper)) {
    throw std::invalid_argument("degenerate histogram range [" + std::to_string(r.lower) + ", " +
                                std::to_string(r.upper) + "]");
  }

  const double width = (r.upper - r.lower) / static_cast<double>(bins);
  auto edge = [&](std::size_t i) {
    return i == bins ? r.upper : r.lower + width * static_cast<double>(i);
  };

  std::vector<HistogramBin> out(bins);
  for (std::size_t i = 0; i < bins; ++i) out[i] = {edge(i), edge(i + 1), 0};

  const auto last = static_cast<std::ptrdiff_t>(bins - 1);
  for (const auto& rec : result.records) {
    const double x = rec.participation;
    auto idx = static_cast<std::ptrdiff_t>(std::floor((x - r.lower) / width));
    idx = std::clamp<std::ptrdiff_t>(idx, 0, last);
    // Correct the floor for rounding so boundaries go to the upper bin.
    if (idx < last && x >= out[idx + 1].lower) ++idx;
    if (idx > 0 && x < out[idx].lower) --idx;
    ++out[idx].count;
  }
  return out;
}

std::size_t histogram_mode(const std::vector<HistogramBin>& bins) {
  if (bins.empty()) throw std::invalid_argument("mode of an empty histogram");
  return static_cast<std::size_t>(
      std::max_element(bins.begin(), bins.end(),
                       [](const HistogramBin& a, const HistogramBin& b) { return a.count < b.count; }) -
      bins.begin());
}

AnalyticComparison compare_to_analytic(const SweepResult& result, const AnalyticParams& params,
                                       std::size_t bins, MuMode mode) {
  if (result.count() < 2) throw std::invalid_argument("comparison needs at least two records");
  const EmpiricalStats stats = empirical_stats(result);
  const double center = 1.0 / params.mu(mode);

  AnalyticComparison cmp{};
  cmp.mean_gap = std::abs(stats.mean_participation - center) / center;
  cmp.std_gap = std::abs(stats.std_participation - params.sigma_n) / params.sigma_n;

  const double total = static_cast<double>(result.count());
  for (const auto& bin : histogram(result, bins)) {
    const double width = bin.upper - bin.lower;
    const double empirical = static_cast<double>(bin.count) / (total * width);
    const double model = density(0.5 * (bin.lower + bin.upper), params, mode);
    cmp.sup_gap = std::max(cmp.sup_gap, std::abs(empirical - model) * width);
  }
  return cmp;
}

} // namespace entspec
