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

#include <span>
#include <string>
#include <string_view>

#include "entspec/distribution.hpp"

namespace entspec {

/// %.17g, enough to round-trip a double.
std::string format_double(double value);

/// Header `mask_hex,n_A,purity,participation`, rows ascending by mask.
std::string sweep_csv(const SweepResult& result);

/// Parses sweep_csv output. The qubit count is recovered from n_A and the
/// row count (binomial(2a, a) for even n, binomial(2a+1, a) for odd n).
/// Throws FormatError.
SweepResult parse_sweep_csv(std::string_view text);

/// Object with keys n, n_p, mean_participation, std_participation,
/// mean_purity, min, max, alpha, mu_exact, mu_asymptotic, sigma_pi2, sigma_N.
std::string stats_json(const EmpiricalStats& stats, const AnalyticParams& params);

std::string histogram_csv(std::span<const HistogramBin> bins);

std::string density_csv(std::span<const DensitySample> samples);

} // namespace entspec
