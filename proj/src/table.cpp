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

#include "entspec/table.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "entspec/formats.hpp"

namespace entspec {
namespace {

constexpr std::array<TableRow, 8> kPublished{{
    {5, 2, 1.923, 3.6, 2.909},
    {6, 2, 2, 5.4, 4.267},
    {7, 2, 1.96, 6.171, 5.565},
    {8, 2, 2, 8.743, 8.258},
    {9, 2, 1.976, 10.349, 10.894},
    {10, 2, 2, 14.206, 16.254},
    {11, 2, 1.984, 17.176, 21.558},
    {12, 2, 2, 23.156, 32.252},
}};

double sweep_mean(const PureState& state, const SweepOptions& options) {
  return empirical_stats(sweep(state, options)).mean_participation;
}

} // namespace

std::span<const TableRow> published_table() { return kPublished; }

std::optional<TableRow> published_row(unsigned n) {
  for (const auto& row : kPublished) {
    if (row.n == n) return row;
  }
  return std::nullopt;
}

TableRow compute_table_row(unsigned n, const TableOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("table needs at least one random sample");
  if (options.topology == Topology::ring && n < 3) {
    throw std::invalid_argument("ring cluster state needs at least 3 qubits");
  }
  TableRow row{n, 0, 0, 0, 0};
  row.ghz = sweep_mean(make_ghz(n), options.sweep);
  row.w = sweep_mean(make_w(n), options.sweep);
  row.cluster = sweep_mean(make_cluster(n, options.topology), options.sweep);
  double sum = 0.0;
  for (unsigned i = 0; i < options.samples; ++i) {
    sum += sweep_mean(make_random(n, derive_seed(options.seed, i)), options.sweep);
  }
  row.random = sum / options.samples;
  return row;
}

std::string table_csv(std::span<const TableRow> rows) {
  std::string out = "n,ghz,w,cluster,random\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + format_double(r.ghz) + ',' + format_double(r.w) + ',' +
           format_double(r.cluster) + ',' + format_double(r.random) + '\n';
  }
  return out;
}

std::string table_report(std::span<const TableRow> rows, Topology topology) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "cluster topology: %s\n",
                topology == Topology::chain ? "chain" : "ring");
  out += line;
  std::snprintf(line, sizeof line, "%3s | %-28s | %-28s | %-28s | %-28s\n", "n", "ghz", "w",
                "cluster", "random");
  out += line;
  out += std::string(3 + 4 * 31, '-') + '\n';

  auto cell = [](double value, std::optional<double> reference) {
    char buf[64];
    if (!reference) {
      std::snprintf(buf, sizeof buf, "%9.4f vs %7s %7s", value, "-", "");
    } else {
      const double rel = (value - *reference) / *reference;
      std::snprintf(buf, sizeof buf, "%9.4f vs %7.3f %+6.2f%%", value, *reference, 100.0 * rel);
    }
    return std::string(buf);
  };

  for (const auto& r : rows) {
    const auto ref = published_row(r.n);
    auto pick = [&](double TableRow::*field) {
      return ref ? std::optional<double>((*ref).*field) : std::nullopt;
    };
    std::snprintf(line, sizeof line, "%3u | %-28s | %-28s | %-28s | %-28s\n", r.n,
                  cell(r.ghz, pick(&TableRow::ghz)).c_str(), cell(r.w, pick(&TableRow::w)).c_str(),
                  cell(r.cluster, pick(&TableRow::cluster)).c_str(),
                  cell(r.random, pick(&TableRow::random)).c_str());
    out += line;
  }
  return out;
}

} // namespace entspec
