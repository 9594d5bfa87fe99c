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

#include "entspec/formats.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "entspec/error.hpp"

namespace entspec {
namespace {

constexpr std::string_view kSweepHeader = "mask_hex,n_A,purity,participation";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    const std::size_t comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no, int base = 10) {
  T value{};
  std::from_chars_result res;
  if constexpr (std::is_floating_point_v<T>) {
    res = std::from_chars(field.data(), field.data() + field.size(), value);
  } else {
    res = std::from_chars(field.data(), field.data() + field.size(), value, base);
  }
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size() || field.empty()) {
    throw FormatError("sweep CSV line " + std::to_string(line_no) + ": cannot parse '" +
                      std::string(field) + "'");
  }
  return value;
}

} // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& r : result.records) {
    out += mask_hex(r.part);
    out += ',';
    out += std::to_string(r.part.size_a());
    out += ',';
    out += format_double(r.purity);
    out += ',';
    out += format_double(r.participation);
    out += '\n';
  }
  return out;
}

SweepResult parse_sweep_csv(std::string_view text) {
  struct Row {
    std::uint64_t mask;
    unsigned size_a;
    double purity;
    double participation;
  };
  std::vector<Row> rows;
  std::size_t line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!have_header) {
      if (line != kSweepHeader) {
        throw FormatError("sweep CSV: expected header '" + std::string(kSweepHeader) + "'");
      }
      have_header = true;
      continue;
    }
    const auto f = split_fields(line);
    if (f.size() != 4) {
      throw FormatError("sweep CSV line " + std::to_string(line_no) + ": expected 4 fields");
    }
    std::string_view hex = f[0];
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    rows.push_back({parse_field<std::uint64_t>(hex, line_no, 16),
                    parse_field<unsigned>(f[1], line_no), parse_field<double>(f[2], line_no),
                    parse_field<double>(f[3], line_no)});
  }
  if (!have_header) throw FormatError("sweep CSV: missing header");
  if (rows.empty()) throw FormatError("sweep CSV: no records");

  const unsigned a = rows.front().size_a;
  unsigned n = 0;
  if (a >= 1 && rows.size() == binomial(2 * a, a)) {
    n = 2 * a;
  } else if (a >= 1 && rows.size() == binomial(2 * a + 1, a)) {
    n = 2 * a + 1;
  } else {
    throw FormatError("sweep CSV: " + std::to_string(rows.size()) +
                      " records is not a full balanced sweep with n_A=" + std::to_string(a));
  }

  SweepResult result{n, a, {}};
  result.records.reserve(rows.size());
  std::uint64_t previous = 0;
  for (const Row& row : rows) {
    if (row.size_a != a || static_cast<unsigned>(std::popcount(row.mask)) != a ||
        row.mask >= (std::uint64_t{1} << n)) {
      throw FormatError("sweep CSV: mask " + std::to_string(row.mask) +
                        " is not a balanced bipartition of " + std::to_string(n) + " qubits");
    }
    if (row.mask <= previous) throw FormatError("sweep CSV: masks are not strictly ascending");
    if (!(row.purity > 0.0 && row.purity <= 1.0 + 1e-9)) {
      throw FormatError("sweep CSV: purity outside (0, 1]");
    }
    previous = row.mask;
    result.records.push_back({Bipartition(n, row.mask), row.purity, row.participation});
  }
  return result;
}

std::string stats_json(const EmpiricalStats& stats, const AnalyticParams& params) {
  nlohmann::ordered_json j;
  j["n"] = params.n;
  j["n_p"] = stats.count;
  j["mean_participation"] = stats.mean_participation;
  j["std_participation"] = stats.std_participation;
  j["mean_purity"] = stats.mean_purity;
  j["min"] = stats.min_participation;
  j["max"] = stats.max_participation;
  j["alpha"] = params.alpha;
  j["mu_exact"] = params.mu_exact;
  j["mu_asymptotic"] = params.mu_asymptotic;
  j["sigma_pi2"] = params.sigma_pi2;
  j["sigma_N"] = params.sigma_n;
  return j.dump(2) + "\n";
}

std::string histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_lower,bin_upper,count\n";
  for (const auto& b : bins) {
    out += format_double(b.lower) + ',' + format_double(b.upper) + ',' +
           std::to_string(b.count) + '\n';
  }
  return out;
}

std::string density_csv(std::span<const DensitySample> samples) {
  std::string out = "x,density\n";
  for (const auto& s : samples) out += format_double(s.x) + ',' + format_double(s.density) + '\n';
  return out;
}

} // namespace entspec
