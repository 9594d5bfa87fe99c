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

// Exercises libentspec strictly through its C header.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "entspec/entspec.h"

namespace {
constexpr double kH = 0.70710678118654752440;
}

TEST_CASE("version and limits") {
  CHECK(std::string(entspec_version()) == "1.0.0");
  CHECK(entspec_max_qubits() == 24);
  CHECK(entspec_default_sweep_max_qubits() == 16);
  CHECK(std::string(entspec_status_name(ENTSPEC_ERR_FORMAT)) == "format-error");
}

TEST_CASE("state handles") {
  entspec_state* ghz = nullptr;
  REQUIRE(entspec_state_ghz(3, &ghz) == ENTSPEC_OK);
  CHECK(entspec_state_qubits(ghz) == 3);
  CHECK(entspec_state_dimension(ghz) == 8);
  CHECK(entspec_state_norm(ghz) == doctest::Approx(1.0));

  std::vector<double> amps(16);
  REQUIRE(entspec_state_amplitudes(ghz, amps.data(), amps.size()) == ENTSPEC_OK);
  CHECK(amps[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(amps[14] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(entspec_state_amplitudes(ghz, amps.data(), 4) == ENTSPEC_ERR_BUFFER_TOO_SMALL);

  const double hadamard[8] = {kH, 0, kH, 0, kH, 0, -kH, 0};
  entspec_state* rotated = nullptr;
  REQUIRE(entspec_state_apply_unitary(ghz, 1, hadamard, &rotated) == ENTSPEC_OK);
  const double not_unitary[8] = {1, 0, 1, 0, 0, 0, 1, 0};
  entspec_state* bad = nullptr;
  CHECK(entspec_state_apply_unitary(ghz, 0, not_unitary, &bad) == ENTSPEC_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(entspec_last_error()).find("unitary") != std::string::npos);

  entspec_state_free(rotated);
  entspec_state_free(ghz);
  entspec_state_free(nullptr);
}

TEST_CASE("constructor errors map to status codes") {
  entspec_state* s = nullptr;
  CHECK(entspec_state_cluster(1, ENTSPEC_TOPOLOGY_CHAIN, &s) == ENTSPEC_ERR_INVALID_ARGUMENT);
  CHECK(entspec_state_cluster(2, ENTSPEC_TOPOLOGY_RING, &s) == ENTSPEC_ERR_INVALID_ARGUMENT);
  CHECK(entspec_state_w(0, &s) == ENTSPEC_ERR_INVALID_ARGUMENT);
  CHECK(entspec_state_ghz(25, &s) == ENTSPEC_ERR_INVALID_ARGUMENT);
  CHECK(entspec_state_ghz(3, nullptr) == ENTSPEC_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);

  const double unnormalized[4] = {1, 0, 1, 0};
  CHECK(entspec_state_from_amplitudes(1, unnormalized, 4, &s) == ENTSPEC_ERR_INVALID_ARGUMENT);
  const double plus[4] = {kH, 0, kH, 0};
  REQUIRE(entspec_state_from_amplitudes(1, plus, 4, &s) == ENTSPEC_OK);
  entspec_state_free(s);
}

TEST_CASE("save, load and file errors") {
  const std::string path = "entspec_capi_test.qsv";
  entspec_state* r = nullptr;
  REQUIRE(entspec_state_random(6, 42, &r) == ENTSPEC_OK);
  REQUIRE(entspec_state_save(r, path.c_str()) == ENTSPEC_OK);
  entspec_state* back = nullptr;
  REQUIRE(entspec_state_load(path.c_str(), &back) == ENTSPEC_OK);

  std::vector<double> a(128), b(128);
  entspec_state_amplitudes(r, a.data(), a.size());
  entspec_state_amplitudes(back, b.data(), b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);

  entspec_state* missing = nullptr;
  CHECK(entspec_state_load("/nonexistent/entspec.qsv", &missing) == ENTSPEC_ERR_IO);
  CHECK(entspec_state_save(r, "/nonexistent/dir/x.qsv") == ENTSPEC_ERR_IO);

  {
    FILE* f = std::fopen(path.c_str(), "wb");
    std::fputs("n=2\n0,0.1,0\n", f);
    std::fclose(f);
  }
  CHECK(entspec_state_load(path.c_str(), &missing) == ENTSPEC_ERR_FORMAT);
  CHECK(std::string(entspec_last_error()).find("normalization") != std::string::npos);

  std::remove(path.c_str());
  entspec_state_free(back);
  entspec_state_free(r);
}

TEST_CASE("bipartitions and purity") {
  uint64_t count = 0;
  REQUIRE(entspec_count_balanced(12, &count) == ENTSPEC_OK);
  CHECK(count == 924);
  CHECK(entspec_count_balanced(1, &count) == ENTSPEC_ERR_INVALID_ARGUMENT);

  std::vector<uint64_t> masks(10);
  size_t written = 0;
  REQUIRE(entspec_enumerate_balanced(5, masks.data(), masks.size(), &written) == ENTSPEC_OK);
  CHECK(written == 10);
  CHECK(masks.front() == 0b00011);
  CHECK(masks.back() == 0b11000);
  CHECK(entspec_enumerate_balanced(6, masks.data(), masks.size(), &written) ==
        ENTSPEC_ERR_BUFFER_TOO_SMALL);
  CHECK(written == 20);

  uint64_t a = 0, b = 0;
  REQUIRE(entspec_split_index(4, 0b0011, 13, &a, &b) == ENTSPEC_OK);
  CHECK(a == 1);
  CHECK(b == 3);
  CHECK(entspec_split_index(4, 0b0011, 16, &a, &b) == ENTSPEC_ERR_INVALID_ARGUMENT);

  entspec_state* w = nullptr;
  REQUIRE(entspec_state_w(5, &w) == ENTSPEC_OK);
  entspec_purity_record rec{};
  REQUIRE(entspec_purity(w, 0b00101, &rec) == ENTSPEC_OK);
  CHECK(rec.purity == doctest::Approx(13.0 / 25.0));
  CHECK(rec.participation == doctest::Approx(25.0 / 13.0));
  double quartic = 0;
  REQUIRE(entspec_purity_quartic(w, 0b00101, &quartic) == ENTSPEC_OK);
  CHECK(quartic == doctest::Approx(rec.purity).epsilon(1e-12));
  CHECK(entspec_purity(w, 0, &rec) == ENTSPEC_ERR_INVALID_ARGUMENT);
  double closed = 0;
  REQUIRE(entspec_w_participation(5, 2, &closed) == ENTSPEC_OK);
  CHECK(closed == doctest::Approx(rec.participation));
  entspec_state_free(w);

  entspec_state* big = nullptr;
  REQUIRE(entspec_state_ghz(13, &big) == ENTSPEC_OK);
  CHECK(entspec_purity_quartic(big, 0b111111, &quartic) == ENTSPEC_ERR_CAP_EXCEEDED);
  entspec_state_free(big);
}

TEST_CASE("sweep, stats, histogram, comparison") {
  entspec_state* c = nullptr;
  REQUIRE(entspec_state_cluster(12, ENTSPEC_TOPOLOGY_CHAIN, &c) == ENTSPEC_OK);
  entspec_sweep* s = nullptr;
  REQUIRE(entspec_sweep_run(c, 1, 0, &s) == ENTSPEC_OK);
  CHECK(entspec_sweep_qubits(s) == 12);
  CHECK(entspec_sweep_size(s) == 924);

  entspec_sweep_record rec{};
  REQUIRE(entspec_sweep_record_at(s, 0, &rec) == ENTSPEC_OK);
  CHECK(rec.mask == 0x3F);
  CHECK(entspec_sweep_record_at(s, 924, &rec) == ENTSPEC_ERR_INVALID_ARGUMENT);

  entspec_stats stats{};
  REQUIRE(entspec_sweep_stats(s, &stats) == ENTSPEC_OK);
  CHECK(stats.count == 924);
  CHECK(stats.mean_participation == doctest::Approx(23.156).epsilon(1e-4));
  CHECK(stats.max_participation == doctest::Approx(64));

  std::vector<entspec_bin> bins(40);
  REQUIRE(entspec_histogram(s, 40, nullptr, bins.data(), bins.size()) == ENTSPEC_OK);
  uint64_t total = 0;
  for (const auto& bin : bins) total += bin.count;
  CHECK(total == 924);
  const double range[2] = {2, 2};
  CHECK(entspec_histogram(s, 40, range, bins.data(), bins.size()) == ENTSPEC_ERR_INVALID_ARGUMENT);
  CHECK(entspec_histogram(s, 41, nullptr, bins.data(), bins.size()) == ENTSPEC_ERR_BUFFER_TOO_SMALL);

  entspec_comparison cmp{};
  REQUIRE(entspec_compare_to_analytic(s, ENTSPEC_MU_EXACT, &cmp) == ENTSPEC_OK);
  CHECK(cmp.mean_gap > 0.2);

  entspec_sweep* other = nullptr;
  REQUIRE(entspec_sweep_run(c, 4, 0, &other) == ENTSPEC_OK);
  entspec_buffer* csv1 = nullptr;
  entspec_buffer* csv2 = nullptr;
  REQUIRE(entspec_format_sweep_csv(s, &csv1) == ENTSPEC_OK);
  REQUIRE(entspec_format_sweep_csv(other, &csv2) == ENTSPEC_OK);
  CHECK(std::string(entspec_buffer_data(csv1)) == std::string(entspec_buffer_data(csv2)));

  entspec_sweep* parsed = nullptr;
  REQUIRE(entspec_sweep_parse_csv(entspec_buffer_data(csv1), entspec_buffer_size(csv1), &parsed) ==
          ENTSPEC_OK);
  CHECK(entspec_sweep_size(parsed) == 924);
  CHECK(entspec_sweep_parse_csv("junk", 4, &parsed) == ENTSPEC_ERR_FORMAT);

  entspec_buffer* json = nullptr;
  REQUIRE(entspec_format_stats_json(s, &json) == ENTSPEC_OK);
  CHECK(std::string(entspec_buffer_data(json)).find("\"sigma_N\"") != std::string::npos);

  entspec_buffer_free(json);
  entspec_buffer_free(csv1);
  entspec_buffer_free(csv2);
  entspec_sweep_free(parsed);
  entspec_sweep_free(other);
  entspec_sweep_free(s);

  entspec_sweep* refused = nullptr;
  CHECK(entspec_sweep_run(c, 1, 10, &refused) == ENTSPEC_ERR_CAP_EXCEEDED);
  CHECK(refused == nullptr);
  entspec_state_free(c);
}

TEST_CASE("analytic layer") {
  entspec_params p{};
  REQUIRE(entspec_analytic_params(12, &p) == ENTSPEC_OK);
  CHECK(p.alpha == 4.0);
  CHECK(p.mu_asymptotic == 0.03125);
  double d = 0;
  REQUIRE(entspec_density(1.0 / p.mu_exact, &p, ENTSPEC_MU_EXACT, &d) == ENTSPEC_OK);
  CHECK(d > 0);
  CHECK(entspec_density(0.0, &p, ENTSPEC_MU_EXACT, &d) == ENTSPEC_ERR_INVALID_ARGUMENT);

  entspec_buffer* csv = nullptr;
  REQUIRE(entspec_format_density_csv(12, 3, ENTSPEC_MU_ASYMPTOTIC, &csv) == ENTSPEC_OK);
  CHECK(std::string(entspec_buffer_data(csv)).starts_with("x,density\n22,"));
  entspec_buffer_free(csv);
}

TEST_CASE("table surface") {
  entspec_table_row published{};
  REQUIRE(entspec_table_published_row(7, &published) == ENTSPEC_OK);
  CHECK(published.w == 1.96);
  CHECK(entspec_table_published_row(13, &published) == ENTSPEC_ERR_INVALID_ARGUMENT);

  entspec_table_row row{};
  REQUIRE(entspec_table_compute_row(5, ENTSPEC_TOPOLOGY_CHAIN, 2, 1, 1, 0, &row) == ENTSPEC_OK);
  CHECK(row.cluster == doctest::Approx(3.6));
  CHECK(entspec_table_compute_row(5, ENTSPEC_TOPOLOGY_CHAIN, 0, 1, 1, 0, &row) ==
        ENTSPEC_ERR_INVALID_ARGUMENT);

  entspec_buffer* csv = nullptr;
  entspec_buffer* report = nullptr;
  REQUIRE(entspec_format_table(&row, 1, ENTSPEC_TOPOLOGY_CHAIN, &csv, &report) == ENTSPEC_OK);
  CHECK(std::string(entspec_buffer_data(csv)).starts_with("n,ghz,w,cluster,random\n5,"));
  CHECK(std::string(entspec_buffer_data(report)).find("chain") != std::string::npos);
  entspec_buffer_free(csv);
  entspec_buffer_free(report);
}
