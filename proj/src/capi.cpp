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

// extern "C" surface of libentspec. Exceptions never cross this boundary.

#include "entspec/entspec.h"

#include <cmath>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "entspec/bipartition.hpp"
#include "entspec/distribution.hpp"
#include "entspec/error.hpp"
#include "entspec/formats.hpp"
#include "entspec/purity.hpp"
#include "entspec/state.hpp"
#include "entspec/table.hpp"

struct entspec_state {
  entspec::PureState value;
};

struct entspec_sweep {
  entspec::SweepResult value;
};

struct entspec_buffer {
  std::string value;
};

namespace {

thread_local std::string g_last_error;

entspec_status fail(entspec_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
entspec_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return ENTSPEC_OK;
  } catch (const entspec::FormatError& e) {
    return fail(ENTSPEC_ERR_FORMAT, e.what());
  } catch (const entspec::IoError& e) {
    return fail(ENTSPEC_ERR_IO, e.what());
  } catch (const entspec::CapExceeded& e) {
    return fail(ENTSPEC_ERR_CAP_EXCEEDED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ENTSPEC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ENTSPEC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ENTSPEC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ENTSPEC_ERR_INTERNAL, "unknown error");
  }
}

#define ENTSPEC_REQUIRE(ptr)                                                   \
  do {                                                                         \
    if ((ptr) == nullptr) {                                                    \
      return fail(ENTSPEC_ERR_INVALID_ARGUMENT, "null pointer: " #ptr);        \
    }                                                                          \
  } while (0)

entspec::Topology to_topology(entspec_topology t) {
  switch (t) {
    case ENTSPEC_TOPOLOGY_CHAIN: return entspec::Topology::chain;
    case ENTSPEC_TOPOLOGY_RING: return entspec::Topology::ring;
  }
  throw std::invalid_argument("unknown topology");
}

entspec::MuMode to_mode(entspec_mu_mode m) {
  switch (m) {
    case ENTSPEC_MU_EXACT: return entspec::MuMode::exact;
    case ENTSPEC_MU_ASYMPTOTIC: return entspec::MuMode::asymptotic;
  }
  throw std::invalid_argument("unknown mu mode");
}

entspec::SweepOptions sweep_options(uint32_t threads, uint32_t max_qubits) {
  entspec::SweepOptions options;
  options.threads = threads;
  if (max_qubits != 0) options.max_qubits = max_qubits;
  return options;
}

std::optional<entspec::HistogramRange> to_range(const double* range) {
  if (range == nullptr) return std::nullopt;
  return entspec::HistogramRange{range[0], range[1]};
}

entspec_params to_c(const entspec::AnalyticParams& p) {
  return {p.n, p.dim, p.dim_a, p.dim_b, p.alpha, p.mu_exact, p.mu_asymptotic, p.sigma_pi2,
          p.sigma_n};
}

entspec::AnalyticParams from_c(const entspec_params& p) {
  entspec::AnalyticParams out;
  out.n = p.n;
  out.dim = p.dim;
  out.dim_a = p.dim_a;
  out.dim_b = p.dim_b;
  out.alpha = p.alpha;
  out.mu_exact = p.mu_exact;
  out.mu_asymptotic = p.mu_asymptotic;
  out.sigma_pi2 = p.sigma_pi2;
  out.sigma_n = p.sigma_n;
  return out;
}

entspec_table_row to_c(const entspec::TableRow& r) { return {r.n, r.ghz, r.w, r.cluster, r.random}; }

template <typename Make>
entspec_status make_state(entspec_state** out, Make&& make) {
  ENTSPEC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new entspec_state{make()}; });
}

entspec_status make_buffer(entspec_buffer** out, std::string text) {
  *out = new entspec_buffer{std::move(text)};
  return ENTSPEC_OK;
}

} // namespace

extern "C" {

const char* entspec_version(void) { return "1.0.0"; }

const char* entspec_last_error(void) { return g_last_error.c_str(); }

const char* entspec_status_name(entspec_status status) {
  switch (status) {
    case ENTSPEC_OK: return "ok";
    case ENTSPEC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case ENTSPEC_ERR_FORMAT: return "format-error";
    case ENTSPEC_ERR_IO: return "io-error";
    case ENTSPEC_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case ENTSPEC_ERR_BUFFER_TOO_SMALL: return "buffer-too-small";
    case ENTSPEC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

uint32_t entspec_max_qubits(void) { return entspec::kMaxQubits; }
uint32_t entspec_default_sweep_max_qubits(void) { return entspec::kDefaultSweepMaxQubits; }

entspec_status entspec_state_ghz(uint32_t n, entspec_state** out) {
  return make_state(out, [&] { return entspec::make_ghz(n); });
}

entspec_status entspec_state_w(uint32_t n, entspec_state** out) {
  return make_state(out, [&] { return entspec::make_w(n); });
}

entspec_status entspec_state_cluster(uint32_t n, entspec_topology topology, entspec_state** out) {
  return make_state(out, [&] { return entspec::make_cluster(n, to_topology(topology)); });
}

entspec_status entspec_state_random(uint32_t n, uint64_t seed, entspec_state** out) {
  return make_state(out, [&] { return entspec::make_random(n, entspec::RandomSeed{seed}); });
}

entspec_status entspec_state_basis(uint32_t n, uint64_t index, entspec_state** out) {
  return make_state(out, [&] { return entspec::make_basis(n, index); });
}

entspec_status entspec_state_from_amplitudes(uint32_t n, const double* interleaved, size_t count,
                                             entspec_state** out) {
  ENTSPEC_REQUIRE(interleaved);
  return make_state(out, [&] {
    if (count % 2 != 0) throw std::invalid_argument("interleaved array needs an even length");
    std::vector<entspec::Complex> z(count / 2);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = {interleaved[2 * k], interleaved[2 * k + 1]};
    return entspec::PureState(n, std::move(z));
  });
}

entspec_status entspec_state_apply_unitary(const entspec_state* state, uint32_t qubit,
                                           const double u[8], entspec_state** out) {
  ENTSPEC_REQUIRE(state);
  ENTSPEC_REQUIRE(u);
  return make_state(out, [&] {
    const entspec::Unitary2 m{{{u[0], u[1]}, {u[2], u[3]}, {u[4], u[5]}, {u[6], u[7]}}};
    return entspec::apply_single_qubit_unitary(state->value, qubit, m);
  });
}

entspec_status entspec_state_load(const char* path, entspec_state** out) {
  ENTSPEC_REQUIRE(path);
  return make_state(out, [&] { return entspec::load_state(path); });
}

entspec_status entspec_state_save(const entspec_state* state, const char* path) {
  ENTSPEC_REQUIRE(state);
  ENTSPEC_REQUIRE(path);
  return guarded([&] { entspec::save_state(state->value, path); });
}

void entspec_state_free(entspec_state* state) { delete state; }

uint32_t entspec_state_qubits(const entspec_state* state) {
  return state ? state->value.qubits() : 0;
}

uint64_t entspec_state_dimension(const entspec_state* state) {
  return state ? state->value.dimension() : 0;
}

double entspec_state_norm(const entspec_state* state) {
  return state ? std::sqrt(state->value.norm_squared()) : 0.0;
}

entspec_status entspec_state_amplitudes(const entspec_state* state, double* interleaved,
                                        size_t capacity) {
  ENTSPEC_REQUIRE(state);
  ENTSPEC_REQUIRE(interleaved);
  const auto z = state->value.amplitudes();
  if (capacity < 2 * z.size()) {
    return fail(ENTSPEC_ERR_BUFFER_TOO_SMALL,
                "need " + std::to_string(2 * z.size()) + " doubles for the amplitudes");
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    interleaved[2 * k] = z[k].real();
    interleaved[2 * k + 1] = z[k].imag();
  }
  return ENTSPEC_OK;
}

uint64_t entspec_derive_seed(uint64_t base, uint64_t index) {
  return entspec::derive_seed(entspec::RandomSeed{base}, index).value;
}

entspec_status entspec_count_balanced(uint32_t n, uint64_t* out) {
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    if (n < 2 || n > entspec::kMaxQubits) throw std::invalid_argument("n out of range");
    *out = entspec::count_balanced(n);
  });
}

entspec_status entspec_enumerate_balanced(uint32_t n, uint64_t* masks, size_t capacity,
                                          size_t* written) {
  ENTSPEC_REQUIRE(written);
  std::vector<entspec::Bipartition> parts;
  const entspec_status status = guarded([&] { parts = entspec::enumerate_balanced(n); });
  if (status != ENTSPEC_OK) return status;
  *written = parts.size();
  if (capacity < parts.size() || masks == nullptr) {
    return fail(ENTSPEC_ERR_BUFFER_TOO_SMALL,
                "need room for " + std::to_string(parts.size()) + " masks");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) masks[i] = parts[i].mask();
  return ENTSPEC_OK;
}

entspec_status entspec_split_index(uint32_t n, uint64_t mask, uint64_t k, uint64_t* a,
                                   uint64_t* b) {
  ENTSPEC_REQUIRE(a);
  ENTSPEC_REQUIRE(b);
  return guarded([&] {
    const auto ab = entspec::split_index(k, entspec::Bipartition(n, mask));
    *a = ab.a;
    *b = ab.b;
  });
}

entspec_status entspec_purity(const entspec_state* state, uint64_t mask,
                              entspec_purity_record* out) {
  ENTSPEC_REQUIRE(state);
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    const auto r = entspec::purity(state->value, entspec::Bipartition(state->value.qubits(), mask));
    *out = {r.purity, r.participation, r.entangled_qubits};
  });
}

entspec_status entspec_purity_quartic(const entspec_state* state, uint64_t mask, double* out) {
  ENTSPEC_REQUIRE(state);
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    *out = entspec::purity_quartic_oracle(state->value,
                                          entspec::Bipartition(state->value.qubits(), mask));
  });
}

entspec_status entspec_w_participation(uint32_t n, uint32_t size_a, double* out) {
  ENTSPEC_REQUIRE(out);
  return guarded([&] { *out = entspec::w_participation_closed_form(n, size_a); });
}

entspec_status entspec_sweep_run(const entspec_state* state, uint32_t threads, uint32_t max_qubits,
                                 entspec_sweep** out) {
  ENTSPEC_REQUIRE(state);
  ENTSPEC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new entspec_sweep{entspec::sweep(state->value, sweep_options(threads, max_qubits))};
  });
}

entspec_status entspec_sweep_parse_csv(const char* text, size_t length, entspec_sweep** out) {
  ENTSPEC_REQUIRE(text);
  ENTSPEC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new entspec_sweep{entspec::parse_sweep_csv(std::string_view(text, length))};
  });
}

void entspec_sweep_free(entspec_sweep* sweep) { delete sweep; }

uint32_t entspec_sweep_qubits(const entspec_sweep* sweep) { return sweep ? sweep->value.n : 0; }

uint64_t entspec_sweep_size(const entspec_sweep* sweep) {
  return sweep ? sweep->value.count() : 0;
}

entspec_status entspec_sweep_record_at(const entspec_sweep* sweep, uint64_t index,
                                       entspec_sweep_record* out) {
  ENTSPEC_REQUIRE(sweep);
  ENTSPEC_REQUIRE(out);
  if (index >= sweep->value.count()) {
    return fail(ENTSPEC_ERR_INVALID_ARGUMENT, "record index out of range");
  }
  const auto& r = sweep->value.records[index];
  *out = {r.part.mask(), r.purity, r.participation};
  return ENTSPEC_OK;
}

entspec_status entspec_sweep_stats(const entspec_sweep* sweep, entspec_stats* out) {
  ENTSPEC_REQUIRE(sweep);
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    const auto s = entspec::empirical_stats(sweep->value);
    *out = {s.count, s.mean_participation, s.std_participation, s.mean_purity,
            s.min_participation, s.max_participation};
  });
}

entspec_status entspec_analytic_params(uint32_t n, entspec_params* out) {
  ENTSPEC_REQUIRE(out);
  return guarded([&] { *out = to_c(entspec::analytic_params(n)); });
}

entspec_status entspec_density(double x, const entspec_params* params, entspec_mu_mode mode,
                               double* out) {
  ENTSPEC_REQUIRE(params);
  ENTSPEC_REQUIRE(out);
  return guarded([&] { *out = entspec::density(x, from_c(*params), to_mode(mode)); });
}

entspec_status entspec_histogram(const entspec_sweep* sweep, size_t bins, const double* range,
                                 entspec_bin* out, size_t capacity) {
  ENTSPEC_REQUIRE(sweep);
  ENTSPEC_REQUIRE(out);
  if (capacity < bins) return fail(ENTSPEC_ERR_BUFFER_TOO_SMALL, "output holds fewer than `bins` bins");
  return guarded([&] {
    const auto h = entspec::histogram(sweep->value, bins, to_range(range));
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = {h[i].lower, h[i].upper, h[i].count};
  });
}

entspec_status entspec_compare_to_analytic(const entspec_sweep* sweep, entspec_mu_mode mode,
                                           entspec_comparison* out) {
  ENTSPEC_REQUIRE(sweep);
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    const auto c = entspec::compare_to_analytic(sweep->value, entspec::analytic_params(sweep->value.n),
                                                entspec::kDefaultHistogramBins, to_mode(mode));
    *out = {c.mean_gap, c.std_gap, c.sup_gap};
  });
}

entspec_status entspec_table_compute_row(uint32_t n, entspec_topology topology, uint32_t samples,
                                         uint64_t seed, uint32_t threads, uint32_t max_qubits,
                                         entspec_table_row* out) {
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    entspec::TableOptions options;
    options.topology = to_topology(topology);
    options.samples = samples;
    options.seed = entspec::RandomSeed{seed};
    options.sweep = sweep_options(threads, max_qubits);
    *out = to_c(entspec::compute_table_row(n, options));
  });
}

entspec_status entspec_table_published_row(uint32_t n, entspec_table_row* out) {
  ENTSPEC_REQUIRE(out);
  const auto row = entspec::published_row(n);
  if (!row) return fail(ENTSPEC_ERR_INVALID_ARGUMENT, "no published row for n=" + std::to_string(n));
  *out = to_c(*row);
  return ENTSPEC_OK;
}

entspec_status entspec_format_sweep_csv(const entspec_sweep* sweep, entspec_buffer** out) {
  ENTSPEC_REQUIRE(sweep);
  ENTSPEC_REQUIRE(out);
  return guarded([&] { make_buffer(out, entspec::sweep_csv(sweep->value)); });
}

entspec_status entspec_format_stats_json(const entspec_sweep* sweep, entspec_buffer** out) {
  ENTSPEC_REQUIRE(sweep);
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    make_buffer(out, entspec::stats_json(entspec::empirical_stats(sweep->value),
                                         entspec::analytic_params(sweep->value.n)));
  });
}

entspec_status entspec_format_histogram_csv(const entspec_sweep* sweep, size_t bins,
                                            const double* range, entspec_buffer** out) {
  ENTSPEC_REQUIRE(sweep);
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    make_buffer(out, entspec::histogram_csv(entspec::histogram(sweep->value, bins, to_range(range))));
  });
}

entspec_status entspec_format_density_csv(uint32_t n, size_t points, entspec_mu_mode mode,
                                          entspec_buffer** out) {
  ENTSPEC_REQUIRE(out);
  return guarded([&] {
    make_buffer(out, entspec::density_csv(
                         entspec::density_table(entspec::analytic_params(n), points, to_mode(mode))));
  });
}

entspec_status entspec_format_table(const entspec_table_row* rows, size_t count,
                                    entspec_topology topology, entspec_buffer** csv,
                                    entspec_buffer** report) {
  ENTSPEC_REQUIRE(rows);
  return guarded([&] {
    std::vector<entspec::TableRow> table;
    for (std::size_t i = 0; i < count; ++i) {
      table.push_back({rows[i].n, rows[i].ghz, rows[i].w, rows[i].cluster, rows[i].random});
    }
    std::string csv_text = csv ? entspec::table_csv(table) : std::string();
    std::string report_text = report ? entspec::table_report(table, to_topology(topology)) : std::string();
    if (csv) make_buffer(csv, std::move(csv_text));
    if (report) make_buffer(report, std::move(report_text));
  });
}

const char* entspec_buffer_data(const entspec_buffer* buffer) {
  return buffer ? buffer->value.c_str() : "";
}

size_t entspec_buffer_size(const entspec_buffer* buffer) { return buffer ? buffer->value.size() : 0; }

void entspec_buffer_free(entspec_buffer* buffer) { delete buffer; }

} // extern "C"
