/*
 * Copyright 2026 The entspec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libentspec: balanced-bipartition purity sweeps of n-qubit
 * pure states.
 *
 * Every fallible call returns an entspec_status. On failure a message is
 * stored per thread and can be read with entspec_last_error() until the
 * next failing call on that thread. Handles are opaque, immutable once
 * created, and must be released with the matching *_free function.
 */

#ifndef ENTSPEC_ENTSPEC_H
#define ENTSPEC_ENTSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ENTSPEC_BUILDING_LIBRARY)
#    define ENTSPEC_API __declspec(dllexport)
#  else
#    define ENTSPEC_API __declspec(dllimport)
#  endif
#else
#  define ENTSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entspec_status {
  ENTSPEC_OK = 0,
  ENTSPEC_ERR_INVALID_ARGUMENT = 1,
  ENTSPEC_ERR_FORMAT = 2,
  ENTSPEC_ERR_IO = 3,
  ENTSPEC_ERR_CAP_EXCEEDED = 4,
  ENTSPEC_ERR_BUFFER_TOO_SMALL = 5,
  ENTSPEC_ERR_INTERNAL = 6
} entspec_status;

typedef enum entspec_topology {
  ENTSPEC_TOPOLOGY_CHAIN = 0,
  ENTSPEC_TOPOLOGY_RING = 1
} entspec_topology;

typedef enum entspec_mu_mode {
  ENTSPEC_MU_EXACT = 0,
  ENTSPEC_MU_ASYMPTOTIC = 1
} entspec_mu_mode;

typedef struct entspec_state entspec_state;
typedef struct entspec_sweep entspec_sweep;
/* Owned byte string produced by the format functions. */
typedef struct entspec_buffer entspec_buffer;

typedef struct entspec_purity_record {
  double purity;
  double participation;
  double entangled_qubits;
} entspec_purity_record;

typedef struct entspec_sweep_record {
  uint64_t mask;
  double purity;
  double participation;
} entspec_sweep_record;

typedef struct entspec_stats {
  uint64_t count;
  double mean_participation;
  double std_participation;
  double mean_purity;
  double min_participation;
  double max_participation;
} entspec_stats;

typedef struct entspec_params {
  uint32_t n;
  double dim;
  double dim_a;
  double dim_b;
  double alpha;
  double mu_exact;
  double mu_asymptotic;
  double sigma_pi2;
  double sigma_n;
} entspec_params;

typedef struct entspec_bin {
  double lower;
  double upper;
  uint64_t count;
} entspec_bin;

typedef struct entspec_comparison {
  double mean_gap;
  double std_gap;
  double sup_gap;
} entspec_comparison;

typedef struct entspec_table_row {
  uint32_t n;
  double ghz;
  double w;
  double cluster;
  double random;
} entspec_table_row;

ENTSPEC_API const char* entspec_version(void);
ENTSPEC_API const char* entspec_last_error(void);
ENTSPEC_API const char* entspec_status_name(entspec_status status);

/* Limits compiled into the library. */
ENTSPEC_API uint32_t entspec_max_qubits(void);
ENTSPEC_API uint32_t entspec_default_sweep_max_qubits(void);

/* ---- states ---- */

ENTSPEC_API entspec_status entspec_state_ghz(uint32_t n, entspec_state** out);
ENTSPEC_API entspec_status entspec_state_w(uint32_t n, entspec_state** out);
ENTSPEC_API entspec_status entspec_state_cluster(uint32_t n, entspec_topology topology,
                                                 entspec_state** out);
ENTSPEC_API entspec_status entspec_state_random(uint32_t n, uint64_t seed,
                                                entspec_state** out);
ENTSPEC_API entspec_status entspec_state_basis(uint32_t n, uint64_t index,
                                               entspec_state** out);
/* `interleaved` holds 2 * 2^n doubles (re, im) per amplitude. */
ENTSPEC_API entspec_status entspec_state_from_amplitudes(uint32_t n, const double* interleaved,
                                                         size_t count, entspec_state** out);
/* `u` is a row-major 2x2 complex matrix as 8 doubles: re00, im00, re01, ... */
ENTSPEC_API entspec_status entspec_state_apply_unitary(const entspec_state* state,
                                                       uint32_t qubit, const double u[8],
                                                       entspec_state** out);
ENTSPEC_API entspec_status entspec_state_load(const char* path, entspec_state** out);
ENTSPEC_API entspec_status entspec_state_save(const entspec_state* state, const char* path);
ENTSPEC_API void entspec_state_free(entspec_state* state);

ENTSPEC_API uint32_t entspec_state_qubits(const entspec_state* state);
ENTSPEC_API uint64_t entspec_state_dimension(const entspec_state* state);
ENTSPEC_API double entspec_state_norm(const entspec_state* state);
/* Copies 2 * dimension doubles into `interleaved`; `capacity` counts doubles. */
ENTSPEC_API entspec_status entspec_state_amplitudes(const entspec_state* state,
                                                    double* interleaved, size_t capacity);

/* Derived per-sample seed, splitmix64 of (base, index). */
ENTSPEC_API uint64_t entspec_derive_seed(uint64_t base, uint64_t index);

/* ---- bipartitions and purity ---- */

ENTSPEC_API entspec_status entspec_count_balanced(uint32_t n, uint64_t* out);
/* Writes up to `capacity` ascending masks; `written` receives the total. */
ENTSPEC_API entspec_status entspec_enumerate_balanced(uint32_t n, uint64_t* masks,
                                                      size_t capacity, size_t* written);
ENTSPEC_API entspec_status entspec_split_index(uint32_t n, uint64_t mask, uint64_t k,
                                               uint64_t* a, uint64_t* b);

ENTSPEC_API entspec_status entspec_purity(const entspec_state* state, uint64_t mask,
                                          entspec_purity_record* out);
ENTSPEC_API entspec_status entspec_purity_quartic(const entspec_state* state, uint64_t mask,
                                                  double* out);
ENTSPEC_API entspec_status entspec_w_participation(uint32_t n, uint32_t size_a, double* out);

/* ---- distribution ---- */

/* threads = 0 uses all hardware threads; max_qubits = 0 uses the default cap. */
ENTSPEC_API entspec_status entspec_sweep_run(const entspec_state* state, uint32_t threads,
                                             uint32_t max_qubits, entspec_sweep** out);
/* Parses sweep CSV text as written by entspec_format_sweep_csv. */
ENTSPEC_API entspec_status entspec_sweep_parse_csv(const char* text, size_t length,
                                                   entspec_sweep** out);
ENTSPEC_API void entspec_sweep_free(entspec_sweep* sweep);

ENTSPEC_API uint32_t entspec_sweep_qubits(const entspec_sweep* sweep);
ENTSPEC_API uint64_t entspec_sweep_size(const entspec_sweep* sweep);
ENTSPEC_API entspec_status entspec_sweep_record_at(const entspec_sweep* sweep, uint64_t index,
                                                   entspec_sweep_record* out);
ENTSPEC_API entspec_status entspec_sweep_stats(const entspec_sweep* sweep, entspec_stats* out);

ENTSPEC_API entspec_status entspec_analytic_params(uint32_t n, entspec_params* out);
ENTSPEC_API entspec_status entspec_density(double x, const entspec_params* params,
                                           entspec_mu_mode mode, double* out);

/* range may be NULL for the default (1, 2^{n_A}); otherwise {lower, upper}. */
ENTSPEC_API entspec_status entspec_histogram(const entspec_sweep* sweep, size_t bins,
                                             const double* range, entspec_bin* out,
                                             size_t capacity);
ENTSPEC_API entspec_status entspec_compare_to_analytic(const entspec_sweep* sweep,
                                                       entspec_mu_mode mode,
                                                       entspec_comparison* out);

/* ---- reference table ---- */

ENTSPEC_API entspec_status entspec_table_compute_row(uint32_t n, entspec_topology topology,
                                                     uint32_t samples, uint64_t seed,
                                                     uint32_t threads, uint32_t max_qubits,
                                                     entspec_table_row* out);
/* ENTSPEC_ERR_INVALID_ARGUMENT when no published row exists for n. */
ENTSPEC_API entspec_status entspec_table_published_row(uint32_t n, entspec_table_row* out);

/* ---- text formats ---- */

ENTSPEC_API entspec_status entspec_format_sweep_csv(const entspec_sweep* sweep,
                                                    entspec_buffer** out);
ENTSPEC_API entspec_status entspec_format_stats_json(const entspec_sweep* sweep,
                                                     entspec_buffer** out);
ENTSPEC_API entspec_status entspec_format_histogram_csv(const entspec_sweep* sweep, size_t bins,
                                                        const double* range,
                                                        entspec_buffer** out);
ENTSPEC_API entspec_status entspec_format_density_csv(uint32_t n, size_t points,
                                                      entspec_mu_mode mode,
                                                      entspec_buffer** out);
ENTSPEC_API entspec_status entspec_format_table(const entspec_table_row* rows, size_t count,
                                                entspec_topology topology,
                                                entspec_buffer** csv, entspec_buffer** report);

ENTSPEC_API const char* entspec_buffer_data(const entspec_buffer* buffer);
ENTSPEC_API size_t entspec_buffer_size(const entspec_buffer* buffer);
ENTSPEC_API void entspec_buffer_free(entspec_buffer* buffer);

#ifdef __cplusplus
}
#endif

#endif /* ENTSPEC_ENTSPEC_H */
