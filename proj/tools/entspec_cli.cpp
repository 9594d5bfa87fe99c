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

// entspec command-line front end. Links only the C API of libentspec.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entspec/entspec.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(entspec_status status) {
  switch (status) {
    case ENTSPEC_OK: return 0;
    case ENTSPEC_ERR_INVALID_ARGUMENT:
    case ENTSPEC_ERR_CAP_EXCEEDED: return kExitUsage;
    case ENTSPEC_ERR_FORMAT:
    case ENTSPEC_ERR_IO: return kExitIo;
    default: return kExitInternal;
  }
}

void check(entspec_status status) {
  if (status != ENTSPEC_OK) {
    throw Failure{exit_code_for(status),
                  std::string(entspec_status_name(status)) + ": " + entspec_last_error()};
  }
}

struct StateDeleter {
  void operator()(entspec_state* s) const { entspec_state_free(s); }
};
struct SweepDeleter {
  void operator()(entspec_sweep* s) const { entspec_sweep_free(s); }
};
struct BufferDeleter {
  void operator()(entspec_buffer* b) const { entspec_buffer_free(b); }
};
using State = std::unique_ptr<entspec_state, StateDeleter>;
using Sweep = std::unique_ptr<entspec_sweep, SweepDeleter>;
using Buffer = std::unique_ptr<entspec_buffer, BufferDeleter>;

Buffer take(entspec_buffer* raw) { return Buffer(raw); }

// ENTSPEC_MAX_N overrides the qubit cap of every command.
unsigned qubit_cap(unsigned fallback) {
  const char* env = std::getenv("ENTSPEC_MAX_N");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  errno = 0;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (errno != 0 || *end != '\0' || value < 1 || value > entspec_max_qubits()) {
    throw Failure{kExitUsage, "ENTSPEC_MAX_N must be an integer in [1, " +
                                  std::to_string(entspec_max_qubits()) + "], got '" + env + "'"};
  }
  return static_cast<unsigned>(value);
}

void write_output(const std::string& path, const char* data, std::size_t size) {
  if (path.empty() || path == "-") {
    std::cout.write(data, static_cast<std::streamsize>(size));
    std::cout.flush();
    if (!std::cout) throw Failure{kExitIo, "failed writing to standard output"};
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kExitIo, "cannot open '" + path + "' for writing"};
  out.write(data, static_cast<std::streamsize>(size));
  out.close();
  if (!out) throw Failure{kExitIo, "failed writing '" + path + "'"};
}

void write_output(const std::string& path, const Buffer& buffer) {
  write_output(path, entspec_buffer_data(buffer.get()), entspec_buffer_size(buffer.get()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "cannot open '" + path + "' for reading"};
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

struct Common {
  unsigned threads = 0;
  std::string output;
};

State load_state(const std::string& path) {
  entspec_state* raw = nullptr;
  check(entspec_state_load(path.c_str(), &raw));
  return State(raw);
}

Sweep run_sweep(const entspec_state* state, const Common& common) {
  entspec_sweep* raw = nullptr;
  check(entspec_sweep_run(state, common.threads, qubit_cap(entspec_default_sweep_max_qubits()),
                          &raw));
  return Sweep(raw);
}

// stats and hist accept either a state file or a sweep CSV.
Sweep sweep_from_input(const std::string& path, const Common& common) {
  const std::string text = read_file(path);
  if (text.starts_with("mask_hex,")) {
    entspec_sweep* raw = nullptr;
    check(entspec_sweep_parse_csv(text.data(), text.size(), &raw));
    return Sweep(raw);
  }
  const State state = load_state(path);
  return run_sweep(state.get(), common);
}

// ---- gen ----

struct GenConfig {
  unsigned n = 0;
  std::string type;
  std::string topology = "chain";
  std::uint64_t seed = 0;
};

entspec_topology parse_topology(const std::string& name) {
  return name == "ring" ? ENTSPEC_TOPOLOGY_RING : ENTSPEC_TOPOLOGY_CHAIN;
}

void cmd_gen(const GenConfig& cfg, const Common& common) {
  const unsigned cap = qubit_cap(entspec_max_qubits());
  if (cfg.n > cap) {
    throw Failure{kExitUsage, "n=" + std::to_string(cfg.n) + " exceeds the cap of " +
                                  std::to_string(cap) + " qubits"};
  }
  entspec_state* raw = nullptr;
  if (cfg.type == "ghz") {
    check(entspec_state_ghz(cfg.n, &raw));
  } else if (cfg.type == "w") {
    check(entspec_state_w(cfg.n, &raw));
  } else if (cfg.type == "cluster") {
    check(entspec_state_cluster(cfg.n, parse_topology(cfg.topology), &raw));
  } else {
    check(entspec_state_random(cfg.n, cfg.seed, &raw));
  }
  const State state(raw);
  check(entspec_state_save(state.get(), common.output.c_str()));
  std::printf("n=%u type=%s norm=%.17g path=%s\n", cfg.n, cfg.type.c_str(),
              entspec_state_norm(state.get()), common.output.c_str());
}

// ---- sweep / stats / hist ----

void cmd_sweep(const std::string& input, const Common& common) {
  const State state = load_state(input);
  const Sweep sweep = run_sweep(state.get(), common);

  entspec_buffer* raw = nullptr;
  check(entspec_format_sweep_csv(sweep.get(), &raw));
  const Buffer csv = take(raw);
  write_output(common.output, csv);

  entspec_stats stats{};
  check(entspec_sweep_stats(sweep.get(), &stats));
  // With the CSV on stdout the summary goes to stderr to keep stdout parseable.
  std::FILE* summary = common.output.empty() || common.output == "-" ? stderr : stdout;
  std::fprintf(summary, "n_p=%llu mean=%.17g std=%.17g\n",
               static_cast<unsigned long long>(stats.count), stats.mean_participation,
               stats.std_participation);
}

void cmd_stats(const std::string& input, const Common& common) {
  const Sweep sweep = sweep_from_input(input, common);
  entspec_buffer* raw = nullptr;
  check(entspec_format_stats_json(sweep.get(), &raw));
  write_output(common.output, take(raw));
}

struct HistConfig {
  std::size_t bins = 40;
  std::vector<double> range;
};

void cmd_hist(const std::string& input, const HistConfig& cfg, const Common& common) {
  const Sweep sweep = sweep_from_input(input, common);
  entspec_buffer* raw = nullptr;
  check(entspec_format_histogram_csv(sweep.get(), cfg.bins,
                                     cfg.range.empty() ? nullptr : cfg.range.data(), &raw));
  write_output(common.output, take(raw));
}

// ---- density ----

struct DensityConfig {
  unsigned n = 0;
  std::size_t points = 200;
  std::string mu = "exact";
};

void cmd_density(const DensityConfig& cfg, const Common& common) {
  entspec_buffer* raw = nullptr;
  check(entspec_format_density_csv(cfg.n, cfg.points,
                                   cfg.mu == "asymptotic" ? ENTSPEC_MU_ASYMPTOTIC : ENTSPEC_MU_EXACT,
                                   &raw));
  write_output(common.output, take(raw));
}

// ---- table ----

struct TableConfig {
  unsigned nmin = 5;
  unsigned nmax = 12;
  unsigned samples = 20;
  std::string topology = "chain";
  std::uint64_t seed = 0;
};

void cmd_table(const TableConfig& cfg, const Common& common) {
  const unsigned cap = qubit_cap(entspec_default_sweep_max_qubits());
  if (cfg.nmin < 2 || cfg.nmin > cfg.nmax || cfg.nmax > cap) {
    throw Failure{kExitUsage, "table range must satisfy 2 <= nmin <= nmax <= " +
                                  std::to_string(cap) + ", got [" + std::to_string(cfg.nmin) +
                                  ", " + std::to_string(cfg.nmax) + "]"};
  }
  const entspec_topology topology = parse_topology(cfg.topology);
  std::vector<entspec_table_row> rows;
  for (unsigned n = cfg.nmin; n <= cfg.nmax; ++n) {
    entspec_table_row row{};
    check(entspec_table_compute_row(n, topology, cfg.samples, cfg.seed, common.threads, cap, &row));
    rows.push_back(row);
  }
  entspec_buffer* csv = nullptr;
  entspec_buffer* report = nullptr;
  check(entspec_format_table(rows.data(), rows.size(), topology, &csv, &report));
  const Buffer csv_buf = take(csv);
  const Buffer report_buf = take(report);
  if (!common.output.empty() && common.output != "-") {
    write_output(common.output, csv_buf);
    write_output("-", report_buf);
  } else {
    write_output("-", report_buf);
    write_output("-", csv_buf);
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distribution of bipartite participation numbers over balanced bipartitions",
               "entspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", entspec_version());

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "worker threads (0 = all available)");
    sub->add_option("-o,--output", common.output, "output path ('-' for standard output)");
  };

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a state and write it as a QSV1 file");
  gen_cmd->add_option("--type", gen.type, "state family")
      ->required()
      ->check(CLI::IsMember({"ghz", "w", "cluster", "random"}));
  gen_cmd->add_option("--n", gen.n, "qubit count")->required();
  gen_cmd->add_option("--topology", gen.topology, "cluster graph")
      ->check(CLI::IsMember({"chain", "ring"}));
  gen_cmd->add_option("--seed", gen.seed, "seed for --type random");
  add_common(gen_cmd);
  gen_cmd->get_option("--output")->required();

  std::string input;
  auto* sweep_cmd = app.add_subcommand("sweep", "participation number of every balanced bipartition");
  sweep_cmd->add_option("input", input, "state file (QSV1 or text)")->required();
  add_common(sweep_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "empirical and analytic statistics as JSON");
  stats_cmd->add_option("input", input, "state file or sweep CSV")->required();
  add_common(stats_cmd);

  HistConfig hist;
  auto* hist_cmd = app.add_subcommand("hist", "histogram of participation numbers as CSV");
  hist_cmd->add_option("input", input, "state file or sweep CSV")->required();
  hist_cmd->add_option("--bins", hist.bins, "bin count")->check(CLI::PositiveNumber);
  hist_cmd->add_option("--range", hist.range, "lower and upper edge")->expected(2);
  add_common(hist_cmd);

  DensityConfig dens;
  auto* density_cmd = app.add_subcommand("density", "analytic density of N_AB as CSV");
  density_cmd->add_option("--n", dens.n, "qubit count")->required();
  density_cmd->add_option("--points", dens.points, "sample count over (1, 2^{n_A}]")
      ->check(CLI::PositiveNumber);
  density_cmd->add_option("--mu", dens.mu, "mean purity variant")
      ->check(CLI::IsMember({"exact", "asymptotic"}));
  add_common(density_cmd);

  TableConfig table;
  auto* table_cmd = app.add_subcommand("table", "mean N_AB per state family vs published values");
  table_cmd->add_option("--nmin", table.nmin, "smallest n");
  table_cmd->add_option("--nmax", table.nmax, "largest n");
  table_cmd->add_option("--samples", table.samples, "Haar samples per n")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--topology", table.topology, "cluster graph")
      ->check(CLI::IsMember({"chain", "ring"}));
  table_cmd->add_option("--seed", table.seed, "base seed for the random column");
  add_common(table_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*gen_cmd) cmd_gen(gen, common);
    else if (*sweep_cmd) cmd_sweep(input, common);
    else if (*stats_cmd) cmd_stats(input, common);
    else if (*hist_cmd) cmd_hist(input, hist, common);
    else if (*density_cmd) cmd_density(dens, common);
    else if (*table_cmd) cmd_table(table, common);
  } catch (const Failure& f) {
    std::cerr << "entspec: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "entspec: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
