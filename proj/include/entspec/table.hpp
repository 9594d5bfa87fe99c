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

#include <optional>
#include <span>
#include <string>

#include "entspec/distribution.hpp"
#include "entspec/state.hpp"

namespace entspec {

/// Mean balanced-bipartition participation per state family.
struct TableRow {
  unsigned n;
  double ghz;
  double w;
  double cluster;
  double random;
};

/// Published reference <N_AB> values for n = 5..12, as printed (3 decimals).
std::span<const TableRow> published_table();
std::optional<TableRow> published_row(unsigned n);

struct TableOptions {
  Topology topology = Topology::chain;
  unsigned samples = 20;
  RandomSeed seed{};
  SweepOptions sweep{};
};

/// Random column averages the sweep mean over `samples` Haar states seeded
/// by derive_seed(seed, i).
TableRow compute_table_row(unsigned n, const TableOptions& options);

/// CSV with columns n,ghz,w,cluster,random.
std::string table_csv(std::span<const TableRow> rows);

/// Side-by-side text report of computed vs published values with relative
/// deviations; rows without a published counterpart show "-".
std::string table_report(std::span<const TableRow> rows, Topology topology);

} // namespace entspec
