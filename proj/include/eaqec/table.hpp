// Copyright 2026 The eaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EAQEC_TABLE_HPP
#define EAQEC_TABLE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eaqec/bounds.hpp"

namespace eaqec {

/// A known code from the lower-bound database.
struct KnownCode {
  int n = 0, k = 0, c = 0, d = 0;
  std::string source;
};

/// CSV with header `n,k,c,d,source`; `#` lines are comments.
/// Throws std::invalid_argument on malformed rows or invalid parameters.
std::vector<KnownCode> parse_known_codes(std::string_view csv);

/// Reads and parses a database file. Throws std::runtime_error if unreadable.
std::vector<KnownCode> load_known_codes(const std::string& path);

struct TableRow {
  int n = 0, k = 0, c = 0;
  int lower = 0;
  int upper = 0;
  /// Construction, Transcribed:<source> or Extension:<origin>.
  std::string lower_provenance;
  /// Source of final_upper; LP cells whose integer stage ran out of nodes
  /// carry the suffix "(relaxation only)".
  std::string upper_provenance;
};

struct TableOptions {
  int nmax = 15;
  /// Branch-and-bound budget per cell.
  std::uint64_t node_limit = 100000;
  /// Worker threads; 0 uses the hardware concurrency. Output order is fixed.
  std::size_t threads = 0;
};

/// Best lower bounds for the maximal-entanglement cells 3 <= n <= nmax,
/// 1 <= k <= n-1: the repetition and accumulator families, transcribed
/// codes, and closure under adding an ebit ((n-1,k) -> (n,k)) and under
/// demoting a logical pair ((n,k+1) -> (n,k)).
LowerBoundDb maximal_lower_bounds(const std::vector<KnownCode>& known, int nmax);

/// One row per maximal-entanglement cell, ordered by (n, k).
std::vector<TableRow> build_table(const std::vector<KnownCode>& known, const TableOptions& options = {});

/// `n,k,c,lower,upper,lower_provenance,upper_provenance`.
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace eaqec

#endif  // EAQEC_TABLE_HPP
