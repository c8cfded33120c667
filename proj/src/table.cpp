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

#include "eaqec/table.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eaqec {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& s, int line_no) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected an integer, got \"" + s + "\"");
  }
  return v;
}

std::string origin(const std::string& provenance) {
  return provenance.rfind("Extension:", 0) == 0 ? provenance : "Extension:" + provenance;
}

}  // namespace

std::vector<KnownCode> parse_known_codes(std::string_view csv) {
  std::vector<KnownCode> out;
  std::istringstream in{std::string(csv)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "n,k,c,d,source") {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected header n,k,c,d,source");
      }
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 5 || f[4].empty()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 5 fields with a source");
    }
    KnownCode code{to_int(f[0], line_no), to_int(f[1], line_no), to_int(f[2], line_no), to_int(f[3], line_no), f[4]};
    if (code.n < 1 || code.k < 0 || code.c < 0 || code.k + code.c > code.n || code.d < 1) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": invalid parameters");
    }
    out.push_back(std::move(code));
  }
  if (!header_seen) throw std::invalid_argument("lower-bound database has no header");
  return out;
}

std::vector<KnownCode> load_known_codes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read lower-bound database " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_known_codes(text.str());
}

LowerBoundDb maximal_lower_bounds(const std::vector<KnownCode>& known, int nmax) {
  std::map<std::pair<int, int>, LowerBoundEntry> best;
  auto offer = [&](int n, int k, int d, const std::string& provenance) {
    auto& cur = best[{n, k}];
    if (d > cur.d) cur = {d, provenance};
  };
  std::map<std::pair<int, int>, LowerBoundEntry> transcribed;
  for (const auto& code : known) {
    if (code.c != code.n - code.k) continue;
    auto& cur = transcribed[{code.n, code.k}];
    if (code.d > cur.d) cur = {code.d, "Transcribed:" + code.source};
  }
  for (int n = 3; n <= nmax; ++n) {
    for (int k = n - 1; k >= 1; --k) {
      // Offers in tie-break priority order; later ones must be strictly better.
      if (k == 1) offer(n, k, n % 2 ? n : n - 1, "Construction");
      if (k == n - 1) offer(n, k, n % 2 ? 2 : 1, "Construction");
      if (auto it = transcribed.find({n, k}); it != transcribed.end()) {
        offer(n, k, it->second.d, it->second.provenance);
      }
      if (auto it = best.find({n - 1, k}); it != best.end() && k <= n - 2) {
        offer(n, k, it->second.d, origin(it->second.provenance));
      }
      if (auto it = best.find({n, k + 1}); it != best.end() && k + 1 <= n - 1) {
        offer(n, k, it->second.d, origin(it->second.provenance));
      }
    }
  }
  LowerBoundDb db;
  for (const auto& [key, entry] : best) {
    if (entry.d > 0) db.add(key.first, key.second, key.first - key.second, entry.d, entry.provenance);
  }
  return db;
}

namespace {

TableRow table_row(int n, int k, const LowerBoundDb& lower, const BoundReportOptions& report_options) {
  const BoundReport r = bound_report(n, k, n - k, lower, report_options);
  TableRow row;
  row.n = n;
  row.k = k;
  row.c = n - k;
  row.lower = r.lower.value_or(0);
  row.lower_provenance = r.lower ? r.lower_provenance : "none";
  row.upper = r.final_upper;
  row.upper_provenance = r.upper_provenance;
  if (r.upper_provenance == "LP" && r.lp && r.lp->status == IpStatus::kUndecided) {
    row.upper_provenance += "(relaxation only)";
  }
  return row;
}

}  // namespace

std::vector<TableRow> build_table(const std::vector<KnownCode>& known, const TableOptions& options) {
  if (options.nmax < 3) throw std::invalid_argument("table needs nmax >= 3");
  const LowerBoundDb lower = maximal_lower_bounds(known, options.nmax);
  BoundReportOptions report_options;
  report_options.lp.node_limit = options.node_limit;
  std::vector<std::pair<int, int>> cells;
  for (int n = 3; n <= options.nmax; ++n) {
    for (int k = 1; k <= n - 1; ++k) cells.emplace_back(n, k);
  }
  std::vector<TableRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = table_row(cells[i].first, cells[i].second, lower, report_options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(options.threads ? options.threads : std::thread::hardware_concurrency(), 1, cells.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,k,c,lower,upper,lower_provenance,upper_provenance\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.c) + "," +
           std::to_string(r.lower) + "," + std::to_string(r.upper) + "," + r.lower_provenance + "," +
           r.upper_provenance + "\n";
  }
  return out;
}

}  // namespace eaqec
