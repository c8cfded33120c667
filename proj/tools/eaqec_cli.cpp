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

// Command-line front end for the eaqec library.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqec/bounds.hpp"
#include "eaqec/code.hpp"
#include "eaqec/constructions.hpp"
#include "eaqec/enumerators.hpp"
#include "eaqec/error_analysis.hpp"
#include "eaqec/table.hpp"

namespace {

using namespace eaqec;

// Raised for bad flag values that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

EaqecCode load_code(const std::string& path) { return parse_code(read_file(path)); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

double parse_double(const std::string& s) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0;
  if (!(in >> v) || !in.eof()) throw UsageError("not a number: \"" + s + "\"");
  return v;
}

long long parse_ll(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("not an integer: \"" + s + "\"");
  return v;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(12);
  out << v;
  return out.str();
}

// Comma-separated values, or start:stop:count for an evenly spaced grid.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.empty()) return grid;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("grid range must be start:stop:count");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const long long count = parse_ll(parts[2]);
    if (count < 1) throw UsageError("grid count must be positive");
    for (long long i = 0; i < count; ++i) {
      grid.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return grid;
  }
  for (const auto& field : split(text, ',')) grid.push_back(parse_double(field));
  return grid;
}

std::string validation_str(const ValidationReport& r) {
  std::string out = std::string("valid=") + (r.valid ? "true" : "false") + "\nderived_c=" + std::to_string(r.derived_c) + "\n";
  for (const auto& f : r.failures) out += "failure=" + f + "\n";
  return out;
}

std::string simulation_str(const SimulationResult& r) {
  return "trials=" + std::to_string(r.trials) + "\nblock_errors=" + std::to_string(r.block_errors) +
         "\nrate=" + fmt(r.rate) + "\nci_halfwidth=" + fmt(r.ci_halfwidth) + "\n";
}

EaqecCode family_code(CodeFamily family, std::size_t n) {
  return family == CodeFamily::kRepetition ? repetition_code(n) : accumulator_code(n);
}

int run(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted quantum error-correcting code toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::uint64_t cap = kDefaultEnumerationCap;
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--node-limit", node_limit, "Branch-and-bound node budget")->capture_default_str();
  app.add_option("--cap", cap, "Enumeration cap (group size or search length)");
  std::string out_path;
  std::string code_path;
  int exit_code = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check a code file");
  validate_cmd->add_option("file", code_path, "Code file")->required();
  validate_cmd->callback([&] {
    const auto report = validate(load_code(code_path));
    std::cout << validation_str(report);
    if (!report.valid) exit_code = 1;
  });

  auto* dual_cmd = app.add_subcommand("dual", "Write the dual code");
  dual_cmd->add_option("file", code_path, "Code file")->required();
  dual_cmd->add_option("-o,--out", out_path, "Output file");
  dual_cmd->callback([&] { emit(serialize_code(dual(load_code(code_path))), out_path); });

  auto* distance_cmd = app.add_subcommand("distance", "Minimum distance by enumeration");
  distance_cmd->add_option("file", code_path, "Code file")->required();
  distance_cmd->callback([&] { std::cout << distance(load_code(code_path), cap) << "\n"; });

  std::string group = "S";
  std::string format = "csv";
  auto* enum_cmd = app.add_subcommand("enumerator", "Weight enumerator of a code group");
  enum_cmd->add_option("file", code_path, "Code file")->required();
  enum_cmd->add_option("--group", group, "S, L, SI or D")->capture_default_str();
  enum_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  enum_cmd->callback([&] {
    const auto g = parse_code_group(group);
    const auto e = code_enumerator(load_code(code_path), g, cap);
    std::cout << (format == "json" ? enumerator_json(e, code_group_label(g)) : enumerator_csv_row(e, code_group_label(g)))
              << "\n";
  });

  std::size_t mw_n = 0;
  std::size_t log2_order = 0;
  std::string coeffs;
  auto* mw_cmd = app.add_subcommand("macwilliams", "MacWilliams transform of an enumerator");
  mw_cmd->add_option("--n", mw_n, "Number of qubits")->required();
  mw_cmd->add_option("--log2-order", log2_order, "log2 of the group order")->required();
  mw_cmd->add_option("--coeffs", coeffs, "Comma-separated coefficients A0..An")->required();
  mw_cmd->callback([&] {
    std::vector<long long> values;
    for (const auto& field : split(coeffs, ',')) values.push_back(parse_ll(field));
    if (values.size() != mw_n + 1) throw UsageError("expected n+1 coefficients");
    std::cout << coeffs_str(macwilliams_transform(make_enumerator(log2_order, values))) << "\n";
  });

  int bn = 0, bk = 0, bc = 0, bd = 0;
  std::string method = "report";
  std::string db_path;
  auto* bound_cmd = app.add_subcommand("bound", "Distance bounds for [[n,k,d;c]]");
  bound_cmd->add_option("--n", bn)->required();
  bound_cmd->add_option("--k", bk)->required();
  bound_cmd->add_option("--c", bc)->required();
  bound_cmd->add_option("--d", bd, "Distance for --method gv");
  bound_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"report", "lp", "lp-detail", "singleton", "hamming", "plotkin", "gv"}))
      ->capture_default_str();
  bound_cmd->add_option("--db", db_path, "Lower-bound database for --method report");
  bound_cmd->callback([&] {
    LpBoundOptions lp;
    lp.node_limit = node_limit;
    if (method == "lp") {
      std::cout << lp_bound(bn, bk, bc, lp).upper << "\n";
    } else if (method == "lp-detail") {
      std::cout << lp_bound_str(lp_bound(bn, bk, bc, lp));
    } else if (method == "singleton") {
      std::cout << singleton_bound(bn, bk, bc) << "\n";
    } else if (method == "hamming") {
      const auto h = hamming_bound(bn, bk, bc);
      if (!h.applicable) throw std::domain_error("Hamming bound needs c = n-k");
      std::cout << h.d << "\n";
    } else if (method == "plotkin") {
      std::cout << plotkin_bound(bn, bk) << "\n";
    } else if (method == "gv") {
      if (bd < 1) throw UsageError("--method gv needs --d");
      const auto k = gilbert_varshamov(bn, bd, bc);
      if (!k) throw std::domain_error("no k guaranteed for these parameters");
      std::cout << *k << "\n";
    } else {
      LowerBoundDb db;
      if (!db_path.empty()) db = maximal_lower_bounds(load_known_codes(db_path), bn);
      BoundReportOptions options;
      options.lp = lp;
      std::cout << bound_report_str(bound_report(bn, bk, bc, db, options));
    }
  });

  std::string family_name;
  std::size_t cn = 0;
  bool circuit = false;
  auto* construct_cmd = app.add_subcommand("construct", "Build a repetition or accumulator code");
  construct_cmd->add_option("family", family_name, "repetition or accumulator")->required();
  construct_cmd->add_option("--n", cn)->required();
  construct_cmd->add_option("-o,--out", out_path, "Output file");
  construct_cmd->add_flag("--circuit", circuit, "Write the repetition encoder circuit instead");
  construct_cmd->callback([&] {
    const auto family = parse_code_family(family_name);
    if (circuit) {
      if (family != CodeFamily::kRepetition) throw std::domain_error("encoder circuits exist for the repetition family only");
      emit(repetition_encoder_circuit(cn).str(), out_path);
    } else {
      emit(serialize_code(family_code(family, cn)), out_path);
    }
  });

  auto* extend_cmd = app.add_subcommand("extend", "Add one ebit to a code");
  extend_cmd->add_option("file", code_path, "Code file")->required();
  extend_cmd->add_option("-o,--out", out_path, "Output file");
  extend_cmd->callback([&] { emit(serialize_code(extend_add_ebit(load_code(code_path))), out_path); });

  std::size_t pair_index = 0;
  auto* demote_cmd = app.add_subcommand("demote", "Move a logical pair into the stabilizer");
  demote_cmd->add_option("file", code_path, "Code file")->required();
  demote_cmd->add_option("--pair", pair_index)->capture_default_str();
  demote_cmd->add_option("-o,--out", out_path, "Output file");
  demote_cmd->callback(
      [&] { emit(serialize_code(demote_logical_to_ebit(load_code(code_path), pair_index)), out_path); });

  std::size_t nx_n = 0;
  bool allow_odd = false;
  auto* nonex_cmd = app.add_subcommand("check-nonexistence", "Exhaustive search for a one-pair code");
  nonex_cmd->add_option("family", family_name, "repetition or accumulator")->required();
  nonex_cmd->add_option("--n", nx_n)->required();
  nonex_cmd->add_flag("--allow-odd", allow_odd, "Permit odd n");
  nonex_cmd->callback([&] {
    const std::size_t search_cap = app.get_option("--cap")->count() ? cap : kDefaultNonexistenceCap;
    const auto r = nonexistence_search(nx_n, parse_code_family(family_name), allow_odd, search_cap);
    std::cout << "n=" << r.n << "\nfamily=" << code_family_name(r.family) << "\nexists=" << (r.exists ? "true" : "false")
              << "\ncandidates_checked=" << r.candidates_checked << "\n";
    if (r.witness) std::cout << "witness=" << r.witness->first.str() << " " << r.witness->second.str() << "\n";
  });

  double p = 0;
  std::uint64_t trials = 100000;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo block-error rate");
  sim_cmd->add_option("file", code_path, "Code file")->required();
  sim_cmd->add_option("--p", p, "Depolarizing probability")->required();
  sim_cmd->add_option("--trials", trials)->capture_default_str();
  sim_cmd->callback([&] { std::cout << simulation_str(simulate_map_block_error(load_code(code_path), p, trials, seed)); });

  std::vector<std::string> curve_codes;
  std::vector<std::string> curve_families;
  std::vector<std::string> curve_random;
  std::string grid_text;
  bool simulate = false;
  auto* curve_cmd = app.add_subcommand("error-curve", "Block-error bounds over a grid of p");
  curve_cmd->add_option("--code", curve_codes, "Code file (repeatable)");
  curve_cmd->add_option("--family", curve_families, "family:n, e.g. repetition:5 (repeatable)");
  curve_cmd->add_option("--random", curve_random, "n,k for the random-code bound (repeatable)");
  curve_cmd->add_option("--grid", grid_text, "p values: comma list or start:stop:count")->required();
  curve_cmd->add_flag("--simulate", simulate, "Add simulated columns for concrete codes");
  curve_cmd->add_option("--trials", trials)->capture_default_str();
  curve_cmd->add_option("-o,--out", out_path, "Output file");
  curve_cmd->callback([&] {
    std::vector<CurveSubject> subjects;
    auto add_code = [&](const std::string& label, EaqecCode code) {
      if (!code.is_maximal_entanglement()) throw std::domain_error(label + ": bound needs c = n-k");
      CurveSubject s;
      s.label = label;
      s.n = static_cast<int>(code.n);
      s.k = static_cast<int>(code.k);
      s.logical = code_enumerator(code, CodeGroup::kLogical, cap);
      s.code = std::move(code);
      subjects.push_back(std::move(s));
    };
    for (const auto& path : curve_codes) add_code(path, load_code(path));
    for (const auto& entry : curve_families) {
      const auto parts = split(entry, ':');
      if (parts.size() != 2) throw UsageError("--family expects family:n");
      add_code(entry, family_code(parse_code_family(parts[0]), static_cast<std::size_t>(parse_ll(parts[1]))));
    }
    for (const auto& entry : curve_random) {
      const auto parts = split(entry, ',');
      if (parts.size() != 2) throw UsageError("--random expects n,k");
      CurveSubject s;
      s.label = "random(" + parts[0] + ";" + parts[1] + ")";
      s.n = static_cast<int>(parse_ll(parts[0]));
      s.k = static_cast<int>(parse_ll(parts[1]));
      subjects.push_back(std::move(s));
    }
    if (subjects.empty()) throw UsageError("give at least one --code, --family or --random subject");
    std::optional<SimulationOptions> sim;
    if (simulate) sim = SimulationOptions{trials, seed};
    emit(emit_error_curve(subjects, parse_grid(grid_text), sim), out_path);
  });

  int nmax = 15;
  std::string table_db;
  std::size_t threads = 0;
  auto* table_cmd = app.add_subcommand("table", "Distance bounds for all maximal-entanglement codes up to nmax");
  table_cmd->add_option("--nmax", nmax)->check(CLI::Range(3, 15))->capture_default_str();
  table_cmd->add_option("--db", table_db, "Lower-bound database (CSV)")->required();
  table_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)")->capture_default_str();
  table_cmd->add_option("-o,--out", out_path, "Output file");
  table_cmd->callback([&] {
    TableOptions options;
    options.nmax = nmax;
    options.threads = threads;
    if (app.get_option("--node-limit")->count()) options.node_limit = node_limit;
    emit(table_csv(build_table(load_known_codes(table_db), options)), out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
