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

#include "eaqec/code.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace eaqec {

namespace {

std::string params(const EaqecCode& code) {
  return "[[" + std::to_string(code.n) + "," + std::to_string(code.k) + ";" +
         std::to_string(code.c) + "]]";
}

bool all_commute(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  for (const auto& p : a.rows()) {
    for (const auto& q : b.rows()) {
      if (symplectic_product(p, q)) return false;
    }
  }
  return true;
}

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

std::size_t parse_param(const std::string& token, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("malformed header: expected " + prefix + "<int>, got \"" + token +
                                "\"");
  }
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    throw std::invalid_argument("malformed header value \"" + token + "\"");
  }
  return std::stoul(digits);
}

SymplecticMatrix parse_rows(const std::string& line, std::string_view tag, std::size_t n) {
  const std::string prefix = std::string(tag) + ":";
  if (line.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("expected a line starting with \"" + prefix + "\"");
  }
  SymplecticMatrix m = SymplecticMatrix::parse(line.substr(prefix.size()), n);
  for (const auto& r : m.rows()) {
    if (r.num_qubits() != n) throw std::invalid_argument("row length mismatch: " + r.str());
  }
  return m;
}

}  // namespace

ValidationReport validate(const EaqecCode& code) {
  ValidationReport report;
  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };

  const std::size_t n = code.n;
  if (n == 0 || code.k > n || code.c > n - code.k) {
    fail("parameters: need n >= 1, 0 <= k <= n, 0 <= c <= n-k");
  }
  if (code.stabilizer.num_qubits() != n || code.logical.num_qubits() != n) {
    fail("qubit count: generator matrices do not act on n qubits");
    report.valid = false;
    return report;
  }
  report.derived_c = symplectic_pair_count(code.stabilizer);
  if (report.failures.empty()) {
    if (code.stabilizer.size() != n - code.k + code.c) {
      fail("row count: stabilizer has " + std::to_string(code.stabilizer.size()) +
           " rows, expected n-k+c = " + std::to_string(n - code.k + code.c));
    }
    if (code.logical.size() != 2 * code.k) {
      fail("row count: logical has " + std::to_string(code.logical.size()) + " rows, expected 2k");
    }
  }
  SymplecticMatrix joint = code.stabilizer;
  joint.append(code.logical);
  if (gf2_rank(joint) != joint.size()) {
    fail("independence: stabilizer and logical rows are GF(2)-dependent");
  }
  if (report.derived_c != code.c) {
    fail("symplectic pairs: stabilizer has " + std::to_string(report.derived_c) +
         " pairs, expected c = " + std::to_string(code.c));
  }
  if (!all_commute(code.stabilizer, code.logical)) {
    fail("commutation: a logical row anticommutes with a stabilizer row");
  }
  if (gf2_rank(code.logical) == code.logical.size()) {
    const auto logical = symplectic_gram_schmidt(code.logical);
    if (logical.pairs.size() != code.k || !logical.isotropic.empty()) {
      fail("logical pairs: logical rows do not form k symplectic pairs");
    }
  }
  report.valid = report.failures.empty();
  return report;
}

EaqecCode canonicalize(EaqecCode code) {
  if (gf2_rank(code.stabilizer) == code.stabilizer.size()) {
    code.stabilizer = symplectic_gram_schmidt(code.stabilizer).to_matrix(code.n);
  }
  if (gf2_rank(code.logical) == code.logical.size()) {
    code.logical = symplectic_gram_schmidt(code.logical).to_matrix(code.n);
  }
  return code;
}

SymplecticDecomposition decompose_stabilizer(const EaqecCode& code) {
  return symplectic_gram_schmidt(code.stabilizer);
}

EaqecCode dual(const EaqecCode& code) {
  const auto report = validate(code);
  if (!report.valid) {
    throw std::invalid_argument("dual of invalid code " + params(code) + ": " +
                                report.failures.front());
  }
  const auto parts = decompose_stabilizer(code);
  EaqecCode out;
  out.n = code.n;
  out.k = code.c;
  out.c = code.k;
  out.stabilizer = code.logical;
  out.stabilizer.append(parts.isotropic_matrix(code.n));
  out.logical = parts.pair_matrix(code.n);
  return canonicalize(std::move(out));
}

std::size_t distance(const EaqecCode& code, std::uint64_t cap) {
  if (code.k == 0) {
    throw std::domain_error("distance is undefined for k = 0 codes");
  }
  const auto parts = decompose_stabilizer(code);
  // Logical generators occupy the low bits of the enumeration subset.
  SymplecticMatrix generators = code.logical;
  generators.append(parts.isotropic_matrix(code.n));
  const std::uint64_t logical_mask = (std::uint64_t{1} << code.logical.size()) - 1;

  GroupEnumerator it(generators, cap);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (it.next()) {
    if ((it.subset() & logical_mask) == 0) continue;
    best = std::min(best, weight(it.current()));
    if (best == 1) break;
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw std::domain_error("(L x S_I) \\ S_I is empty");
  }
  return best;
}

EaqecCode parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line.substr(line.find_first_not_of(" \t\r")));
  }
  if (lines.size() != 3) {
    throw std::invalid_argument("code file needs exactly 3 non-comment lines (header, S:, L:), got " +
                                std::to_string(lines.size()));
  }
  std::istringstream header(lines[0]);
  std::string tn, tk, tc, extra;
  if (!(header >> tn >> tk >> tc) || (header >> extra)) {
    throw std::invalid_argument("malformed header: expected `n=<int> k=<int> c=<int>`");
  }
  EaqecCode code;
  code.n = parse_param(tn, "n");
  code.k = parse_param(tk, "k");
  code.c = parse_param(tc, "c");
  if (code.n == 0) throw std::invalid_argument("n must be positive");
  if (code.k + code.c > code.n) {
    throw std::invalid_argument("parameter violation: k + c > n in " + params(code));
  }
  code.stabilizer = parse_rows(lines[1], "S", code.n);
  code.logical = parse_rows(lines[2], "L", code.n);
  if (code.stabilizer.size() != code.n - code.k + code.c) {
    throw std::invalid_argument("expected n-k+c = " + std::to_string(code.n - code.k + code.c) +
                                " stabilizer rows, got " + std::to_string(code.stabilizer.size()));
  }
  if (code.logical.size() != 2 * code.k) {
    throw std::invalid_argument("expected 2k = " + std::to_string(2 * code.k) +
                                " logical rows, got " + std::to_string(code.logical.size()));
  }
  return canonicalize(std::move(code));
}

std::string serialize_code(const EaqecCode& code) {
  std::string out = "n=" + std::to_string(code.n) + " k=" + std::to_string(code.k) +
                    " c=" + std::to_string(code.c) + "\n";
  out += "S:";
  for (const auto& r : code.stabilizer.rows()) out += " " + r.str();
  out += "\nL:";
  for (const auto& r : code.logical.rows()) out += " " + r.str();
  out += "\n";
  return out;
}

}  // namespace eaqec
