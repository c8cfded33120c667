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

#include "eaqec/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace eaqec {

namespace {

// Pauli with the given letter on each listed qubit.
PauliOp letters_on(std::size_t n, const std::vector<std::size_t>& qubits, bool x, bool z) {
  PauliOp p(n);
  for (auto q : qubits) p.set(q, x, z);
  return p;
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t q = begin; q < end; ++q) out.push_back(q);
  return out;
}

PauliOp pad(const PauliOp& p, std::size_t n) {
  PauliOp out(n);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) out.set(q, p.x(q), p.z(q));
  return out;
}

void require_valid(const EaqecCode& code, const char* what) {
  const auto report = validate(code);
  if (!report.valid) {
    throw std::invalid_argument(std::string(what) + ": invalid input code: " + report.failures.front());
  }
}

}  // namespace

EaqecCode repetition_code_odd(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd repetition code needs odd n >= 3");
  EaqecCode code;
  code.n = n;
  code.k = 1;
  code.c = n - 1;
  code.stabilizer = SymplecticMatrix(n);
  for (std::size_t i = 0; i + 1 < n; ++i) code.stabilizer.push_back(letters_on(n, {i, i + 1}, false, true));
  for (std::size_t i = 0; i + 1 < n; ++i) code.stabilizer.push_back(letters_on(n, {i, i + 1}, true, false));
  code.logical = SymplecticMatrix(n);
  code.logical.push_back(letters_on(n, range(0, n), true, false));
  code.logical.push_back(letters_on(n, range(0, n), false, true));
  return canonicalize(std::move(code));
}

EaqecCode repetition_code_even(std::size_t n) {
  if (n < 4 || n % 2 == 1) throw std::invalid_argument("even repetition code needs even n >= 4");
  // Z block from the check matrix of the length-(n-1) repetition code shifted
  // right by one plus an all-ones row missing the last qubit; X block from the
  // same check matrix unshifted plus the all-ones row. Qubits are laid out in
  // reverse so that Z..Z and X..XI stay logical.
  auto rev = [n](std::vector<std::size_t> qs) {
    for (auto& q : qs) q = n - 1 - q;
    return qs;
  };
  EaqecCode code;
  code.n = n;
  code.k = 1;
  code.c = n - 1;
  code.stabilizer = SymplecticMatrix(n);
  for (std::size_t i = 0; i + 2 < n; ++i) code.stabilizer.push_back(letters_on(n, rev({i + 1, i + 2}), false, true));
  code.stabilizer.push_back(letters_on(n, rev(range(0, n - 1)), false, true));
  for (std::size_t i = 0; i + 2 < n; ++i) code.stabilizer.push_back(letters_on(n, rev({i, i + 1}), true, false));
  code.stabilizer.push_back(letters_on(n, range(0, n), true, false));
  code.logical = SymplecticMatrix(n);
  code.logical.push_back(letters_on(n, range(0, n), false, true));
  code.logical.push_back(letters_on(n, range(0, n - 1), true, false));
  return canonicalize(std::move(code));
}

EaqecCode repetition_code(std::size_t n) {
  if (n < 3) throw std::invalid_argument("repetition code needs n >= 3");
  return n % 2 ? repetition_code_odd(n) : repetition_code_even(n);
}

EaqecCode accumulator_code(std::size_t n) {
  if (n < 3) throw std::invalid_argument("accumulator code needs n >= 3");
  return dual(repetition_code(n));
}

CliffordCircuit repetition_encoder_circuit(std::size_t n) {
  if (n < 3) throw std::invalid_argument("encoder needs n >= 3");
  // Built for the odd length m; the even variant drops qubit m-1 together with
  // the last gate of each cascade.
  const std::size_t m = n % 2 ? n : n + 1;
  CliffordCircuit circuit(n);
  for (std::size_t q = 0; q + 2 < m; q += 2) {
    if (q + 2 < n) circuit.add_cnot(q, q + 2);
  }
  for (std::size_t q = 1; q < m; ++q) {
    if (q < n) circuit.add_cnot(q, q - 1);
  }
  return circuit;
}

EaqecCode code_from_encoder(const CliffordCircuit& circuit, const std::vector<std::size_t>& info_qubits) {
  const std::size_t n = circuit.num_qubits();
  for (auto q : info_qubits) {
    if (q >= n) throw std::out_of_range("information qubit out of range");
  }
  EaqecCode code;
  code.n = n;
  code.k = info_qubits.size();
  code.c = n - code.k;
  code.stabilizer = SymplecticMatrix(n);
  code.logical = SymplecticMatrix(n);
  auto image = [&](std::size_t q, bool x) {
    PauliOp p(n);
    p.set(q, x, !x);
    return conjugate_through_circuit(circuit, p);
  };
  for (auto q : info_qubits) {
    code.logical.push_back(image(q, true));
    code.logical.push_back(image(q, false));
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (std::find(info_qubits.begin(), info_qubits.end(), q) != info_qubits.end()) continue;
    code.stabilizer.push_back(image(q, true));
    code.stabilizer.push_back(image(q, false));
  }
  return canonicalize(std::move(code));
}

EaqecCode extend_add_ebit(const EaqecCode& code) {
  require_valid(code, "extend_add_ebit");
  const std::size_t n = code.n + 1;
  EaqecCode out;
  out.n = n;
  out.k = code.k;
  out.c = code.c + 1;
  out.stabilizer = SymplecticMatrix(n);
  out.stabilizer.push_back(letters_on(n, {n - 1}, false, true));
  out.stabilizer.push_back(letters_on(n, {n - 1}, true, false));
  for (const auto& r : code.stabilizer.rows()) out.stabilizer.push_back(pad(r, n));
  out.logical = SymplecticMatrix(n);
  for (const auto& r : code.logical.rows()) out.logical.push_back(pad(r, n));
  return canonicalize(std::move(out));
}

EaqecCode demote_logical_to_ebit(const EaqecCode& code, std::size_t pair_index) {
  require_valid(code, "demote_logical_to_ebit");
  if (code.k == 0) throw std::invalid_argument("demote_logical_to_ebit needs k >= 1");
  if (pair_index >= code.k) throw std::out_of_range("logical pair index out of range");
  const auto pairs = symplectic_gram_schmidt(code.logical).pairs;
  EaqecCode out;
  out.n = code.n;
  out.k = code.k - 1;
  out.c = code.c + 1;
  out.stabilizer = code.stabilizer;
  out.logical = SymplecticMatrix(code.n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto& target = i == pair_index ? out.stabilizer : out.logical;
    target.push_back(pairs[i].first);
    target.push_back(pairs[i].second);
  }
  return canonicalize(std::move(out));
}

CodeFamily parse_code_family(const std::string& name) {
  if (name == "repetition") return CodeFamily::kRepetition;
  if (name == "accumulator") return CodeFamily::kAccumulator;
  throw std::invalid_argument("unknown family \"" + name + "\" (expected repetition or accumulator)");
}

std::string code_family_name(CodeFamily family) {
  return family == CodeFamily::kRepetition ? "repetition" : "accumulator";
}

NonexistenceResult nonexistence_search(std::size_t n, CodeFamily family, bool allow_odd, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("nonexistence search needs n >= 1");
  if (n % 2 == 1 && !allow_odd) throw std::invalid_argument("nonexistence search is stated for even n");
  if (n > cap) {
    throw std::domain_error("n = " + std::to_string(n) + " exceeds the search cap " + std::to_string(cap));
  }
  NonexistenceResult result;
  result.n = n;
  result.family = family;

  auto passes = [&](const PauliOp& a, const PauliOp& b) {
    if (family == CodeFamily::kRepetition) {
      return weight(a) == n && weight(b) == n && weight(multiply(a, b)) == n;
    }
    for (std::size_t q = 0; q < n; ++q) {
      const bool x_hit = a.z(q) || b.z(q);
      const bool z_hit = a.x(q) || b.x(q);
      const bool y_hit = (a.x(q) != a.z(q)) || (b.x(q) != b.z(q));
      if (!x_hit || !z_hit || !y_hit) return false;
    }
    return true;
  };

  const std::uint64_t second_rows = std::uint64_t{1} << (2 * n);
  for (std::size_t nx = 0; nx <= n; ++nx) {
    for (std::size_t ny = 0; nx + ny <= n; ++ny) {
      for (std::size_t nz = 0; nx + ny + nz <= n; ++nz) {
        PauliOp first(n);
        for (std::size_t q = 0; q < nx + ny + nz; ++q) first.set(q, q < nx + ny, q >= nx);
        for (std::uint64_t bits = 0; bits < second_rows; ++bits) {
          PauliOp second(n);
          for (std::size_t q = 0; q < n; ++q) second.set(q, (bits >> (2 * q)) & 1, (bits >> (2 * q + 1)) & 1);
          if (!symplectic_product(first, second)) continue;
          ++result.candidates_checked;
          if (passes(first, second)) {
            result.exists = true;
            if (!result.witness) result.witness = std::make_pair(first, second);
          }
        }
      }
    }
  }
  return result;
}

}  // namespace eaqec
