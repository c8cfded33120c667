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

#ifndef EAQEC_CONSTRUCTIONS_HPP
#define EAQEC_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eaqec/code.hpp"
#include "eaqec/pauli.hpp"

namespace eaqec {

/// [[n,1,n;n-1]] for odd n >= 3: logicals X..X, Z..Z and sliding ZZ / XX
/// stabilizer rows.
EaqecCode repetition_code_odd(std::size_t n);

/// [[n,1,n-1;n-1]] for even n >= 4.
EaqecCode repetition_code_even(std::size_t n);

/// Odd or even repetition code. Throws std::invalid_argument if n < 3.
EaqecCode repetition_code(std::size_t n);

/// dual(repetition_code(n)): [[n,n-1,2;1]] for odd n, [[n,n-1,1;1]] for even n.
EaqecCode accumulator_code(std::size_t n);

/// CNOT encoder of repetition_code(n). Qubit 0 is the information slot and
/// qubits 1..n-1 are ebit slots.
CliffordCircuit repetition_encoder_circuit(std::size_t n);

/// Maximal-entanglement code read off an encoder: images of X_q, Z_q for q in
/// `info_qubits` are the logical rows, images for every other qubit the
/// stabilizer rows.
EaqecCode code_from_encoder(const CliffordCircuit& circuit, const std::vector<std::size_t>& info_qubits);

/// [[n+1,k,d;c+1]]: appends a qubit and the stabilizer pair Z, X acting on it.
/// Throws std::invalid_argument on an invalid code.
EaqecCode extend_add_ebit(const EaqecCode& code);

/// [[n,k-1,d'>=d;c+1]]: moves logical pair `pair_index` into the stabilizer.
/// Throws std::invalid_argument on an invalid code or k = 0, and
/// std::out_of_range for a bad pair index.
EaqecCode demote_logical_to_ebit(const EaqecCode& code, std::size_t pair_index = 0);

enum class CodeFamily { kRepetition, kAccumulator };

CodeFamily parse_code_family(const std::string& name);
std::string code_family_name(CodeFamily family);

inline constexpr std::size_t kDefaultNonexistenceCap = 6;

struct NonexistenceResult {
  std::size_t n = 0;
  CodeFamily family = CodeFamily::kRepetition;
  bool exists = false;
  /// Anticommuting row pairs examined.
  std::uint64_t candidates_checked = 0;
  /// First passing pair, when one exists.
  std::optional<std::pair<PauliOp, PauliOp>> witness;
};

/// Exhaustive search over the generator pair of the two-generator group
/// (logical group for repetition, symplectic stabilizer for accumulator).
/// The first row is taken in qubit-permutation normal form X..XY..YZ..ZI..I;
/// the second row ranges over all 4^n Paulis anticommuting with it.
///
/// Repetition passes when all three nontrivial elements have weight n.
/// Accumulator passes when every single-qubit X, Y and Z anticommutes with
/// some generator.
///
/// Throws std::invalid_argument for odd n unless `allow_odd`, and
/// std::domain_error when n > cap.
NonexistenceResult nonexistence_search(std::size_t n, CodeFamily family, bool allow_odd = false,
                                       std::size_t cap = kDefaultNonexistenceCap);

}  // namespace eaqec

#endif  // EAQEC_CONSTRUCTIONS_HPP
