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

#ifndef EAQEC_PAULI_HPP
#define EAQEC_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eaqec {

/// Default limit on the number of elements a group enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 28;

/// An n-qubit Pauli operator in binary symplectic form (x|z), phase dropped.
///
/// Qubit i is I/X/Z/Y for (x_i, z_i) = (0,0)/(1,0)/(0,1)/(1,1). Bits are packed
/// into 64-bit words; qubit 0 is the leftmost character of the text form.
class PauliOp {
 public:
  /// Identity on `num_qubits` qubits.
  explicit PauliOp(std::size_t num_qubits);

  /// Parses a string over {I,X,Y,Z}. Throws std::invalid_argument.
  static PauliOp from_string(std::string_view text);

  std::size_t num_qubits() const { return num_qubits_; }
  bool x(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
  bool z(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
  void set(std::size_t q, bool x_bit, bool z_bit);
  char at(std::size_t q) const;

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  bool is_identity() const;
  std::string str() const;

  /// In-place projective product (XOR of both halves).
  PauliOp& operator*=(const PauliOp& other);

  friend bool operator==(const PauliOp&, const PauliOp&) = default;

 private:
  std::size_t num_qubits_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// Lexicographic order of the text form (I < X < Y < Z).
bool pauli_less(const PauliOp& a, const PauliOp& b);

std::size_t weight(const PauliOp& p);

/// 0 if p and q commute, 1 if they anticommute.
int symplectic_product(const PauliOp& p, const PauliOp& q);

PauliOp multiply(const PauliOp& p, const PauliOp& q);

/// Ordered list of n-qubit Pauli operators (rows of a check or logical matrix).
class SymplecticMatrix {
 public:
  SymplecticMatrix() = default;
  explicit SymplecticMatrix(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  SymplecticMatrix(std::size_t num_qubits, std::vector<PauliOp> rows);

  /// Whitespace-separated Pauli strings. An empty string needs `num_qubits`.
  static SymplecticMatrix parse(std::string_view text, std::size_t num_qubits = 0);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<PauliOp>& rows() const { return rows_; }
  const PauliOp& operator[](std::size_t i) const { return rows_[i]; }

  void push_back(PauliOp row);
  void append(const SymplecticMatrix& other);

  /// Row strings joined by single spaces.
  std::string str() const;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<PauliOp> rows_;
};

/// Rank of the rows as length-2n vectors over GF(2).
std::size_t gf2_rank(const SymplecticMatrix& m);

/// True when both row sets generate the same group.
bool spans_same_group(const SymplecticMatrix& a, const SymplecticMatrix& b);

/// True when p lies in the group generated by the rows of m.
bool in_span(const SymplecticMatrix& m, const PauliOp& p);

/// Half the GF(2) rank of the pairwise symplectic-product matrix.
std::size_t symplectic_pair_count(const SymplecticMatrix& m);

struct SymplecticDecomposition {
  std::vector<std::pair<PauliOp, PauliOp>> pairs;
  std::vector<PauliOp> isotropic;

  /// Pairs first (partner g then h), isotropic generators after.
  SymplecticMatrix to_matrix(std::size_t num_qubits) const;
  SymplecticMatrix pair_matrix(std::size_t num_qubits) const;
  SymplecticMatrix isotropic_matrix(std::size_t num_qubits) const;
};

/// Symplectic Gram-Schmidt over GF(2).
///
/// Rows are processed in the given order; the first remaining row that
/// anticommutes with the current pivot becomes its partner. Throws
/// std::invalid_argument when the rows are GF(2)-dependent.
SymplecticDecomposition symplectic_gram_schmidt(const SymplecticMatrix& m);

/// Streams every element of the group generated by independent rows.
///
/// Elements come in Gray-code order starting from the identity, so each step
/// multiplies in exactly one generator. `subset()` reports which generators
/// make up the current element.
class GroupEnumerator {
 public:
  explicit GroupEnumerator(const SymplecticMatrix& generators,
                           std::uint64_t cap = kDefaultEnumerationCap);

  /// Advances to the next element; the first call yields the identity.
  bool next();

  const PauliOp& current() const { return current_; }
  std::uint64_t subset() const { return subset_; }
  std::uint64_t group_order() const { return order_; }

 private:
  std::vector<PauliOp> generators_;
  PauliOp current_;
  std::uint64_t order_ = 1;
  std::uint64_t step_ = 0;
  std::uint64_t subset_ = 0;
};

std::vector<PauliOp> enumerate_group(const SymplecticMatrix& generators,
                                     std::uint64_t cap = kDefaultEnumerationCap);

struct Cnot {
  std::size_t control;
  std::size_t target;
  friend bool operator==(const Cnot&, const Cnot&) = default;
};

/// A CNOT-only Clifford circuit.
class CliffordCircuit {
 public:
  explicit CliffordCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  /// Parses lines of the form `CNOT <control> <target>`; `#` starts a comment.
  static CliffordCircuit parse(std::string_view text, std::size_t num_qubits);

  void add_cnot(std::size_t control, std::size_t target);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Cnot>& gates() const { return gates_; }

  std::string str() const;

 private:
  std::size_t num_qubits_;
  std::vector<Cnot> gates_;
};

/// Heisenberg-picture image of p under the circuit, gate by gate, up to phase.
PauliOp conjugate_through_circuit(const CliffordCircuit& circuit, const PauliOp& p);

}  // namespace eaqec

#endif  // EAQEC_PAULI_HPP
