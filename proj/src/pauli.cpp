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

#include "eaqec/pauli.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace eaqec {

namespace {

std::size_t words_for(std::size_t num_qubits) { return (num_qubits + 63) / 64; }

void require_same_size(const PauliOp& p, const PauliOp& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli operators act on different numbers of qubits: " +
                                std::to_string(p.num_qubits()) + " vs " +
                                std::to_string(q.num_qubits()));
  }
}

// Rows packed as [x words | z words] for elimination.
using PackedRow = std::vector<std::uint64_t>;

PackedRow pack(const PauliOp& p) {
  PackedRow row(p.x_words().begin(), p.x_words().end());
  row.insert(row.end(), p.z_words().begin(), p.z_words().end());
  return row;
}

// Reduces `rows` to echelon form in place and returns the rank.
std::size_t eliminate(std::vector<PackedRow>& rows) {
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (col & 63);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t i = w; i < words; ++i) rows[r][i] ^= rows[rank][i];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of(std::vector<PackedRow> rows) { return eliminate(rows); }

}  // namespace

PauliOp::PauliOp(std::size_t num_qubits)
    : num_qubits_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {}

PauliOp PauliOp::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  PauliOp p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'X': p.set(q, true, false); break;
      case 'Z': p.set(q, false, true); break;
      case 'Y': p.set(q, true, true); break;
      default:
        throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[q]) +
                                    "' in \"" + std::string(text) + "\"");
    }
  }
  return p;
}

void PauliOp::set(std::size_t q, bool x_bit, bool z_bit) {
  const std::uint64_t mask = std::uint64_t{1} << (q & 63);
  x_[q >> 6] = x_bit ? (x_[q >> 6] | mask) : (x_[q >> 6] & ~mask);
  z_[q >> 6] = z_bit ? (z_[q >> 6] | mask) : (z_[q >> 6] & ~mask);
}

char PauliOp::at(std::size_t q) const { return "IXZY"[x(q) + 2 * z(q)]; }

bool PauliOp::is_identity() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto w) { return w == 0; });
}

std::string PauliOp::str() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t q = 0; q < num_qubits_; ++q) out[q] = at(q);
  return out;
}

PauliOp& PauliOp::operator*=(const PauliOp& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < x_.size(); ++i) {
    x_[i] ^= other.x_[i];
    z_[i] ^= other.z_[i];
  }
  return *this;
}

bool pauli_less(const PauliOp& a, const PauliOp& b) {
  require_same_size(a, b);
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    const char ca = a.at(q);
    const char cb = b.at(q);
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::size_t weight(const PauliOp& p) {
  std::size_t total = 0;
  const auto xs = p.x_words();
  const auto zs = p.z_words();
  for (std::size_t i = 0; i < xs.size(); ++i) total += std::popcount(xs[i] | zs[i]);
  return total;
}

int symplectic_product(const PauliOp& p, const PauliOp& q) {
  require_same_size(p, q);
  int parity = 0;
  const auto px = p.x_words();
  const auto pz = p.z_words();
  const auto qx = q.x_words();
  const auto qz = q.z_words();
  for (std::size_t i = 0; i < px.size(); ++i) {
    parity ^= std::popcount((px[i] & qz[i]) ^ (pz[i] & qx[i])) & 1;
  }
  return parity;
}

PauliOp multiply(const PauliOp& p, const PauliOp& q) {
  PauliOp out = p;
  out *= q;
  return out;
}

SymplecticMatrix::SymplecticMatrix(std::size_t num_qubits, std::vector<PauliOp> rows)
    : num_qubits_(num_qubits) {
  rows_.reserve(rows.size());
  for (auto& r : rows) push_back(std::move(r));
}

SymplecticMatrix SymplecticMatrix::parse(std::string_view text, std::size_t num_qubits) {
  std::istringstream in{std::string(text)};
  std::vector<PauliOp> rows;
  std::string token;
  while (in >> token) rows.push_back(PauliOp::from_string(token));
  if (rows.empty()) {
    if (num_qubits == 0) throw std::invalid_argument("empty matrix needs an explicit qubit count");
    return SymplecticMatrix(num_qubits);
  }
  const std::size_t n = num_qubits != 0 ? num_qubits : rows.front().num_qubits();
  return SymplecticMatrix(n, std::move(rows));
}

void SymplecticMatrix::push_back(PauliOp row) {
  if (row.num_qubits() != num_qubits_) {
    throw std::invalid_argument("row " + row.str() + " has " + std::to_string(row.num_qubits()) +
                                " qubits, expected " + std::to_string(num_qubits_));
  }
  rows_.push_back(std::move(row));
}

void SymplecticMatrix::append(const SymplecticMatrix& other) {
  for (const auto& r : other.rows()) push_back(r);
}

std::string SymplecticMatrix::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ' ';
    out += rows_[i].str();
  }
  return out;
}

std::size_t gf2_rank(const SymplecticMatrix& m) {
  std::vector<PackedRow> rows;
  rows.reserve(m.size());
  for (const auto& r : m.rows()) rows.push_back(pack(r));
  return rank_of(std::move(rows));
}

bool spans_same_group(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.num_qubits() != b.num_qubits()) return false;
  SymplecticMatrix joint = a;
  joint.append(b);
  const std::size_t r = gf2_rank(joint);
  return r == gf2_rank(a) && r == gf2_rank(b);
}

bool in_span(const SymplecticMatrix& m, const PauliOp& p) {
  SymplecticMatrix joint = m;
  joint.push_back(p);
  return gf2_rank(joint) == gf2_rank(m);
}

std::size_t symplectic_pair_count(const SymplecticMatrix& m) {
  const std::size_t r = m.size();
  std::vector<PackedRow> gram(r, PackedRow(words_for(r), 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (symplectic_product(m[i], m[j])) gram[i][j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }
  // The Gram matrix is alternating, so its rank is even.
  return rank_of(std::move(gram)) / 2;
}

SymplecticMatrix SymplecticDecomposition::to_matrix(std::size_t num_qubits) const {
  SymplecticMatrix out = pair_matrix(num_qubits);
  out.append(isotropic_matrix(num_qubits));
  return out;
}

SymplecticMatrix SymplecticDecomposition::pair_matrix(std::size_t num_qubits) const {
  SymplecticMatrix out(num_qubits);
  for (const auto& [g, h] : pairs) {
    out.push_back(g);
    out.push_back(h);
  }
  return out;
}

SymplecticMatrix SymplecticDecomposition::isotropic_matrix(std::size_t num_qubits) const {
  return SymplecticMatrix(num_qubits, isotropic);
}

SymplecticDecomposition symplectic_gram_schmidt(const SymplecticMatrix& m) {
  if (gf2_rank(m) != m.size()) {
    throw std::invalid_argument("symplectic Gram-Schmidt needs independent rows");
  }
  std::vector<PauliOp> remaining = m.rows();
  SymplecticDecomposition out;
  while (!remaining.empty()) {
    PauliOp pivot = remaining.front();
    remaining.erase(remaining.begin());
    auto partner_it = std::find_if(remaining.begin(), remaining.end(), [&](const PauliOp& r) {
      return symplectic_product(pivot, r) == 1;
    });
    if (partner_it == remaining.end()) {
      out.isotropic.push_back(std::move(pivot));
      continue;
    }
    PauliOp partner = *partner_it;
    remaining.erase(partner_it);
    // Project the rest onto the complement of span{pivot, partner}.
    for (auto& r : remaining) {
      const bool with_partner = symplectic_product(r, partner);
      const bool with_pivot = symplectic_product(r, pivot);
      if (with_partner) r *= pivot;
      if (with_pivot) r *= partner;
    }
    out.pairs.emplace_back(std::move(pivot), std::move(partner));
  }
  return out;
}

GroupEnumerator::GroupEnumerator(const SymplecticMatrix& generators, std::uint64_t cap)
    : generators_(generators.rows()), current_(generators.num_qubits()) {
  if (generators.size() >= 63 || (std::uint64_t{1} << generators.size()) > cap) {
    throw std::domain_error("group of order 2^" + std::to_string(generators.size()) +
                            " exceeds the enumeration cap of " + std::to_string(cap));
  }
  if (gf2_rank(generators) != generators.size()) {
    throw std::invalid_argument("group enumeration needs independent generators");
  }
  order_ = std::uint64_t{1} << generators.size();
}

bool GroupEnumerator::next() {
  if (step_ >= order_) return false;
  if (step_ > 0) {
    const int flip = std::countr_zero(step_);
    current_ *= generators_[flip];
    subset_ ^= std::uint64_t{1} << flip;
  }
  ++step_;
  return true;
}

std::vector<PauliOp> enumerate_group(const SymplecticMatrix& generators, std::uint64_t cap) {
  GroupEnumerator it(generators, cap);
  std::vector<PauliOp> out;
  out.reserve(it.group_order());
  while (it.next()) out.push_back(it.current());
  return out;
}

CliffordCircuit CliffordCircuit::parse(std::string_view text, std::size_t num_qubits) {
  CliffordCircuit circuit(num_qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op)) continue;
    std::size_t control = 0;
    std::size_t target = 0;
    std::string extra;
    if (op != "CNOT" || !(fields >> control >> target) || (fields >> extra)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected `CNOT <control> <target>`");
    }
    circuit.add_cnot(control, target);
  }
  return circuit;
}

void CliffordCircuit::add_cnot(std::size_t control, std::size_t target) {
  if (control >= num_qubits_ || target >= num_qubits_) {
    throw std::out_of_range("CNOT " + std::to_string(control) + " " + std::to_string(target) +
                            " out of range for " + std::to_string(num_qubits_) + " qubits");
  }
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  gates_.push_back({control, target});
}

std::string CliffordCircuit::str() const {
  std::string out;
  for (const auto& g : gates_) {
    out += "CNOT " + std::to_string(g.control) + " " + std::to_string(g.target) + "\n";
  }
  return out;
}

PauliOp conjugate_through_circuit(const CliffordCircuit& circuit, const PauliOp& p) {
  if (circuit.num_qubits() != p.num_qubits()) {
    throw std::invalid_argument("circuit acts on " + std::to_string(circuit.num_qubits()) +
                                " qubits, operator on " + std::to_string(p.num_qubits()));
  }
  PauliOp out = p;
  for (const auto& g : circuit.gates()) {
    // X spreads control -> target, Z spreads target -> control.
    const bool x_t = out.x(g.target) ^ out.x(g.control);
    const bool z_c = out.z(g.control) ^ out.z(g.target);
    out.set(g.target, x_t, out.z(g.target));
    out.set(g.control, out.x(g.control), z_c);
  }
  return out;
}

}  // namespace eaqec
