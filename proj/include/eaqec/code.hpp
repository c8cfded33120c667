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

#ifndef EAQEC_CODE_HPP
#define EAQEC_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eaqec/pauli.hpp"

namespace eaqec {

/// An [[n,k,d;c]] entanglement-assisted stabilizer code.
///
/// `stabilizer` holds the n-k+c simplified generators of S' = S_S x S_I
/// (canonically: c symplectic pairs, then n-k-c isotropic rows) and
/// `logical` holds the 2k generators of L as k symplectic pairs.
struct EaqecCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t c = 0;
  SymplecticMatrix stabilizer;
  SymplecticMatrix logical;

  bool is_maximal_entanglement() const { return c == n - k; }
};

struct ValidationReport {
  bool valid = false;
  std::size_t derived_c = 0;
  std::vector<std::string> failures;
};

ValidationReport validate(const EaqecCode& code);

/// Reorders both generator sets into Gram-Schmidt canonical form. Rows that
/// are GF(2)-dependent are left untouched (validate() reports them).
EaqecCode canonicalize(EaqecCode code);

/// Splits the stabilizer into S_S pairs and S_I generators.
SymplecticDecomposition decompose_stabilizer(const EaqecCode& code);

/// The [[n,c,d';k]] code with L x S_I as stabilizer and S_S as logical group.
EaqecCode dual(const EaqecCode& code);

/// Minimum weight over (L x S_I) \ S_I by exhaustive enumeration.
///
/// Throws std::domain_error for k = 0 (distance undefined) or when the
/// 2^(2k + n-k-c) elements exceed `cap`.
std::size_t distance(const EaqecCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Reads the three-line text form:
///   n=<int> k=<int> c=<int>
///   S: <n-k+c Pauli strings>
///   L: <2k Pauli strings>
/// `#` starts a comment. The result is canonicalized.
EaqecCode parse_code(std::string_view text);

std::string serialize_code(const EaqecCode& code);

}  // namespace eaqec

#endif  // EAQEC_CODE_HPP
