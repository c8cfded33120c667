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

#ifndef EAQEC_ENUMERATORS_HPP
#define EAQEC_ENUMERATORS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "eaqec/code.hpp"
#include "eaqec/pauli.hpp"

namespace eaqec {

using BigInt = mpz_class;

/// Weight distribution (A_0, ..., A_n) of a set of 2^log2_order Pauli operators.
///
/// log2_order is carried explicitly so hypothetical enumerators (e.g. LP
/// witnesses) can be transformed too.
struct WeightEnumerator {
  std::size_t n = 0;
  std::vector<BigInt> coeffs;
  std::size_t log2_order = 0;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Throws std::invalid_argument unless coeffs[0] = 1, every coefficient is
/// nonnegative, and the coefficients sum to 2^log2_order.
void check_well_formed(const WeightEnumerator& e);

WeightEnumerator make_enumerator(std::size_t log2_order, const std::vector<long long>& coeffs);

/// P_w(w', n) = sum_u (-1)^u 3^(w-u) C(w', u) C(n-w', w-u).
BigInt krawtchouk(int w, int wp, int n);

/// Histogram of weights over the group generated by independent rows.
WeightEnumerator weight_enumerator(const SymplecticMatrix& generators,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// B_w = 2^-log2_order * sum_w' P_w(w', n) A_w'.
///
/// Throws std::domain_error if some B_w is negative or not an integer, which
/// means the input cannot be the enumerator of a group.
WeightEnumerator macwilliams_transform(const WeightEnumerator& a);

/// Smallest w > 0 with b_w - c_w > 0. Throws std::domain_error if none.
std::size_t distance_from_enumerators(const WeightEnumerator& b, const WeightEnumerator& c_iso);

/// Smallest w > 0 with a_w - c_w > 0. Throws std::domain_error if none.
std::size_t dual_distance_from_enumerators(const WeightEnumerator& a,
                                           const WeightEnumerator& c_iso);

/// Enumerators of the four groups attached to a code.
struct CodeEnumerators {
  WeightEnumerator stabilizer;      // A: S_S x S_I
  WeightEnumerator logical;         // B: L x S_I
  WeightEnumerator isotropic;       // C: S_I
  WeightEnumerator full_normalizer; // D: L x S_S x S_I
};

enum class CodeGroup { kStabilizer, kLogical, kIsotropic, kFullNormalizer };

/// Parses "S", "L", "SI" or "D" (also the long names stabilizer, logical,
/// isotropic, normalizer).
CodeGroup parse_code_group(const std::string& label);
std::string code_group_label(CodeGroup group);

SymplecticMatrix group_generators(const EaqecCode& code, CodeGroup group);

WeightEnumerator code_enumerator(const EaqecCode& code, CodeGroup group,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// `n,label,c0,...,cn`
std::string enumerator_csv_row(const WeightEnumerator& e, const std::string& label);

/// JSON record {"n", "group_label", "log2_order", "coeffs"}.
std::string enumerator_json(const WeightEnumerator& e, const std::string& label);

/// Comma-separated coefficients.
std::string coeffs_str(const WeightEnumerator& e);

}  // namespace eaqec

#endif  // EAQEC_ENUMERATORS_HPP
