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

#include "eaqec/enumerators.hpp"

#include <json.hpp>

#include <stdexcept>

namespace eaqec {

namespace {

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

std::size_t first_excess(const WeightEnumerator& top, const WeightEnumerator& bottom) {
  if (top.n != bottom.n) throw std::invalid_argument("enumerators have different lengths");
  for (std::size_t w = 1; w <= top.n; ++w) {
    if (top.coeffs[w] < bottom.coeffs[w]) {
      throw std::invalid_argument("enumerator is not dominated componentwise at w = " +
                                  std::to_string(w));
    }
    if (top.coeffs[w] > bottom.coeffs[w]) return w;
  }
  throw std::domain_error("no weight w > 0 separates the enumerators (k = 0?)");
}

}  // namespace

void check_well_formed(const WeightEnumerator& e) {
  if (e.coeffs.size() != e.n + 1) {
    throw std::invalid_argument("enumerator of length " + std::to_string(e.n) + " needs n+1 coefficients");
  }
  if (e.coeffs[0] != 1) throw std::invalid_argument("enumerator must have coefficient 1 at weight 0");
  BigInt total = 0;
  for (const auto& a : e.coeffs) {
    if (a < 0) throw std::invalid_argument("enumerator has a negative coefficient");
    total += a;
  }
  if (total != pow_ui(2, e.log2_order)) {
    throw std::invalid_argument("enumerator coefficients sum to " + total.get_str() +
                                ", expected 2^" + std::to_string(e.log2_order));
  }
}

WeightEnumerator make_enumerator(std::size_t log2_order, const std::vector<long long>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  WeightEnumerator e;
  e.n = coeffs.size() - 1;
  e.log2_order = log2_order;
  for (auto a : coeffs) e.coeffs.emplace_back(static_cast<long>(a));
  return e;
}

BigInt krawtchouk(int w, int wp, int n) {
  if (n < 0 || w < 0 || wp < 0 || w > n || wp > n) {
    throw std::out_of_range("krawtchouk arguments must satisfy 0 <= w, w' <= n");
  }
  BigInt sum = 0;
  for (int u = 0; u <= w; ++u) {
    BigInt term = pow_ui(3, static_cast<unsigned long>(w - u)) * binomial(wp, u) * binomial(n - wp, w - u);
    if (u % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

WeightEnumerator weight_enumerator(const SymplecticMatrix& generators, std::uint64_t cap) {
  GroupEnumerator it(generators, cap);
  const std::size_t n = generators.num_qubits();
  std::vector<std::uint64_t> histogram(n + 1, 0);
  while (it.next()) ++histogram[weight(it.current())];
  WeightEnumerator e;
  e.n = n;
  e.log2_order = generators.size();
  for (auto h : histogram) {
    BigInt v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(h), 0, 0, &h);
    e.coeffs.push_back(v);
  }
  return e;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& a) {
  if (a.coeffs.size() != a.n + 1) throw std::invalid_argument("malformed enumerator");
  if (a.log2_order > 2 * a.n) throw std::invalid_argument("group order exceeds 4^n");
  const int n = static_cast<int>(a.n);
  WeightEnumerator b;
  b.n = a.n;
  b.log2_order = 2 * a.n - a.log2_order;
  for (int w = 0; w <= n; ++w) {
    BigInt sum = 0;
    for (int wp = 0; wp <= n; ++wp) sum += krawtchouk(w, wp, n) * a.coeffs[wp];
    // Exact division by 2^log2_order.
    if (mpz_scan1(sum.get_mpz_t(), 0) < a.log2_order && sum != 0) {
      throw std::domain_error("MacWilliams transform gives a non-integer coefficient at w = " +
                              std::to_string(w));
    }
    BigInt q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), sum.get_mpz_t(), a.log2_order);
    if (q < 0) {
      throw std::domain_error("MacWilliams transform gives a negative coefficient at w = " +
                              std::to_string(w));
    }
    b.coeffs.push_back(q);
  }
  return b;
}

std::size_t distance_from_enumerators(const WeightEnumerator& b, const WeightEnumerator& c_iso) {
  return first_excess(b, c_iso);
}

std::size_t dual_distance_from_enumerators(const WeightEnumerator& a,
                                           const WeightEnumerator& c_iso) {
  return first_excess(a, c_iso);
}

CodeGroup parse_code_group(const std::string& label) {
  if (label == "S" || label == "stabilizer") return CodeGroup::kStabilizer;
  if (label == "L" || label == "logical") return CodeGroup::kLogical;
  if (label == "SI" || label == "isotropic") return CodeGroup::kIsotropic;
  if (label == "D" || label == "normalizer") return CodeGroup::kFullNormalizer;
  throw std::invalid_argument("unknown group \"" + label + "\" (expected S, L, SI or D)");
}

std::string code_group_label(CodeGroup group) {
  switch (group) {
    case CodeGroup::kStabilizer: return "S";
    case CodeGroup::kLogical: return "L";
    case CodeGroup::kIsotropic: return "SI";
    case CodeGroup::kFullNormalizer: return "D";
  }
  return "?";
}

SymplecticMatrix group_generators(const EaqecCode& code, CodeGroup group) {
  const auto parts = decompose_stabilizer(code);
  SymplecticMatrix out(code.n);
  switch (group) {
    case CodeGroup::kStabilizer:
      out = parts.to_matrix(code.n);
      break;
    case CodeGroup::kLogical:
      out = code.logical;
      out.append(parts.isotropic_matrix(code.n));
      break;
    case CodeGroup::kIsotropic:
      out = parts.isotropic_matrix(code.n);
      break;
    case CodeGroup::kFullNormalizer:
      out = code.logical;
      out.append(parts.to_matrix(code.n));
      break;
  }
  return out;
}

WeightEnumerator code_enumerator(const EaqecCode& code, CodeGroup group, std::uint64_t cap) {
  return weight_enumerator(group_generators(code, group), cap);
}

std::string coeffs_str(const WeightEnumerator& e) {
  std::string out;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    if (i) out += ',';
    out += e.coeffs[i].get_str();
  }
  return out;
}

std::string enumerator_csv_row(const WeightEnumerator& e, const std::string& label) {
  return std::to_string(e.n) + "," + label + "," + coeffs_str(e);
}

std::string enumerator_json(const WeightEnumerator& e, const std::string& label) {
  nlohmann::json record;
  record["n"] = e.n;
  record["group_label"] = label;
  record["log2_order"] = e.log2_order;
  auto coeffs = nlohmann::json::array();
  for (const auto& a : e.coeffs) {
    if (a.fits_ulong_p()) {
      coeffs.push_back(a.get_ui());
    } else {
      coeffs.push_back(a.get_str());
    }
  }
  record["coeffs"] = coeffs;
  return record.dump();
}

}  // namespace eaqec
