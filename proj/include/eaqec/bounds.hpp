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

#ifndef EAQEC_BOUNDS_HPP
#define EAQEC_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "eaqec/ip_solver.hpp"

namespace eaqec {

/// Largest d with n-k+c >= 2(d-1).
int singleton_bound(int n, int k, int c);

struct HammingBound {
  int d = 1;
  /// The sphere-packing argument needs a nondegenerate code, which is only
  /// guaranteed when c = n-k.
  bool applicable = false;
};

/// Largest d such that every d' <= d passes the packing test against the
/// 2^(n-k+c) available syndromes. Odd d = 2t+1 needs sum_{j<=t} 3^j C(n,j)
/// syndromes; even d = 2t+2 additionally needs 3^t C(n-1,t). Capped at n
/// when k >= 1.
HammingBound hamming_bound(int n, int k, int c);

/// floor(3nM / (4(M-1))) with M = 4^k. Throws std::invalid_argument if k < 1.
int plotkin_bound(int n, int k);

/// k = ceil(log2(2^(n+c) / sum_{j<d} 3^j C(n,j))) when 0 <= k <= n-c.
std::optional<int> gilbert_varshamov(int n, int d, int c);

/// Which distance the distance block constrains: the code's (B_w = C_w)
/// or the dual code's (A_w = C_w).
enum class LpTarget { kCode, kDual };

/// Maximal-entanglement system in variables A_0..A_n, B_0..B_n.
/// Throws std::invalid_argument unless 1 <= k <= n and d >= 1.
IpProblem build_lp_maximal(int n, int k, int d, LpTarget target = LpTarget::kCode);

/// Four-enumerator system in A, B, C, D for 0 < c < n-k.
/// Throws std::invalid_argument on bad parameters.
IpProblem build_lp_general(int n, int k, int c, int d, LpTarget target = LpTarget::kCode);

/// build_lp_maximal when c = n-k, build_lp_general when 0 < c < n-k.
IpProblem build_lp(int n, int k, int c, int d, LpTarget target = LpTarget::kCode);

enum class LpLevel { kRelaxation, kInteger };

struct LpBoundOptions {
  LpTarget target = LpTarget::kCode;
  std::uint64_t node_limit = kDefaultNodeLimit;
  BranchRule branch_rule = BranchRule::kFirstFractional;
  /// When false only LP relaxations are solved.
  bool integer_stage = true;
};

struct LpBoundResult {
  /// d* - 1 where d* is the smallest d proven infeasible.
  int upper = 0;
  /// kInfeasible when upper + 1 is proven infeasible and upper has an integer
  /// witness; kUndecided when the integer stage ran out of nodes or was
  /// skipped (upper is still a valid bound, possibly not the tightest).
  IpStatus status = IpStatus::kUndecided;
  /// Level that proved d* infeasible.
  LpLevel level = LpLevel::kRelaxation;
  /// Smallest d whose LP relaxation is infeasible.
  int relaxation_infeasible_at = 0;
  std::optional<std::vector<BigInt>> witness;
  std::uint64_t nodes = 0;
};

/// Scans LP relaxations d = 2, 3, ..., n+1 for the first infeasible d, then
/// walks down with the integer program until a d with an integer witness.
/// Throws std::invalid_argument when k < 1 or c is outside 0 < c <= n-k.
/// Throws std::logic_error if relaxation infeasibility is not monotone in d.
LpBoundResult lp_bound(int n, int k, int c, const LpBoundOptions& options = {});

std::string lp_bound_str(const LpBoundResult& result);

struct LowerBoundEntry {
  int d = 0;
  std::string provenance;
};

/// Known lower bounds on the distance keyed by (n, k, c).
class LowerBoundDb {
 public:
  void add(int n, int k, int c, int d, std::string provenance);
  std::optional<LowerBoundEntry> lookup(int n, int k, int c) const;
  const std::map<std::tuple<int, int, int>, LowerBoundEntry>& entries() const { return entries_; }

 private:
  std::map<std::tuple<int, int, int>, LowerBoundEntry> entries_;
};

struct BoundReport {
  int n = 0, k = 0, c = 0;
  std::optional<int> singleton;
  HammingBound hamming;
  std::optional<int> plotkin;
  std::optional<int> lp_upper;
  std::optional<LpBoundResult> lp;
  /// Exclusion cap for the even-n repetition and accumulator parameters.
  std::optional<int> exclusion_cap;
  std::string exclusion_tag;
  /// Gilbert-Varshamov k at d = final_upper.
  std::optional<int> gv_k;
  std::optional<int> lower;
  std::string lower_provenance;
  int final_upper = 0;
  /// One of NoEvenRepetition, NoEvenAccumulator, LP, Plotkin, Singleton, Hamming.
  std::string upper_provenance;
};

struct BoundReportOptions {
  bool use_lp = true;
  LpBoundOptions lp;
};

/// Throws std::invalid_argument on invalid parameters.
BoundReport bound_report(int n, int k, int c, const LowerBoundDb& lower_db,
                         const BoundReportOptions& options = {});

/// `key=value` lines.
std::string bound_report_str(const BoundReport& report);

}  // namespace eaqec

#endif  // EAQEC_BOUNDS_HPP
