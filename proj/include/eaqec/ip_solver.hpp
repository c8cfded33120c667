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

#ifndef EAQEC_IP_SOLVER_HPP
#define EAQEC_IP_SOLVER_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eaqec {

using Rational = mpq_class;
using BigInt = mpz_class;

inline constexpr std::uint64_t kDefaultNodeLimit = 1'000'000;

enum class Relation { kEqual, kLessEqual, kGreaterEqual };

struct LinearTerm {
  std::size_t var;
  Rational coeff;
};

struct Constraint {
  std::vector<LinearTerm> terms;
  Relation relation;
  Rational rhs;
  std::string label;
};

/// A pure feasibility integer program: every variable is a nonnegative
/// integer, every constraint linear with exact rational coefficients.
class IpProblem {
 public:
  /// Nonnegative integer variable. Throws std::invalid_argument on a duplicate name.
  std::size_t add_variable(std::string name);

  /// Terms on the same variable are merged; zero coefficients dropped.
  void add_constraint(std::vector<LinearTerm> terms, Relation relation, Rational rhs,
                      std::string label = {});

  std::size_t num_variables() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Index of a named variable. Throws std::out_of_range.
  std::size_t variable(const std::string& name) const;

  /// Exact check of a nonnegative integer assignment against every constraint.
  bool is_satisfied_by(const std::vector<BigInt>& assignment) const;

  /// Human-readable listing, one constraint per line.
  std::string str() const;

 private:
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

enum class IpStatus { kInfeasible, kIntegerFeasible, kUndecided };

std::string to_string(IpStatus status);

struct IpVerdict {
  IpStatus status = IpStatus::kUndecided;
  std::optional<std::vector<BigInt>> witness;
  std::uint64_t nodes_explored = 0;
  /// True when the root LP relaxation alone was infeasible.
  bool decided_by_relaxation = false;
};

/// Feasibility of the LP relaxation only (exact rational simplex). Rows with a
/// single variable are applied as integer-rounded bounds first.
bool lp_relaxation_feasible(const IpProblem& problem);

/// Which fractional variable a branch-and-bound node splits on.
enum class BranchRule {
  /// Lowest-index fractional variable. On enumerator systems this fixes the
  /// low-weight coefficients first and finds witnesses far sooner.
  kFirstFractional,
  /// Fraction closest to 1/2; ties go to the lowest index.
  kMostFractional,
};

/// Exact rational simplex (Bland's rule) on the LP relaxation, then depth-first
/// branch-and-bound (floor child first, children warm-started from the parent
/// tableau) until an integer witness is found, the tree is exhausted, or
/// `node_limit` LPs have been solved.
IpVerdict solve_ip(const IpProblem& problem, std::uint64_t node_limit = kDefaultNodeLimit,
                   BranchRule rule = BranchRule::kFirstFractional);

/// Verdict as structured text (`status=...`, `nodes=...`, `witness=...`).
std::string verdict_str(const IpProblem& problem, const IpVerdict& verdict);

}  // namespace eaqec

#endif  // EAQEC_IP_SOLVER_HPP
