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

#include "eaqec/ip_solver.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace eaqec {

namespace {

BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Variable bounds of one branch-and-bound node. Lower bounds are always
// finite because every variable is nonnegative.
struct VarBounds {
  std::vector<Rational> lo;
  std::vector<std::optional<Rational>> hi;

  bool empty_box() const {
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (hi[j] && *hi[j] < lo[j]) return true;
    }
    return false;
  }
};

struct Row {
  std::vector<LinearTerm> terms;
  Relation relation;
  Rational rhs;
};

// Problem split into variable bounds (from single-variable constraints) and
// general rows.
struct Prepared {
  std::size_t num_vars = 0;
  std::vector<Row> rows;
  VarBounds bounds;
  bool infeasible = false;
};

void tighten(VarBounds& b, std::size_t j, Relation rel, const Rational& value) {
  if (rel != Relation::kLessEqual) {
    const Rational lo{ceil_of(value)};
    if (lo > b.lo[j]) b.lo[j] = lo;
  }
  if (rel != Relation::kGreaterEqual) {
    const Rational hi{floor_of(value)};
    if (!b.hi[j] || hi < *b.hi[j]) b.hi[j] = hi;
  }
}

Prepared prepare(const IpProblem& problem) {
  Prepared p;
  p.num_vars = problem.num_variables();
  p.bounds.lo.assign(p.num_vars, Rational(0));
  p.bounds.hi.assign(p.num_vars, std::nullopt);
  for (const auto& c : problem.constraints()) {
    if (c.terms.empty()) {
      const int s = sgn(c.rhs);
      const bool ok = (c.relation == Relation::kEqual && s == 0) ||
                      (c.relation == Relation::kLessEqual && s >= 0) ||
                      (c.relation == Relation::kGreaterEqual && s <= 0);
      if (!ok) p.infeasible = true;
      continue;
    }
    if (c.terms.size() == 1) {
      // a x (rel) b  ->  x (rel') b / a; integrality rounds the bound inward.
      const auto& t = c.terms.front();
      Relation rel = c.relation;
      if (sgn(t.coeff) < 0) {
        if (rel == Relation::kLessEqual) {
          rel = Relation::kGreaterEqual;
        } else if (rel == Relation::kGreaterEqual) {
          rel = Relation::kLessEqual;
        }
      }
      tighten(p.bounds, t.var, rel, Rational(c.rhs / t.coeff));
      continue;
    }
    p.rows.push_back({c.terms, c.relation, c.rhs});
  }
  return p;
}

// Phase-one simplex with bounded variables on a dense rational tableau.
//
// Columns are [structural | slack per inequality row | artificial per row].
// Nonbasic variables sit at one of their bounds. Entering and leaving
// variables are chosen by Bland's smallest-index rule.
class BoundedSimplex {
 public:
  BoundedSimplex(const Prepared& p, const VarBounds& node) : num_vars_(p.num_vars) {
    const std::size_t m = p.rows.size();
    std::size_t slacks = 0;
    for (const auto& r : p.rows) slacks += r.relation != Relation::kEqual;
    num_cols_ = num_vars_ + slacks + m;
    lo_.assign(num_cols_, Rational(0));
    hi_.assign(num_cols_, std::nullopt);
    for (std::size_t j = 0; j < num_vars_; ++j) {
      lo_[j] = node.lo[j];
      hi_[j] = node.hi[j];
    }
    value_.assign(num_cols_, Rational(0));
    for (std::size_t j = 0; j < num_vars_; ++j) value_[j] = lo_[j];
    at_upper_.assign(num_cols_, false);
    basic_row_.assign(num_cols_, kNonbasic);

    tableau_.assign(m, std::vector<Rational>(num_cols_, Rational(0)));
    basis_.resize(m);
    reduced_.assign(num_cols_, Rational(0));
    std::size_t slack = num_vars_;
    for (std::size_t i = 0; i < m; ++i) {
      auto& row = tableau_[i];
      const auto& src = p.rows[i];
      Rational residual = src.rhs;
      for (const auto& t : src.terms) {
        row[t.var] += t.coeff;
        residual -= t.coeff * value_[t.var];
      }
      if (src.relation == Relation::kLessEqual) row[slack++] = 1;
      if (src.relation == Relation::kGreaterEqual) row[slack++] = -1;
      // Artificial column carries sign(residual) so it starts nonnegative.
      const std::size_t art = num_vars_ + slacks + i;
      if (sgn(residual) < 0) {
        for (auto& v : row) v = -v;
        residual = -residual;
      }
      row[art] = 1;
      basis_[i] = art;
      basic_row_[art] = i;
      value_[art] = residual;
      objective_ += residual;
    }
    first_artificial_ = num_vars_ + slacks;
    for (std::size_t j = 0; j < first_artificial_; ++j) {
      for (std::size_t i = 0; i < m; ++i) reduced_[j] -= tableau_[i][j];
    }
  }

  // Phase one from scratch. Returns true when the relaxation is feasible;
  // artificials are then pinned to zero so later restarts keep feasibility.
  bool run() {
    if (!minimize(Rational(0))) return false;
    for (std::size_t j = first_artificial_; j < num_cols_; ++j) hi_[j] = Rational(0);
    return true;
  }

  // Warm restart after tightening one bound of a basic variable: minimizes
  // (or maximizes) that variable until it meets the new bound.
  bool restrict_upper(std::size_t j, const Rational& bound) { return restrict(j, bound, true); }
  bool restrict_lower(std::size_t j, const Rational& bound) { return restrict(j, bound, false); }

  std::vector<Rational> solution() const {
    return {value_.begin(), value_.begin() + static_cast<std::ptrdiff_t>(num_vars_)};
  }

 private:
  static constexpr std::size_t kNonbasic = static_cast<std::size_t>(-1);

  bool fixed(std::size_t j) const { return hi_[j] && *hi_[j] == lo_[j]; }

  bool minimize(const Rational& stop) {
    while (objective_ > stop) {
      const auto entering = choose_entering();
      if (!entering) break;
      step(*entering);
    }
    return objective_ <= stop;
  }

  bool restrict(std::size_t j, const Rational& bound, bool upper) {
    if (basic_row_[j] == kNonbasic) {
      // Nonbasic values sit on integral bounds, so only a basic variable can
      // need a branch.
      throw std::logic_error("branching on a nonbasic variable");
    }
    const auto& row = tableau_[basic_row_[j]];
    const int sign = upper ? 1 : -1;
    for (std::size_t k = 0; k < num_cols_; ++k) reduced_[k] = -sign * row[k];
    reduced_[j] = 0;
    objective_ = sign * value_[j];
    if (upper) {
      hi_[j] = bound;
    } else {
      lo_[j] = bound;
    }
    // j itself blocks at the new bound, so the ratio test never runs off
    // along a ray of the relaxation.
    target_ = Target{j, bound, upper};
    const bool ok = minimize(Rational(sign) * bound);
    target_.reset();
    return ok;
  }

  std::optional<std::size_t> choose_entering() const {
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (basic_row_[j] != kNonbasic || fixed(j)) continue;
      const int s = sgn(reduced_[j]);
      if ((s < 0 && !at_upper_[j]) || (s > 0 && at_upper_[j])) return j;
    }
    return std::nullopt;
  }

  void step(std::size_t j) {
    const int dir = sgn(reduced_[j]) < 0 ? 1 : -1;
    // Ratio test; the entering variable may simply flip to its other bound.
    std::optional<Rational> theta;
    if (hi_[j]) theta = *hi_[j] - lo_[j];
    std::size_t leave_row = kNonbasic;
    std::size_t tie_index = j;
    bool leave_to_upper = false;
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      const int s = sgn(tableau_[i][j]);
      if (s == 0) continue;
      const std::size_t b = basis_[i];
      int rate_sign = -dir * s;
      Rational limit;
      if (target_ && b == target_->var) {
        limit = abs(value_[b] - target_->bound) / abs(tableau_[i][j]);
        rate_sign = target_->upper ? 1 : -1;
      } else if (rate_sign < 0) {
        limit = (value_[b] - lo_[b]) / abs(tableau_[i][j]);
      } else if (hi_[b]) {
        limit = (*hi_[b] - value_[b]) / abs(tableau_[i][j]);
      } else {
        continue;
      }
      if (!theta || limit < *theta || (limit == *theta && b < tie_index)) {
        theta = limit;
        leave_row = i;
        tie_index = b;
        leave_to_upper = rate_sign > 0;
      }
    }
    if (!theta) throw std::logic_error("phase-one simplex is unbounded");

    const Rational& t = *theta;
    if (sgn(t) != 0) {
      const Rational delta = dir > 0 ? t : Rational(-t);
      value_[j] += delta;
      for (std::size_t i = 0; i < tableau_.size(); ++i) {
        if (sgn(tableau_[i][j]) != 0) value_[basis_[i]] -= tableau_[i][j] * delta;
      }
      objective_ += reduced_[j] * delta;
    }

    if (leave_row == kNonbasic) {
      at_upper_[j] = dir > 0;
      return;
    }
    const std::size_t leaving = basis_[leave_row];
    value_[leaving] = leave_to_upper ? *hi_[leaving] : lo_[leaving];
    at_upper_[leaving] = leave_to_upper;
    basic_row_[leaving] = kNonbasic;
    if (leaving >= first_artificial_) hi_[leaving] = Rational(0);
    pivot(leave_row, j);
  }

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = tableau_[r];
    const Rational inv = 1 / prow[j];
    for (auto& v : prow) {
      if (sgn(v) != 0) v *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < num_cols_; ++c) {
      if (sgn(prow[c]) != 0) nz.push_back(c);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[j]) == 0) return;
      const Rational factor = row[j];
      for (auto c : nz) row[c] -= factor * prow[c];
    };
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (i != r) eliminate(tableau_[i]);
    }
    eliminate(reduced_);
    basis_[r] = j;
    basic_row_[j] = r;
    at_upper_[j] = false;
  }

  std::size_t num_vars_;
  std::size_t num_cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<Rational> lo_;
  std::vector<std::optional<Rational>> hi_;
  std::vector<Rational> value_;
  std::vector<bool> at_upper_;
  std::vector<std::size_t> basic_row_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> reduced_;
  Rational objective_{0};
  struct Target {
    std::size_t var;
    Rational bound;
    bool upper;
  };
  std::optional<Target> target_;
};

std::optional<std::vector<Rational>> solve_relaxation(const Prepared& p, const VarBounds& node) {
  if (node.empty_box()) return std::nullopt;
  BoundedSimplex simplex(p, node);
  if (!simplex.run()) return std::nullopt;
  return simplex.solution();
}

}  // namespace

std::size_t IpProblem::add_variable(std::string name) {
  if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
    throw std::invalid_argument("duplicate variable " + name);
  }
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

void IpProblem::add_constraint(std::vector<LinearTerm> terms, Relation relation, Rational rhs,
                               std::string label) {
  std::map<std::size_t, Rational> merged;
  for (auto& t : terms) {
    if (t.var >= names_.size()) {
      throw std::out_of_range("constraint references undeclared variable " + std::to_string(t.var));
    }
    merged[t.var] += t.coeff;
  }
  Constraint c{{}, relation, std::move(rhs), std::move(label)};
  c.rhs.canonicalize();
  for (auto& [var, coeff] : merged) {
    coeff.canonicalize();
    if (sgn(coeff) != 0) c.terms.push_back({var, coeff});
  }
  constraints_.push_back(std::move(c));
}

std::size_t IpProblem::variable(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("no variable named " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

bool IpProblem::is_satisfied_by(const std::vector<BigInt>& assignment) const {
  if (assignment.size() != names_.size()) return false;
  for (const auto& v : assignment) {
    if (v < 0) return false;
  }
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coeff * Rational(assignment[t.var]);
    const int cmp = ::cmp(lhs, c.rhs);
    if ((c.relation == Relation::kEqual && cmp != 0) ||
        (c.relation == Relation::kLessEqual && cmp > 0) ||
        (c.relation == Relation::kGreaterEqual && cmp < 0)) {
      return false;
    }
  }
  return true;
}

std::string IpProblem::str() const {
  std::ostringstream out;
  for (const auto& c : constraints_) {
    if (!c.label.empty()) out << c.label << ": ";
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
      const auto& t = c.terms[i];
      out << (i == 0 ? "" : " + ") << t.coeff.get_str() << "*" << names_[t.var];
    }
    if (c.terms.empty()) out << "0";
    out << (c.relation == Relation::kEqual ? " = " : c.relation == Relation::kLessEqual ? " <= " : " >= ")
        << c.rhs.get_str() << "\n";
  }
  return out.str();
}

std::string to_string(IpStatus status) {
  switch (status) {
    case IpStatus::kInfeasible: return "Infeasible";
    case IpStatus::kIntegerFeasible: return "IntegerFeasible";
    case IpStatus::kUndecided: return "Undecided";
  }
  return "?";
}

bool lp_relaxation_feasible(const IpProblem& problem) {
  const Prepared p = prepare(problem);
  if (p.infeasible) return false;
  return solve_relaxation(p, p.bounds).has_value();
}

IpVerdict solve_ip(const IpProblem& problem, std::uint64_t node_limit, BranchRule rule) {
  IpVerdict verdict;
  const Prepared p = prepare(problem);
  if (p.infeasible || p.bounds.empty_box()) {
    verdict.status = IpStatus::kInfeasible;
    verdict.decided_by_relaxation = true;
    return verdict;
  }
  // Each open node is its parent's final tableau plus one bound to tighten.
  struct Branch {
    std::shared_ptr<const BoundedSimplex> parent;
    std::size_t var;
    bool upper;
    Rational bound;
  };
  std::vector<Branch> stack;
  std::optional<BoundedSimplex> current;
  ++verdict.nodes_explored;
  current.emplace(p, p.bounds);
  if (!current->run()) {
    verdict.status = IpStatus::kInfeasible;
    verdict.decided_by_relaxation = true;
    return verdict;
  }
  while (true) {
    const auto x = current->solution();
    std::optional<std::size_t> branch;
    Rational best_gap;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (is_integral(x[j])) continue;
      if (rule == BranchRule::kFirstFractional) {
        branch = j;
        break;
      }
      const Rational gap = abs(x[j] - Rational(floor_of(x[j])) - Rational(1, 2));
      if (!branch || gap < best_gap) {
        branch = j;
        best_gap = gap;
      }
    }
    if (!branch) {
      std::vector<BigInt> witness;
      witness.reserve(x.size());
      for (const auto& v : x) witness.push_back(v.get_num());
      if (!problem.is_satisfied_by(witness)) {
        throw std::logic_error("integer LP vertex fails exact constraint replay");
      }
      verdict.status = IpStatus::kIntegerFeasible;
      verdict.witness = std::move(witness);
      return verdict;
    }
    const std::size_t j = *branch;
    auto parent = std::make_shared<const BoundedSimplex>(std::move(*current));
    current.reset();
    // Depth-first, floor branch popped first.
    stack.push_back({parent, j, false, Rational(ceil_of(x[j]))});
    stack.push_back({parent, j, true, Rational(floor_of(x[j]))});
    parent.reset();

    while (!current && !stack.empty()) {
      if (verdict.nodes_explored >= node_limit) {
        verdict.status = IpStatus::kUndecided;
        return verdict;
      }
      Branch next = std::move(stack.back());
      stack.pop_back();
      ++verdict.nodes_explored;
      current.emplace(*next.parent);
      next.parent.reset();
      const bool ok = next.upper ? current->restrict_upper(next.var, next.bound)
                                 : current->restrict_lower(next.var, next.bound);
      if (!ok) current.reset();
    }
    if (!current) break;
  }
  verdict.status = IpStatus::kInfeasible;
  return verdict;
}

std::string verdict_str(const IpProblem& problem, const IpVerdict& verdict) {
  std::ostringstream out;
  out << "status=" << to_string(verdict.status) << "\n";
  out << "nodes=" << verdict.nodes_explored << "\n";
  out << "decided_by=" << (verdict.decided_by_relaxation ? "lp-relaxation" : "branch-and-bound")
      << "\n";
  if (verdict.witness) {
    out << "witness=";
    for (std::size_t j = 0; j < verdict.witness->size(); ++j) {
      out << (j ? "," : "") << problem.variable_names()[j] << ":" << (*verdict.witness)[j].get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace eaqec
