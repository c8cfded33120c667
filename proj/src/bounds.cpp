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

#include "eaqec/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eaqec/enumerators.hpp"

namespace eaqec {

namespace {

BigInt pow2(int e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

BigInt pow3(int e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return out;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt sphere(int n, int t) {
  BigInt total = 0;
  for (int j = 0; j <= t && j <= n; ++j) total += pow3(j) * binomial(n, j);
  return total;
}

void check_params(int n, int k, int c) {
  if (n < 1 || k < 0 || k > n || c < 0 || c > n - k) {
    throw std::invalid_argument("invalid parameters [[" + std::to_string(n) + "," +
                                std::to_string(k) + ";" + std::to_string(c) + "]]");
  }
}

// Declares X_0..X_n and returns the index of X_0.
std::size_t add_family(IpProblem& p, char letter, int n) {
  const std::size_t first = p.num_variables();
  for (int w = 0; w <= n; ++w) p.add_variable(std::string(1, letter) + std::to_string(w));
  return first;
}

// X_0 = 1, 0 <= X_w <= order, sum X_w = order.
void add_enumerator_block(IpProblem& p, std::size_t x, int n, const BigInt& order,
                          const std::string& name) {
  p.add_constraint({{x, 1}}, Relation::kEqual, 1, name + "0");
  std::vector<LinearTerm> sum;
  for (int w = 0; w <= n; ++w) {
    if (w > 0) p.add_constraint({{x + w, 1}}, Relation::kLessEqual, Rational(order), name + "max");
    sum.push_back({x + static_cast<std::size_t>(w), 1});
  }
  p.add_constraint(std::move(sum), Relation::kEqual, Rational(order), name + "sum");
}

// Y_w - (1/order) sum_w' P_w(w') X_w' = 0 for every w.
void add_macwilliams_block(IpProblem& p, std::size_t y, std::size_t x, int n,
                           const BigInt& order, const std::string& name) {
  for (int w = 0; w <= n; ++w) {
    std::vector<LinearTerm> terms{{y + w, 1}};
    for (int wp = 0; wp <= n; ++wp) {
      terms.push_back({x + static_cast<std::size_t>(wp),
                       -Rational(krawtchouk(w, wp, n)) / Rational(order)});
    }
    p.add_constraint(std::move(terms), Relation::kEqual, 0, name + std::to_string(w));
  }
}

}  // namespace

int singleton_bound(int n, int k, int c) {
  check_params(n, k, c);
  return (n - k + c) / 2 + 1;
}

HammingBound hamming_bound(int n, int k, int c) {
  check_params(n, k, c);
  HammingBound out;
  out.applicable = c == n - k;
  const BigInt syndromes = pow2(n - k + c);
  for (int d = 2; d <= n; ++d) {
    const int t = (d - 1) / 2;
    BigInt needed = sphere(n, t);
    if (d % 2 == 0) needed += pow3(t) * binomial(n - 1, t);
    if (needed > syndromes) break;
    out.d = d;
  }
  return out;
}

int plotkin_bound(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("plotkin bound needs 1 <= k <= n");
  const BigInt m = pow2(2 * k);
  const BigInt num = 3 * BigInt(n) * m;
  const BigInt den = 4 * (m - 1);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return static_cast<int>(q.get_si());
}

std::optional<int> gilbert_varshamov(int n, int d, int c) {
  if (n < 1 || d < 1 || c < 0 || c > n) throw std::invalid_argument("invalid GV parameters");
  const BigInt volume = sphere(n, d - 1);
  const BigInt target = pow2(n + c);
  // Smallest integer k with volume * 2^k >= 2^(n+c); volume <= 4^n bounds k below.
  int k = c - n - 1;
  while (volume * pow2(std::max(k, 0)) < target * pow2(std::max(-k, 0))) ++k;
  if (k < 0 || k > n - c) return std::nullopt;
  return k;
}

IpProblem build_lp_maximal(int n, int k, int d, LpTarget target) {
  if (n < 1 || k < 1 || k > n || d < 1) {
    throw std::invalid_argument("maximal LP system needs 1 <= k <= n and d >= 1");
  }
  IpProblem p;
  const std::size_t a = add_family(p, 'A', n);
  const std::size_t b = add_family(p, 'B', n);
  const BigInt order_s = pow2(2 * (n - k));
  add_enumerator_block(p, a, n, order_s, "A");
  add_enumerator_block(p, b, n, pow2(2 * k), "B");
  add_macwilliams_block(p, b, a, n, order_s, "mw");
  const std::size_t zeroed = target == LpTarget::kCode ? b : a;
  for (int w = 1; w < d && w <= n; ++w) {
    p.add_constraint({{zeroed + w, 1}}, Relation::kEqual, 0, "dist" + std::to_string(w));
  }
  return p;
}

IpProblem build_lp_general(int n, int k, int c, int d, LpTarget target) {
  if (n < 1 || k < 1 || c < 1 || c >= n - k || d < 1) {
    throw std::invalid_argument("general LP system needs k >= 1, 0 < c < n-k and d >= 1");
  }
  IpProblem p;
  const std::size_t a = add_family(p, 'A', n);
  const std::size_t b = add_family(p, 'B', n);
  const std::size_t cc = add_family(p, 'C', n);
  const std::size_t dd = add_family(p, 'D', n);
  const BigInt order_a = pow2(n - k + c);
  const BigInt order_c = pow2(n - k - c);
  add_enumerator_block(p, a, n, order_a, "A");
  add_enumerator_block(p, b, n, pow2(n + k - c), "B");
  add_enumerator_block(p, cc, n, order_c, "C");
  add_enumerator_block(p, dd, n, pow2(n + k + c), "D");
  for (int w = 1; w <= n; ++w) {
    const auto sw = static_cast<std::size_t>(w);
    p.add_constraint({{dd + sw, 1}, {a + sw, -1}}, Relation::kGreaterEqual, 0, "D>=A");
    p.add_constraint({{dd + sw, 1}, {b + sw, -1}}, Relation::kGreaterEqual, 0, "D>=B");
    p.add_constraint({{dd + sw, 1}, {cc + sw, -1}}, Relation::kGreaterEqual, 0, "D>=C");
    p.add_constraint({{a + sw, 1}, {cc + sw, -1}}, Relation::kGreaterEqual, 0, "A>=C");
    p.add_constraint({{b + sw, 1}, {cc + sw, -1}}, Relation::kGreaterEqual, 0, "B>=C");
  }
  add_macwilliams_block(p, b, a, n, order_a, "mwB");
  add_macwilliams_block(p, dd, cc, n, order_c, "mwD");
  const std::size_t tied = target == LpTarget::kCode ? b : a;
  for (int w = 1; w < d && w <= n; ++w) {
    const auto sw = static_cast<std::size_t>(w);
    p.add_constraint({{tied + sw, 1}, {cc + sw, -1}}, Relation::kEqual, 0, "dist" + std::to_string(w));
  }
  return p;
}

IpProblem build_lp(int n, int k, int c, int d, LpTarget target) {
  check_params(n, k, c);
  if (c == n - k) return build_lp_maximal(n, k, d, target);
  return build_lp_general(n, k, c, d, target);
}

LpBoundResult lp_bound(int n, int k, int c, const LpBoundOptions& options) {
  check_params(n, k, c);
  if (k < 1) throw std::invalid_argument("LP bound needs k >= 1");
  if (c == 0 && n != k) throw std::invalid_argument("LP bound needs c > 0 or c = n-k");

  LpBoundResult result;
  for (int d = 2; d <= n + 1; ++d) {
    if (!lp_relaxation_feasible(build_lp(n, k, c, d, options.target))) {
      result.relaxation_infeasible_at = d;
      break;
    }
  }
  if (result.relaxation_infeasible_at == 0) {
    throw std::logic_error("LP relaxation feasible with every weight below n+1 excluded");
  }
  const int d_lp = result.relaxation_infeasible_at;
  if (d_lp + 1 <= n + 1 && lp_relaxation_feasible(build_lp(n, k, c, d_lp + 1, options.target))) {
    throw std::logic_error("LP relaxation infeasibility is not monotone in d");
  }
  result.upper = d_lp - 1;
  result.level = LpLevel::kRelaxation;
  if (!options.integer_stage) return result;

  for (int d = d_lp - 1; d >= 1; --d) {
    const IpVerdict v = solve_ip(build_lp(n, k, c, d, options.target), options.node_limit,
                                 options.branch_rule);
    result.nodes += v.nodes_explored;
    result.upper = d;
    if (v.status == IpStatus::kIntegerFeasible) {
      result.status = IpStatus::kInfeasible;
      result.witness = v.witness;
      return result;
    }
    if (v.status == IpStatus::kUndecided) {
      result.status = IpStatus::kUndecided;
      return result;
    }
    result.level = LpLevel::kInteger;
  }
  // Even d = 1 has no integer solution: no code with these parameters.
  result.upper = 0;
  result.status = IpStatus::kInfeasible;
  return result;
}

std::string lp_bound_str(const LpBoundResult& result) {
  std::ostringstream out;
  out << "upper=" << result.upper << "\n";
  out << "status=" << to_string(result.status) << "\n";
  out << "decided_by=" << (result.level == LpLevel::kRelaxation ? "lp-relaxation" : "integer-program")
      << "\n";
  out << "relaxation_infeasible_at=" << result.relaxation_infeasible_at << "\n";
  out << "nodes=" << result.nodes << "\n";
  return out.str();
}

void LowerBoundDb::add(int n, int k, int c, int d, std::string provenance) {
  auto key = std::make_tuple(n, k, c);
  auto it = entries_.find(key);
  if (it == entries_.end() || d > it->second.d) entries_[key] = {d, std::move(provenance)};
}

std::optional<LowerBoundEntry> LowerBoundDb::lookup(int n, int k, int c) const {
  auto it = entries_.find(std::make_tuple(n, k, c));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

BoundReport bound_report(int n, int k, int c, const LowerBoundDb& lower_db,
                         const BoundReportOptions& options) {
  check_params(n, k, c);
  BoundReport r;
  r.n = n;
  r.k = k;
  r.c = c;
  r.singleton = singleton_bound(n, k, c);
  r.hamming = hamming_bound(n, k, c);
  if (k >= 1) r.plotkin = plotkin_bound(n, k);
  const bool lp_applies = k >= 1 && (c == n - k || c > 0);
  if (options.use_lp && lp_applies) {
    r.lp = lp_bound(n, k, c, options.lp);
    r.lp_upper = r.lp->upper;
  }
  if (c == n - k && n % 2 == 0 && k == 1) {
    r.exclusion_cap = n - 1;
    r.exclusion_tag = "NoEvenRepetition";
  } else if (c == n - k && n % 2 == 0 && k == n - 1) {
    r.exclusion_cap = 1;
    r.exclusion_tag = "NoEvenAccumulator";
  }

  // Candidates in tie-break priority order.
  std::vector<std::pair<std::optional<int>, std::string>> uppers{
      {r.exclusion_cap, r.exclusion_tag},
      {r.lp_upper, "LP"},
      {r.plotkin, "Plotkin"},
      {r.singleton, "Singleton"},
  };
  if (r.hamming.applicable) uppers.emplace_back(r.hamming.d, "Hamming");
  std::optional<int> best;
  for (const auto& [value, tag] : uppers) {
    if (value && (!best || *value < *best)) {
      best = value;
      r.upper_provenance = tag;
    }
  }
  r.final_upper = *best;
  if (r.final_upper >= 1) r.gv_k = gilbert_varshamov(n, r.final_upper, c);

  if (auto entry = lower_db.lookup(n, k, c)) {
    if (entry->d > r.final_upper) {
      throw std::domain_error("lower bound " + std::to_string(entry->d) + " (" + entry->provenance +
                              ") exceeds upper bound " + std::to_string(r.final_upper) + " (" +
                              r.upper_provenance + ")");
    }
    r.lower = entry->d;
    r.lower_provenance = entry->provenance;
  }
  return r;
}

std::string bound_report_str(const BoundReport& r) {
  std::ostringstream out;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "n=" << r.n << "\nk=" << r.k << "\nc=" << r.c << "\n";
  out << "singleton=" << opt(r.singleton) << "\n";
  out << "hamming=" << r.hamming.d << (r.hamming.applicable ? "" : " (not applicable)") << "\n";
  out << "plotkin=" << opt(r.plotkin) << "\n";
  out << "lp=" << opt(r.lp_upper);
  if (r.lp) out << " (" << to_string(r.lp->status) << ")";
  out << "\n";
  if (r.exclusion_cap) out << "exclusion=" << *r.exclusion_cap << " (" << r.exclusion_tag << ")\n";
  out << "gv_k=" << opt(r.gv_k) << "\n";
  out << "lower=" << opt(r.lower);
  if (r.lower) out << " (" << r.lower_provenance << ")";
  out << "\n";
  out << "final_upper=" << r.final_upper << " (" << r.upper_provenance << ")\n";
  return out.str();
}

}  // namespace eaqec
