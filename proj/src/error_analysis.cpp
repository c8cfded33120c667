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

#include "eaqec/error_analysis.hpp"

#include <bit>
#include <cmath>
#include <locale>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eaqec {

namespace {

constexpr double kWilsonZ = 1.959963984540054;

// Pauli on at most kMaxSimulationQubits qubits as x and z masks; bit q is qubit q.
struct SmallPauli {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
};

SmallPauli to_small(const PauliOp& p) {
  SmallPauli out;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    out.x |= static_cast<std::uint32_t>(p.x(q)) << q;
    out.z |= static_cast<std::uint32_t>(p.z(q)) << q;
  }
  return out;
}

std::uint32_t syndrome_of(const SmallPauli& e, const std::vector<SmallPauli>& rows) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto bit = std::popcount((e.x & rows[i].z) ^ (e.z & rows[i].x)) & 1;
    s |= static_cast<std::uint32_t>(bit) << i;
  }
  return s;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace

void check_depolarizing(double p, bool allow_boundary) {
  const bool ok = p >= 0.0 && (p < 0.75 || (allow_boundary && p == 0.75));
  if (!ok) throw std::invalid_argument("depolarizing probability must lie in [0, 3/4)");
}

double bhattacharyya(double p, bool allow_boundary) {
  check_depolarizing(p, allow_boundary);
  return 2.0 * std::sqrt(p * (1.0 - p) / 3.0) + 2.0 * p / 3.0;
}

double weight_enum_error_bound(const WeightEnumerator& logical, double p) {
  const double gamma = bhattacharyya(p);
  double total = 0.0;
  double power = 1.0;
  for (std::size_t w = 1; w < logical.coeffs.size(); ++w) {
    power *= gamma;
    total += logical.coeffs[w].get_d() * power;
  }
  return total;
}

double random_code_error_bound(int n, int k, double p) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("random-code bound needs 1 <= k <= n");
  const double gamma = bhattacharyya(p);
  const double ratio = std::expm1(2.0 * k * std::log(2.0)) / std::expm1(2.0 * n * std::log(2.0));
  return ratio * std::expm1(n * std::log1p(3.0 * gamma));
}

double rate_threshold(double p, bool allow_boundary) {
  return 1.0 - 0.5 * std::log2(1.0 + 3.0 * bhattacharyya(p, allow_boundary));
}

double hashing_bound(double p) {
  check_depolarizing(p);
  const double h2 = p == 0.0 ? 0.0 : -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  return 1.0 - 0.5 * (h2 + p * std::log2(3.0));
}

SimulationResult simulate_map_block_error(const EaqecCode& code, double p, std::uint64_t trials,
                                          std::uint64_t seed) {
  check_depolarizing(p);
  if (trials == 0) throw std::invalid_argument("simulation needs at least one trial");
  if (!code.is_maximal_entanglement()) {
    throw std::invalid_argument("coset-leader decoding here needs a maximal-entanglement code");
  }
  if (code.n > kMaxSimulationQubits) {
    throw std::invalid_argument("simulation is limited to n <= " + std::to_string(kMaxSimulationQubits));
  }
  const auto report = validate(code);
  if (!report.valid) throw std::invalid_argument("invalid code: " + report.failures.front());

  const std::size_t n = code.n;
  std::vector<SmallPauli> rows;
  for (const auto& r : code.stabilizer.rows()) rows.push_back(to_small(r));

  // Walk all Paulis in lexicographic order (qubit 0 most significant,
  // I < X < Y < Z) and keep the first minimum-weight one per syndrome.
  static constexpr std::uint32_t kDigitX[4] = {0, 1, 1, 0};
  static constexpr std::uint32_t kDigitZ[4] = {0, 0, 1, 1};
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  std::vector<SmallPauli> leader(std::size_t{1} << rows.size());
  std::vector<int> leader_weight(leader.size(), -1);
  for (std::uint64_t index = 0; index < total; ++index) {
    SmallPauli e;
    for (std::size_t q = 0; q < n; ++q) {
      const auto digit = (index >> (2 * (n - 1 - q))) & 3;
      e.x |= kDigitX[digit] << q;
      e.z |= kDigitZ[digit] << q;
    }
    const int w = std::popcount(e.x | e.z);
    const auto s = syndrome_of(e, rows);
    if (leader_weight[s] < 0 || w < leader_weight[s]) {
      leader_weight[s] = w;
      leader[s] = e;
    }
  }

  SimulationResult result;
  result.trials = trials;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::seed_seq key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(key);
    SmallPauli e;
    for (std::size_t q = 0; q < n; ++q) {
      const double u = uniform(rng);
      if (u >= p) continue;
      const int which = static_cast<int>(3.0 * u / p);  // 0: X, 1: Y, 2: Z
      e.x |= static_cast<std::uint32_t>(which <= 1) << q;
      e.z |= static_cast<std::uint32_t>(which >= 1) << q;
    }
    // Same syndrome means e times the leader lies in the logical group, so the
    // decoded logical class is wrong exactly when they differ.
    const auto& l = leader[syndrome_of(e, rows)];
    if (l.x != e.x || l.z != e.z) ++result.block_errors;
  }
  const double nt = static_cast<double>(trials);
  result.rate = static_cast<double>(result.block_errors) / nt;
  const double z2 = kWilsonZ * kWilsonZ;
  result.ci_halfwidth = kWilsonZ / (1.0 + z2 / nt) *
                        std::sqrt(result.rate * (1.0 - result.rate) / nt + z2 / (4.0 * nt * nt));
  return result;
}

std::string emit_error_curve(const std::vector<CurveSubject>& subjects, const std::vector<double>& grid,
                             const std::optional<SimulationOptions>& simulation) {
  for (double p : grid) check_depolarizing(p);
  std::string out = simulation ? "subject,p,gamma,bound,empirical,ci_halfwidth\n" : "subject,p,gamma,bound\n";
  for (const auto& s : subjects) {
    for (double p : grid) {
      const double bound = s.logical ? weight_enum_error_bound(*s.logical, p) : random_code_error_bound(s.n, s.k, p);
      out += s.label + "," + fmt(p) + "," + fmt(bhattacharyya(p)) + "," + fmt(bound);
      if (simulation) {
        if (s.code) {
          const auto r = simulate_map_block_error(*s.code, p, simulation->trials, simulation->seed);
          out += "," + fmt(r.rate) + "," + fmt(r.ci_halfwidth);
        } else {
          out += ",,";
        }
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace eaqec
