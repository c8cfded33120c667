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

#ifndef EAQEC_ERROR_ANALYSIS_HPP
#define EAQEC_ERROR_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eaqec/code.hpp"
#include "eaqec/enumerators.hpp"

namespace eaqec {

/// Depolarizing probabilities must lie in [0, 3/4); `allow_boundary` admits
/// p = 3/4 itself. Violations throw std::invalid_argument.
void check_depolarizing(double p, bool allow_boundary = false);

/// gamma = 2 sqrt(p(1-p)/3) + 2p/3.
double bhattacharyya(double p, bool allow_boundary = false);

/// sum_{w>=1} B_w gamma^w for the logical enumerator of a maximal-entanglement code.
double weight_enum_error_bound(const WeightEnumerator& logical, double p);

/// ((4^k - 1) / (4^n - 1)) ((1 + 3 gamma)^n - 1).
double random_code_error_bound(int n, int k, double p);

/// 1 - log2(1 + 3 gamma) / 2.
double rate_threshold(double p, bool allow_boundary = false);

/// 1 - (H2(p) + p log2 3) / 2.
double hashing_bound(double p);

struct SimulationResult {
  std::uint64_t trials = 0;
  std::uint64_t block_errors = 0;
  double rate = 0.0;
  /// Wilson score 95% half-width.
  double ci_halfwidth = 0.0;
};

inline constexpr std::size_t kMaxSimulationQubits = 10;

/// Monte Carlo block-error rate under minimum-weight coset-leader decoding.
///
/// The leader table covers all 4^n Paulis; ties go to the lexicographically
/// smallest string with I < X < Y < Z. Trial t draws its errors from a
/// generator seeded by (seed, t) alone, so results do not depend on how
/// trials are scheduled.
///
/// Throws std::invalid_argument unless the code is valid with c = n-k and
/// n <= kMaxSimulationQubits, trials >= 1 and p is in range.
SimulationResult simulate_map_block_error(const EaqecCode& code, double p, std::uint64_t trials,
                                          std::uint64_t seed);

/// One curve of an error-bound plot: a concrete code or a random (n,k) ensemble.
struct CurveSubject {
  std::string label;
  /// Set for a concrete code; empty selects the random-code bound.
  std::optional<WeightEnumerator> logical;
  /// Set to add simulated columns (concrete maximal codes only).
  std::optional<EaqecCode> code;
  int n = 0;
  int k = 0;
};

struct SimulationOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
};

/// CSV `subject,p,gamma,bound[,empirical,ci_halfwidth]`, one row per subject
/// and grid point. Simulated columns appear when `simulation` is set; they
/// are left empty for subjects without a code.
std::string emit_error_curve(const std::vector<CurveSubject>& subjects, const std::vector<double>& grid,
                             const std::optional<SimulationOptions>& simulation = std::nullopt);

}  // namespace eaqec

#endif  // EAQEC_ERROR_ANALYSIS_HPP
