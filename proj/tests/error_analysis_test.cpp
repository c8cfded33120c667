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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eaqec/constructions.hpp"

namespace eaqec {
namespace {

constexpr double kGammaTol = 1e-9;
constexpr double kTol = 1e-6;

double gamma_reference(double p) { return 2.0 * std::sqrt(p * (1.0 - p) / 3.0) + 2.0 * p / 3.0; }

TEST(Bhattacharyya, Examples) {
  EXPECT_EQ(bhattacharyya(0.0), 0.0);
  EXPECT_NEAR(bhattacharyya(0.75, true), 1.0, kGammaTol);
  EXPECT_NEAR(bhattacharyya(0.1), 0.4130768, 1e-7);
  EXPECT_NEAR(bhattacharyya(0.1), gamma_reference(0.1), kGammaTol);
  EXPECT_THROW(bhattacharyya(0.75), std::invalid_argument);
  EXPECT_THROW(bhattacharyya(-0.01), std::invalid_argument);
}

TEST(Bhattacharyya, StrictlyIncreasing) {
  double prev = bhattacharyya(0.0);
  for (int i = 1; i < 1000; ++i) {
    const double g = bhattacharyya(0.75 * i / 1000.0);
    EXPECT_GT(g, prev);
    prev = g;
  }
}

TEST(WeightEnumBound, Examples) {
  const auto b3 = make_enumerator(2, {1, 0, 0, 3});
  const auto b4 = make_enumerator(2, {1, 0, 0, 1, 2});
  EXPECT_EQ(weight_enum_error_bound(b3, 0.0), 0.0);
  const double g = gamma_reference(0.1);
  EXPECT_NEAR(weight_enum_error_bound(b3, 0.1), 3 * g * g * g, kTol);
  EXPECT_NEAR(weight_enum_error_bound(b3, 0.1), 0.21148, 1e-4);
  EXPECT_NEAR(weight_enum_error_bound(b4, 0.1), 0.12871, 1e-4);
}

TEST(RandomCodeBound, Examples) {
  EXPECT_EQ(random_code_error_bound(3, 1, 0.0), 0.0);
  EXPECT_EQ(random_code_error_bound(9, 4, 0.0), 0.0);
  const double g = gamma_reference(0.1);
  EXPECT_NEAR(random_code_error_bound(3, 1, 0.1), 3.0 / 63.0 * (std::pow(1 + 3 * g, 3) - 1), kTol);
  EXPECT_NEAR(random_code_error_bound(3, 1, 0.1), 0.48704, 1e-5);
  EXPECT_NEAR(random_code_error_bound(6, 2, 0.1), 15.0 / 4095.0 * (std::pow(1 + 3 * g, 6) - 1), kTol);
  EXPECT_GT(random_code_error_bound(5, 5, 0.1), 1.0);
  EXPECT_THROW(random_code_error_bound(3, 0, 0.1), std::invalid_argument);
  EXPECT_THROW(random_code_error_bound(3, 4, 0.1), std::invalid_argument);
}

TEST(RandomCodeBound, VanishesBelowThreshold) {
  for (double p : {0.005, 0.01, 0.02, 0.05}) {
    const double threshold = rate_threshold(p);
    for (double fraction : {0.25, 0.5, 0.75}) {
      const double rate = fraction * threshold;
      const int k30 = std::max(1, static_cast<int>(std::floor(rate * 30)));
      const int k60 = 2 * k30;
      const double v30 = random_code_error_bound(30, k30, p);
      const double v60 = random_code_error_bound(60, k60, p);
      EXPECT_LT(v60, v30) << p << " " << rate;
      EXPECT_LT(v30, 1.0) << p << " " << rate;
    }
  }
}

TEST(RateThreshold, Examples) {
  EXPECT_EQ(rate_threshold(0.0), 1.0);
  EXPECT_NEAR(rate_threshold(0.75, true), 0.0, kTol);
  EXPECT_NEAR(rate_threshold(0.1), 0.41850, 1e-5);
  EXPECT_NEAR(rate_threshold(0.1), 1 - 0.5 * std::log2(1 + 3 * gamma_reference(0.1)), kTol);
}

TEST(HashingBound, Examples) {
  EXPECT_EQ(hashing_bound(0.0), 1.0);
  EXPECT_NEAR(hashing_bound(0.5), 0.10376, 1e-5);
  for (int i = 1; i < 1000; ++i) {
    const double p = 0.75 * i / 1000.0;
    EXPECT_GT(hashing_bound(p), rate_threshold(p)) << p;
  }
}

TEST(Simulation, NoiselessChannelNeverFails) {
  const auto r = simulate_map_block_error(repetition_code(3), 0.0, 1000, 7);
  EXPECT_EQ(r.block_errors, 0u);
  EXPECT_EQ(r.rate, 0.0);
}

TEST(Simulation, DeterministicForFixedSeed) {
  const auto a = simulate_map_block_error(repetition_code(4), 0.1, 20000, 42);
  const auto b = simulate_map_block_error(repetition_code(4), 0.1, 20000, 42);
  EXPECT_EQ(a.block_errors, b.block_errors);
  EXPECT_EQ(a.rate, b.rate);
  EXPECT_EQ(a.ci_halfwidth, b.ci_halfwidth);
  const auto c = simulate_map_block_error(repetition_code(4), 0.1, 20000, 43);
  EXPECT_NE(a.block_errors, c.block_errors);
}

TEST(Simulation, TrialsArePrefixStable) {
  // Trial t depends only on (seed, t): a longer run extends a shorter one.
  const auto code = repetition_code(3);
  std::uint64_t previous = 0;
  for (std::uint64_t trials : {100u, 1000u, 5000u}) {
    const auto r = simulate_map_block_error(code, 0.2, trials, 5);
    EXPECT_GE(r.block_errors, previous);
    previous = r.block_errors;
  }
}

TEST(Simulation, SingleErrorsAreCorrectedByDistanceThree) {
  // At tiny p nearly every failure needs two errors, so the rate scales like p^2.
  const auto r = simulate_map_block_error(repetition_code(3), 0.001, 200000, 3);
  EXPECT_LT(r.rate, 1e-4);
}

TEST(Simulation, RepetitionBelowBound) {
  const auto r = simulate_map_block_error(repetition_code(3), 0.1, 100000, 1);
  EXPECT_LE(r.rate, 0.21148);
  EXPECT_GT(r.ci_halfwidth, 0.0);
}

TEST(Simulation, Errors) {
  EXPECT_THROW(simulate_map_block_error(repetition_code(3), 0.1, 0, 1), std::invalid_argument);
  EXPECT_THROW(simulate_map_block_error(repetition_code(3), 0.8, 10, 1), std::invalid_argument);
  EXPECT_THROW(simulate_map_block_error(repetition_code(11), 0.1, 10, 1), std::invalid_argument);
  const auto non_maximal = parse_code("n=3 k=1 c=1\nS: XII ZII IZZ\nL: IXX IZI\n");
  ASSERT_TRUE(validate(non_maximal).valid);
  EXPECT_THROW(simulate_map_block_error(non_maximal, 0.1, 10, 1), std::invalid_argument);
}

TEST(ErrorCurve, HeaderOnlyForEmptyGrid) {
  CurveSubject s{"random", std::nullopt, std::nullopt, 3, 1};
  EXPECT_EQ(emit_error_curve({s}, {}), "subject,p,gamma,bound\n");
}

TEST(ErrorCurve, MonotoneRows) {
  std::vector<CurveSubject> subjects;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto code = repetition_code(n);
    subjects.push_back({"rep" + std::to_string(n), code_enumerator(code, CodeGroup::kLogical), code,
                        static_cast<int>(n), 1});
  }
  subjects.push_back({"random", std::nullopt, std::nullopt, 10, 1});
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.005 * i);
  const auto csv = emit_error_curve(subjects, grid);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "subject,p,gamma,bound");
  std::string last_subject;
  double last_bound = -1;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto c1 = line.find(',');
    const auto subject = line.substr(0, c1);
    const double bound = std::stod(line.substr(line.rfind(',') + 1));
    if (subject == last_subject) EXPECT_GE(bound, last_bound) << line;
    last_subject = subject;
    last_bound = bound;
  }
  EXPECT_EQ(rows, 5 * 20);
}

TEST(ErrorCurve, SimulatedColumns) {
  const auto code = repetition_code(3);
  std::vector<CurveSubject> subjects = {{"rep3", code_enumerator(code, CodeGroup::kLogical), code, 3, 1},
                                        {"random", std::nullopt, std::nullopt, 3, 1}};
  const auto csv = emit_error_curve(subjects, {0.05}, SimulationOptions{1000, 1});
  std::istringstream in(csv);
  std::string header, rep, rnd;
  std::getline(in, header);
  std::getline(in, rep);
  std::getline(in, rnd);
  EXPECT_EQ(header, "subject,p,gamma,bound,empirical,ci_halfwidth");
  EXPECT_EQ(std::count(rep.begin(), rep.end(), ','), 5);
  EXPECT_EQ(rnd.substr(rnd.size() - 2), ",,");
  EXPECT_THROW(emit_error_curve(subjects, {0.8}), std::invalid_argument);
}

}  // namespace
}  // namespace eaqec
