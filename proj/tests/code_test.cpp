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

#include "eaqec/code.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "eaqec/constructions.hpp"
#include "eaqec/enumerators.hpp"
#include "test_support.hpp"

namespace eaqec {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

EaqecCode permute_qubits(const EaqecCode& code, const std::vector<std::size_t>& perm) {
  auto apply = [&](const SymplecticMatrix& m) {
    SymplecticMatrix out(code.n);
    for (const auto& r : m.rows()) {
      PauliOp p(code.n);
      for (std::size_t q = 0; q < code.n; ++q) p.set(perm[q], r.x(q), r.z(q));
      out.push_back(p);
    }
    return out;
  };
  EaqecCode out = code;
  out.stabilizer = apply(code.stabilizer);
  out.logical = apply(code.logical);
  return out;
}

TEST(Validate, RepetitionCodes) {
  auto r = validate(repetition_code(3));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.derived_c, 2u);
  r = validate(repetition_code_even(4));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.derived_c, 3u);
}

TEST(Validate, LogicalReplacedByStabilizerRowFails) {
  auto code = repetition_code(3);
  SymplecticMatrix logical(3);
  logical.push_back(code.stabilizer[0]);
  logical.push_back(code.logical[1]);
  code.logical = logical;
  const auto r = validate(code);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.failures.empty());
}

TEST(Validate, ReportsEachBrokenInvariant) {
  auto code = repetition_code(3);
  code.c = 1;
  auto r = validate(code);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.derived_c, 2u);

  code = repetition_code(3);
  code.logical = SymplecticMatrix::parse("XXX XXX");
  EXPECT_FALSE(validate(code).valid);

  code = repetition_code(3);
  code.logical = SymplecticMatrix::parse("XII ZZZ");
  EXPECT_FALSE(validate(code).valid);
}

TEST(Validate, RandomCodesAreValid) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = rng() % (n + 1);
    const std::size_t c = rng() % (n - k + 1);
    const auto code = testing::random_code(n, k, c, rng);
    const auto r = validate(code);
    EXPECT_TRUE(r.valid) << serialize_code(code);
    EXPECT_EQ(r.derived_c, c);
    EXPECT_TRUE(validate(dual(code)).valid);
  }
}

TEST(Dual, RepetitionToAccumulator) {
  const auto d = dual(repetition_code(3));
  EXPECT_EQ(d.n, 3u);
  EXPECT_EQ(d.k, 2u);
  EXPECT_EQ(d.c, 1u);
  EXPECT_EQ(distance(d), 2u);

  const auto e = dual(repetition_code_even(4));
  EXPECT_EQ(e.k, 3u);
  EXPECT_EQ(e.c, 1u);
  EXPECT_EQ(distance(e), 1u);
}

TEST(Dual, MaximalEntanglementSwapsMatrices) {
  const auto code = repetition_code(5);
  const auto d = dual(code);
  EXPECT_TRUE(spans_same_group(d.stabilizer, code.logical));
  EXPECT_TRUE(spans_same_group(d.logical, code.stabilizer));
}

TEST(Dual, IsAnInvolutionOnGroups) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k = rng() % (n + 1);
    const std::size_t c = rng() % (n - k + 1);
    const auto code = testing::random_code(n, k, c, rng);
    const auto back = dual(dual(code));
    EXPECT_EQ(back.k, code.k);
    EXPECT_EQ(back.c, code.c);
    EXPECT_TRUE(spans_same_group(back.stabilizer, code.stabilizer));
    EXPECT_TRUE(spans_same_group(back.logical, code.logical));
  }
}

TEST(Dual, RejectsInvalidCode) {
  auto code = repetition_code(3);
  code.c = 1;
  EXPECT_THROW(dual(code), std::invalid_argument);
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(repetition_code(3)), 3u);
  EXPECT_EQ(distance(repetition_code_even(4)), 3u);
  EXPECT_EQ(distance(accumulator_code(3)), 2u);
}

TEST(Distance, UndefinedForNoLogicalQubits) {
  const auto code = demote_logical_to_ebit(repetition_code(3));
  EXPECT_EQ(code.k, 0u);
  EXPECT_THROW(distance(code), std::domain_error);
}

TEST(Distance, CapExceeded) { EXPECT_THROW(distance(accumulator_code(5), 4), std::domain_error); }

TEST(Distance, DualDistanceMatchesStabilizerEnumerator) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k = 1 + rng() % (n - 1);
    const auto code = testing::random_code(n, k, n - k, rng);
    const auto a = code_enumerator(code, CodeGroup::kStabilizer);
    std::size_t w = 1;
    while (a.coeffs[w] == 0) ++w;
    EXPECT_EQ(distance(dual(code)), w);
  }
}

TEST(Distance, InvariantUnderPermutationAndRowOperations) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k = 1 + rng() % (n - 1);
    const std::size_t c = rng() % (n - k + 1);
    const auto code = testing::random_code(n, k, c, rng);
    const auto d = distance(code);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(distance(permute_qubits(code, perm)), d);

    // Multiply an isotropic row into every logical row: same groups.
    EaqecCode mixed = code;
    if (c < n - k) {
      const auto& isotropic = code.stabilizer[code.stabilizer.size() - 1];
      SymplecticMatrix logical(n);
      for (const auto& r : code.logical.rows()) logical.push_back(multiply(r, isotropic));
      mixed.logical = logical;
      ASSERT_TRUE(validate(mixed).valid);
      EXPECT_EQ(distance(mixed), d);
    }
  }
}

TEST(CodeFile, SampleParsesAndValidates) {
  const auto code = parse_code(read_file(EAQEC_DATA_DIR "/repetition3.code"));
  EXPECT_EQ(code.n, 3u);
  EXPECT_EQ(code.k, 1u);
  EXPECT_EQ(code.c, 2u);
  EXPECT_TRUE(validate(code).valid);
  EXPECT_EQ(distance(code), 3u);
}

TEST(CodeFile, RoundTripIsCanonical) {
  const auto text = read_file(EAQEC_DATA_DIR "/repetition3.code");
  const auto canonical = serialize_code(parse_code(text));
  EXPECT_EQ(serialize_code(parse_code(canonical)), canonical);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = rng() % (n + 1);
    const std::size_t c = rng() % (n - k + 1);
    const auto s = serialize_code(testing::random_code(n, k, c, rng));
    EXPECT_EQ(serialize_code(parse_code(s)), s);
  }
}

TEST(CodeFile, Errors) {
  EXPECT_THROW(parse_code("n=3 k=2 c=2\nS: ZZI\nL: XXX ZZZ XII ZII\n"), std::invalid_argument);
  EXPECT_THROW(parse_code("n=3 k=1\nS: ZZI IZZ XXI IXX\nL: XXX ZZZ\n"), std::invalid_argument);
  EXPECT_THROW(parse_code("n=3 k=1 c=2\nS: ZZI IZ XXI IXX\nL: XXX ZZZ\n"), std::invalid_argument);
  EXPECT_THROW(parse_code("n=3 k=1 c=2\nS: ZZI IZZ XXI\nL: XXX ZZZ\n"), std::invalid_argument);
  EXPECT_THROW(parse_code("n=3 k=1 c=2\nS: ZZI IZZ XXI IXX\n"), std::invalid_argument);
}

}  // namespace
}  // namespace eaqec
