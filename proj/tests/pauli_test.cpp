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

#include "eaqec/pauli.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eaqec/constructions.hpp"
#include "test_support.hpp"

namespace eaqec {
namespace {

PauliOp P(const char* s) { return PauliOp::from_string(s); }
SymplecticMatrix M(const char* s) { return SymplecticMatrix::parse(s); }

TEST(PauliOp, TextRoundTripAndLetters) {
  const auto p = P("IXZY");
  EXPECT_EQ(p.str(), "IXZY");
  EXPECT_FALSE(p.x(0));
  EXPECT_FALSE(p.z(0));
  EXPECT_TRUE(p.x(1) && !p.z(1));
  EXPECT_TRUE(!p.x(2) && p.z(2));
  EXPECT_TRUE(p.x(3) && p.z(3));
  EXPECT_THROW(PauliOp::from_string("XQ"), std::invalid_argument);
  EXPECT_THROW(PauliOp::from_string(""), std::invalid_argument);
}

TEST(PauliOp, WideOperatorsCrossWordBoundary) {
  std::string s(130, 'I');
  s[0] = 'X';
  s[64] = 'Y';
  s[129] = 'Z';
  const auto p = PauliOp::from_string(s);
  EXPECT_EQ(p.str(), s);
  EXPECT_EQ(weight(p), 3u);
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(P("III")), 0u);
  EXPECT_EQ(weight(P("XXX")), 3u);
  EXPECT_EQ(weight(P("XYIZ")), 3u);
}

TEST(SymplecticProduct, Examples) {
  EXPECT_EQ(symplectic_product(P("X"), P("Z")), 1);
  EXPECT_EQ(symplectic_product(P("XXX"), P("ZZZ")), 1);
  EXPECT_EQ(symplectic_product(P("ZZI"), P("XXX")), 0);
  EXPECT_THROW(symplectic_product(P("X"), P("XX")), std::invalid_argument);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(P("X"), P("X")), P("I"));
  EXPECT_EQ(multiply(P("XXI"), P("IXX")), P("XIX"));
  EXPECT_EQ(multiply(P("XXX"), P("ZZZ")), P("YYY"));
  EXPECT_THROW(multiply(P("X"), P("XX")), std::invalid_argument);
}

TEST(PauliOp, RandomizedAlgebraicProperties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto p = testing::random_pauli(n, rng);
    const auto q = testing::random_pauli(n, rng);
    EXPECT_EQ(symplectic_product(p, q), symplectic_product(q, p));
    EXPECT_LE(weight(multiply(p, q)), weight(p) + weight(q));
    EXPECT_EQ(symplectic_product(p, p), 0);
  }
}

TEST(Gf2Rank, Examples) {
  EXPECT_EQ(gf2_rank(M("III III")), 0u);
  EXPECT_EQ(gf2_rank(M("XXI IXX XIX")), 2u);
  EXPECT_EQ(gf2_rank(repetition_code(3).stabilizer), 4u);
}

TEST(SymplecticPairCount, Examples) {
  EXPECT_EQ(symplectic_pair_count(repetition_code(3).stabilizer), 2u);
  EXPECT_EQ(symplectic_pair_count(M("ZZI IZZ ZIZ")), 0u);
  EXPECT_EQ(symplectic_pair_count(repetition_code_even(6).stabilizer), 5u);
}

TEST(GramSchmidt, Examples) {
  auto d = symplectic_gram_schmidt(M("X Z"));
  EXPECT_EQ(d.pairs.size(), 1u);
  EXPECT_TRUE(d.isotropic.empty());

  d = symplectic_gram_schmidt(M("ZZI IZZ"));
  EXPECT_TRUE(d.pairs.empty());
  EXPECT_EQ(d.isotropic.size(), 2u);

  d = symplectic_gram_schmidt(M("ZZI IZZ XXI IXX"));
  EXPECT_EQ(d.pairs.size(), 2u);
  EXPECT_TRUE(d.isotropic.empty());

  EXPECT_THROW(symplectic_gram_schmidt(M("XXI IXX XIX")), std::invalid_argument);
}

TEST(GramSchmidt, FirstAnticommutingRowBecomesPartner) {
  const auto d = symplectic_gram_schmidt(M("XII ZZI ZII"));
  ASSERT_EQ(d.pairs.size(), 1u);
  EXPECT_EQ(d.pairs[0].first, P("XII"));
  EXPECT_EQ(d.pairs[0].second, P("ZZI"));
}

TEST(GramSchmidt, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t count = 1 + rng() % (2 * n);
    const auto rows = testing::random_independent_rows(n, count, rng);
    const auto d = symplectic_gram_schmidt(rows);
    EXPECT_EQ(d.pairs.size(), symplectic_pair_count(rows));
    const auto out = d.to_matrix(n);
    EXPECT_TRUE(spans_same_group(out, rows));
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        const bool partners = i < 2 * d.pairs.size() && j == i + 1 && i % 2 == 0;
        EXPECT_EQ(symplectic_product(out[i], out[j]), partners ? 1 : 0);
      }
    }
  }
}

TEST(EnumerateGroup, Examples) {
  const auto one = enumerate_group(M("X"));
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], P("I"));
  EXPECT_EQ(one[1], P("X"));

  const auto two = enumerate_group(M("XXX ZZZ"));
  const std::set<std::string> got = [&] {
    std::set<std::string> s;
    for (const auto& p : two) s.insert(p.str());
    return s;
  }();
  EXPECT_EQ(got, (std::set<std::string>{"III", "XXX", "ZZZ", "YYY"}));
  EXPECT_EQ(two[0], P("III"));

  EXPECT_EQ(enumerate_group(repetition_code(3).stabilizer).size(), 16u);
}

TEST(EnumerateGroup, CapAndDependenceErrors) {
  EXPECT_THROW(enumerate_group(M("XXX ZZZ"), 3), std::domain_error);
  EXPECT_THROW(enumerate_group(M("XXI IXX XIX")), std::invalid_argument);
}

TEST(EnumerateGroup, ClosedAndDistinct) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto gens = testing::random_independent_rows(n, 1 + rng() % (2 * n), rng);
    const auto elems = enumerate_group(gens);
    ASSERT_EQ(elems.size(), std::size_t{1} << gens.size());
    std::set<std::string> seen;
    for (const auto& e : elems) seen.insert(e.str());
    EXPECT_EQ(seen.size(), elems.size());
    for (const auto& a : elems) {
      for (const auto& b : elems) EXPECT_TRUE(seen.count(multiply(a, b).str()));
    }
  }
}

TEST(GroupEnumerator, SubsetTracksElement) {
  const auto gens = M("XZI IXZ ZIX");
  GroupEnumerator it(gens);
  std::size_t count = 0;
  while (it.next()) {
    PauliOp expected(3);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((it.subset() >> i) & 1) expected *= gens[i];
    }
    EXPECT_EQ(it.current(), expected);
    ++count;
  }
  EXPECT_EQ(count, 8u);
}

// Character sum: the sum over S' is |S'| when E commutes with S' and 0 otherwise.
TEST(CharacterSum, RandomGroupsSmallN) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto gens = testing::random_independent_rows(n, 1 + rng() % (2 * n), rng);
    const auto group = enumerate_group(gens);
    for (int e_trial = 0; e_trial < 8; ++e_trial) {
      const auto e = testing::random_pauli(n, rng);
      long long sum = 0;
      for (const auto& m : group) sum += symplectic_product(e, m) ? -1 : 1;
      bool commutes = true;
      for (const auto& g : gens.rows()) commutes = commutes && symplectic_product(e, g) == 0;
      EXPECT_EQ(sum, commutes ? static_cast<long long>(group.size()) : 0);
    }
  }
}

TEST(Circuit, EmptyCircuitIsIdentity) {
  CliffordCircuit c(3);
  EXPECT_EQ(conjugate_through_circuit(c, P("XYZ")), P("XYZ"));
}

TEST(Circuit, CnotRules) {
  CliffordCircuit c(2);
  c.add_cnot(0, 1);
  EXPECT_EQ(conjugate_through_circuit(c, P("XI")), P("XX"));
  EXPECT_EQ(conjugate_through_circuit(c, P("IZ")), P("ZZ"));
  EXPECT_EQ(conjugate_through_circuit(c, P("ZI")), P("ZI"));
  EXPECT_EQ(conjugate_through_circuit(c, P("IX")), P("IX"));
  EXPECT_THROW(c.add_cnot(0, 0), std::invalid_argument);
  EXPECT_THROW(c.add_cnot(0, 2), std::out_of_range);
  EXPECT_THROW(conjugate_through_circuit(c, P("XXX")), std::invalid_argument);
}

TEST(Circuit, RepetitionEncoderLogicalImages) {
  const auto circ = repetition_encoder_circuit(5);
  EXPECT_EQ(conjugate_through_circuit(circ, P("XIIII")), P("XXXXX"));
  EXPECT_EQ(conjugate_through_circuit(circ, P("ZIIII")), P("ZZZZZ"));
}

TEST(Circuit, ParseAndPrintRoundTrip) {
  const auto circ = repetition_encoder_circuit(5);
  EXPECT_EQ(CliffordCircuit::parse(circ.str(), 5).str(), circ.str());
  EXPECT_THROW(CliffordCircuit::parse("CNOT 0", 2), std::invalid_argument);
  EXPECT_THROW(CliffordCircuit::parse("H 0 1", 2), std::invalid_argument);
}

TEST(Circuit, PreservesSymplecticProducts) {
  std::mt19937_64 rng(3);
  const auto circ = repetition_encoder_circuit(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testing::random_pauli(7, rng);
    const auto q = testing::random_pauli(7, rng);
    EXPECT_EQ(symplectic_product(conjugate_through_circuit(circ, p), conjugate_through_circuit(circ, q)),
              symplectic_product(p, q));
  }
}

}  // namespace
}  // namespace eaqec
