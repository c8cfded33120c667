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

#include "eaqec/table.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace eaqec {
namespace {

std::vector<KnownCode> database() { return load_known_codes(EAQEC_DATA_DIR "/lower_bounds.csv"); }

TEST(KnownCodes, ParsesDatabase) {
  const auto known = database();
  ASSERT_FALSE(known.empty());
  for (const auto& c : known) {
    EXPECT_FALSE(c.source.empty());
    EXPECT_LE(c.k + c.c, c.n);
  }
}

TEST(KnownCodes, Errors) {
  EXPECT_THROW(parse_known_codes("# nothing\n"), std::invalid_argument);
  EXPECT_THROW(parse_known_codes("n,k,c,source\n"), std::invalid_argument);
  EXPECT_THROW(parse_known_codes("n,k,c,d,source\n5,2,3,3\n"), std::invalid_argument);
  EXPECT_THROW(parse_known_codes("n,k,c,d,source\n5,x,3,3,s\n"), std::invalid_argument);
  EXPECT_THROW(parse_known_codes("n,k,c,d,source\n5,3,3,3,s\n"), std::invalid_argument);
  EXPECT_EQ(parse_known_codes("# c\nn,k,c,d,source\n\n5,2,3,3,s\r\n").size(), 1u);
  EXPECT_THROW(load_known_codes("/nonexistent/db.csv"), std::runtime_error);
}

TEST(LowerBounds, ProvenanceAndClosure) {
  const auto db = maximal_lower_bounds(parse_known_codes("n,k,c,d,source\n5,2,3,3,listed\n"), 7);
  EXPECT_EQ(db.lookup(5, 1, 4)->provenance, "Construction");
  EXPECT_EQ(db.lookup(5, 2, 3)->d, 3);
  EXPECT_EQ(db.lookup(5, 2, 3)->provenance, "Transcribed:listed");
  // Adding an ebit carries the listed code to n = 6.
  EXPECT_EQ(db.lookup(6, 2, 4)->d, 3);
  EXPECT_EQ(db.lookup(6, 2, 4)->provenance, "Extension:Transcribed:listed");
  // The odd accumulator code keeps distance 2 with one more ebit.
  EXPECT_EQ(db.lookup(6, 4, 2)->d, 2);
  EXPECT_EQ(db.lookup(6, 4, 2)->provenance, "Extension:Construction");
  EXPECT_FALSE(db.lookup(8, 1, 7).has_value());
}

TEST(LowerBounds, ConstructionWinsTies) {
  const auto db = maximal_lower_bounds(parse_known_codes("n,k,c,d,source\n5,1,4,5,listed\n"), 5);
  EXPECT_EQ(db.lookup(5, 1, 4)->provenance, "Construction");
}

TEST(BuildTable, SmallTableRowsAndOrder) {
  TableOptions options;
  options.nmax = 9;
  const auto rows = build_table(database(), options);
  ASSERT_EQ(rows.size(), 2u + 3 + 4 + 5 + 6 + 7 + 8);
  EXPECT_EQ(rows.front().n, 3);
  EXPECT_EQ(rows.front().k, 1);
  EXPECT_EQ(rows.front().lower, 3);
  EXPECT_EQ(rows.front().upper, 3);
  for (const auto& r : rows) {
    EXPECT_LE(r.lower, r.upper);
    EXPECT_EQ(r.c, r.n - r.k);
    if (r.n == 9 && r.k == 2) {
      EXPECT_EQ(r.lower, 6);
      EXPECT_EQ(r.upper, 7);
    }
  }
  const auto csv = table_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,k,c,lower,upper,lower_provenance,upper_provenance");
  EXPECT_NE(csv.find("\n3,1,2,3,3,Construction,LP\n"), std::string::npos);
}

TEST(BuildTable, ThreadCountDoesNotChangeOutput) {
  TableOptions one;
  one.nmax = 8;
  one.threads = 1;
  TableOptions many = one;
  many.threads = 4;
  EXPECT_EQ(table_csv(build_table(database(), one)), table_csv(build_table(database(), many)));
}

TEST(BuildTable, TinyBudgetStillGivesValidBounds) {
  TableOptions options;
  options.nmax = 7;
  options.node_limit = 1;
  for (const auto& r : build_table(database(), options)) {
    const auto expected = testing::table_one().at({r.n, r.k});
    EXPECT_GE(r.upper, expected.second) << r.n << "," << r.k;
  }
}

TEST(BuildTable, RejectsTinyNmax) {
  TableOptions options;
  options.nmax = 2;
  EXPECT_THROW(build_table({}, options), std::invalid_argument);
}

}  // namespace
}  // namespace eaqec
