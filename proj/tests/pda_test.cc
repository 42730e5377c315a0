// Copyright 2026 The rsplfr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsplfr/pda.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "rsplfr/rational.h"

namespace rsplfr {
namespace {

using Grid = std::vector<std::vector<Cell>>;

Cell S(int s) { return Cell::Ordinary(s); }
const Cell kStar = Cell::Star();

Grid ToyGrid() {
  return {{kStar, S(1), S(2)}, {S(1), kStar, S(3)}, {S(2), S(3), kStar}};
}

template <typename Fn>
PdaViolation Violation(Fn fn) {
  try {
    fn();
  } catch (const PdaViolation& v) {
    return v;
  }
  ADD_FAILURE() << "no violation raised";
  return PdaViolation(ErrorCode::kParseError, "none");
}

TEST(PdaTest, ToyArrayIsValid) {
  const Pda pda = Pda::Validate(ToyGrid());
  EXPECT_EQ(pda.parameters(), (PdaParameters{3, 3, 1, 3}));
}

TEST(PdaTest, SameRowRepeatViolatesConditionA) {
  const auto v = Violation([] { Pda::Validate({{S(1), S(1)}, {kStar, kStar}}); });
  EXPECT_EQ(v.code(), ErrorCode::kConditionA);
  EXPECT_EQ(v.first(), (CellPosition{0, 0}));
  EXPECT_EQ(v.second(), (CellPosition{0, 1}));
}

TEST(PdaTest, MissingStarPatternViolatesConditionB) {
  const auto v = Violation([] { Pda::Validate({{S(1), kStar}, {S(2), S(1)}}); });
  EXPECT_EQ(v.code(), ErrorCode::kConditionB);
  EXPECT_EQ(v.first(), (CellPosition{0, 0}));
  EXPECT_EQ(v.second(), (CellPosition{1, 1}));
}

TEST(PdaTest, UnequalStarCounts) {
  const auto v = Violation([] { Pda::Validate({{kStar, S(1)}, {kStar, S(2)}}); });
  EXPECT_EQ(v.code(), ErrorCode::kUnequalStarCounts);
}

TEST(PdaTest, SymbolGap) {
  const auto v = Violation([] { Pda::Validate({{kStar, S(2)}, {S(3), kStar}}); });
  EXPECT_EQ(v.code(), ErrorCode::kSymbolGap);
}

TEST(PdaTest, MalformedArrays) {
  EXPECT_EQ(Violation([] { Pda::Validate({}); }).code(), ErrorCode::kMalformedArray);
  EXPECT_EQ(Violation([] { Pda::Validate({{kStar, S(1)}, {S(1)}}); }).code(),
            ErrorCode::kMalformedArray);
  EXPECT_THROW(Cell::Ordinary(0), Error);
}

TEST(PdaTest, ManThreeOneIsTheToyArray) {
  const Pda pda = Pda::Man(3, 1);
  EXPECT_EQ(pda.entries(), ToyGrid());
  EXPECT_TRUE(pda.is_man());
  EXPECT_EQ(pda.man_t(), 1);
}

TEST(PdaTest, ManFourTwoMatchesPublishedArray) {
  const Grid expected = {{kStar, kStar, S(1), S(2)}, {kStar, S(1), kStar, S(3)},
                         {kStar, S(2), S(3), kStar}, {S(1), kStar, kStar, S(4)},
                         {S(2), kStar, S(4), kStar}, {S(3), S(4), kStar, kStar}};
  const Pda pda = Pda::Man(4, 2);
  EXPECT_EQ(pda.entries(), expected);
  EXPECT_EQ(pda.parameters(), (PdaParameters{4, 6, 3, 4}));
  EXPECT_EQ(pda.row_subsets().front(), (std::vector<int>{0, 1}));
  EXPECT_EQ(pda.symbol_subsets().back(), (std::vector<int>{1, 2, 3}));
}

TEST(PdaTest, ManZeroCache) {
  EXPECT_EQ(Pda::Man(5, 0).parameters(), (PdaParameters{5, 1, 0, 5}));
}

TEST(PdaTest, ManFullCache) {
  const Pda pda = Pda::Man(4, 4);
  EXPECT_EQ(pda.parameters(), (PdaParameters{4, 1, 1, 0}));
  for (Cell c : pda.entries().front()) EXPECT_TRUE(c.is_star());
}

TEST(PdaTest, ManOutOfRange) {
  EXPECT_THROW(Pda::Man(3, 4), Error);
  EXPECT_THROW(Pda::Man(3, -1), Error);
}

TEST(PdaTest, ManSweepMatchesBinomials) {
  for (int K = 1; K <= 8; ++K) {
    for (int t = 0; t <= K; ++t) {
      const Pda pda = Pda::Man(K, t);
      const Pda revalidated = Pda::Validate(pda.entries());
      const PdaParameters want{K, static_cast<int>(Binomial(K, t)),
                               static_cast<int>(Binomial(K - 1, t - 1)),
                               static_cast<int>(Binomial(K, t + 1))};
      EXPECT_EQ(pda.parameters(), want) << K << "," << t;
      EXPECT_EQ(revalidated.parameters(), want);
      // Each symbol s appears once per user of its subset J.
      for (int s = 1; s <= pda.S(); ++s) {
        const auto& J = pda.symbol_subsets()[s - 1];
        ASSERT_EQ(pda.occurrences(s).size(), J.size());
        for (const auto& p : pda.occurrences(s)) {
          EXPECT_TRUE(std::binary_search(J.begin(), J.end(), p.col));
        }
      }
    }
  }
}

TEST(PdaTest, PermutationsPreserveValidityAndParameters) {
  std::mt19937 rng(17);
  for (int K = 2; K <= 6; ++K) {
    for (int t = 0; t <= K; ++t) {
      const Pda base = Pda::Man(K, t);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> rows(base.F()), cols(K);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        Grid g(base.F(), std::vector<Cell>(K, kStar));
        for (int i = 0; i < base.F(); ++i) {
          for (int j = 0; j < K; ++j) g[i][j] = base.at(rows[i], cols[j]);
        }
        const Pda permuted = Pda::Validate(g);
        EXPECT_EQ(permuted.parameters(), base.parameters());
        EXPECT_FALSE(permuted.is_man());
      }
    }
  }
}

TEST(PdaTest, TextRoundTrip) {
  for (int K = 1; K <= 6; ++K) {
    for (int t = 0; t <= K; ++t) {
      const Pda pda = Pda::Man(K, t);
      EXPECT_EQ(ParsePdaText(FormatPdaText(pda)), pda);
    }
  }
  EXPECT_EQ(FormatPdaText(Pda::Man(3, 1)), "* 1 2\n1 * 3\n2 3 *\n");
}

TEST(PdaTest, ParserSkipsCommentsAndRejectsGarbage) {
  const Pda pda = ParsePdaText("# toy\n* 1 2\n\n1 * 3  # second row\n2 3 *\n");
  EXPECT_EQ(pda.parameters(), (PdaParameters{3, 3, 1, 3}));
  for (const char* bad : {"* x\n", "* -1\n", "* 0\n", "* 1.5\n"}) {
    try {
      ParsePdaText(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(PdaTest, SubsetsAreLexicographic) {
  EXPECT_EQ(Subsets(4, 2), (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(Subsets(3, 0), (std::vector<std::vector<int>>{{}}));
  EXPECT_TRUE(Subsets(2, 3).empty());
}

}  // namespace
}  // namespace rsplfr
