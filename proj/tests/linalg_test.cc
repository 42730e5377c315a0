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

#include "rsplfr/linalg.h"

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "rsplfr/error.h"

namespace rsplfr {
namespace {

using Vec = std::vector<Symbol>;

// All F_q combinations of the rows.
std::set<Vec> Span(const Field& f, const std::vector<Vec>& rows, std::size_t dim) {
  std::set<Vec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) total *= f.q();
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vec v(dim, 0);
    std::size_t rest = idx;
    for (const auto& r : rows) {
      const Symbol c = rest % f.q();
      rest /= f.q();
      for (std::size_t j = 0; j < dim; ++j) v[j] = f.AddScaled(v[j], c, r[j]);
    }
    out.insert(v);
  }
  return out;
}

std::size_t BruteRank(const Field& f, const std::vector<Vec>& rows, std::size_t dim) {
  std::size_t size = Span(f, rows, dim).size(), r = 0;
  while (size > 1) {
    size /= f.q();
    ++r;
  }
  return r;
}

std::vector<Vec> RandomRows(const Field& f, Rng& rng, std::size_t n, std::size_t dim, int zero_bias) {
  std::vector<Vec> rows(n, Vec(dim));
  for (auto& r : rows) {
    for (auto& x : r) x = UniformSymbol(rng, zero_bias) == 0 ? UniformSymbol(rng, f.q()) : 0;
  }
  return rows;
}

TEST(LinalgTest, RankAgreesWithSpanEnumeration) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::Create(q);
    Rng rng(q * 101);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + UniformSymbol(rng, 5), dim = 1 + UniformSymbol(rng, 4);
      const auto rows = RandomRows(f, rng, n, dim, 2 + trial % 3);
      const Matrix m = Matrix::FromRows(f, rows);
      EXPECT_EQ(Rank(m), BruteRank(f, rows, dim)) << "q=" << q << " trial " << trial;
      EXPECT_EQ(IndependentRows(m).size(), Rank(m));
    }
  }
}

TEST(LinalgTest, IndependentRowsKeepsLeftmost) {
  const Field f = Field::Create(5);
  const Matrix m = Matrix::FromRows(f, {{1, 2, 0}, {2, 4, 0}, {0, 0, 1}, {1, 2, 1}});
  EXPECT_EQ(IndependentRows(m), (std::vector<std::size_t>{0, 2}));
}

TEST(LinalgTest, InverseRoundTrip) {
  for (std::uint32_t q : {2u, 7u, 16u}) {
    const Field f = Field::Create(q);
    Rng rng(q);
    int invertible = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = RandomRows(f, rng, 4, 4, 1);
      const Matrix m = Matrix::FromRows(f, rows);
      const auto inv = Inverse(m);
      EXPECT_EQ(inv.has_value(), Rank(m) == 4);
      if (inv) {
        ++invertible;
        EXPECT_EQ(Multiply(m, *inv), Matrix::Identity(f, 4));
        EXPECT_EQ(Multiply(*inv, m), Matrix::Identity(f, 4));
      }
    }
    EXPECT_GT(invertible, 0);
  }
}

TEST(LinalgTest, SolveRowCombination) {
  const Field f = Field::Create(7);
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = RandomRows(f, rng, 4, 6, 2);
    const Matrix m = Matrix::FromRows(f, rows);
    Vec coef(4);
    for (auto& c : coef) c = UniformSymbol(rng, 7);
    Vec target(6, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 6; ++j) target[j] = f.AddScaled(target[j], coef[i], rows[i][j]);
    }
    const auto sol = SolveRowCombination(m, target);
    ASSERT_TRUE(sol.has_value());
    Vec check(6, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 6; ++j) check[j] = f.AddScaled(check[j], (*sol)[i], rows[i][j]);
    }
    EXPECT_EQ(check, target);
  }
  const Matrix m = Matrix::FromRows(f, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_FALSE(SolveRowCombination(m, Vec{0, 0, 1}).has_value());
}

TEST(LinalgTest, RowBasisReportsIncrements) {
  const Field f = Field::Create(2);
  RowBasis basis(f, 3);
  EXPECT_TRUE(basis.TryAdd(Vec{1, 1, 0}));
  EXPECT_TRUE(basis.TryAdd(Vec{0, 1, 1}));
  EXPECT_FALSE(basis.TryAdd(Vec{1, 0, 1}));
  EXPECT_FALSE(basis.TryAdd(Vec{0, 0, 0}));
  EXPECT_TRUE(basis.TryAdd(Vec{0, 0, 1}));
  EXPECT_EQ(basis.rank(), 3u);
}

TEST(LinalgTest, FromRowsValidatesShapeAndEntries) {
  const Field f = Field::Create(3);
  try {
    Matrix::FromRows(f, {{1, 2}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedArray);
  }
  try {
    Matrix::FromRows(f, {{1, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainError);
  }
}

}  // namespace
}  // namespace rsplfr
