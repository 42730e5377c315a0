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

#include "rsplfr/mds.h"

#include <vector>

#include "gtest/gtest.h"
#include "rsplfr/error.h"
#include "rsplfr/pda.h"

namespace rsplfr {
namespace {

using Vec = std::vector<Symbol>;

MdsCode Toy() {
  return MdsCode::FromGenerator(Matrix::FromRows(Field::Create(2), {{1, 0, 1}, {0, 1, 1}}));
}

// Codeword by explicit matrix-vector product.
Vec DirectEncode(const Matrix& g, const Vec& info) {
  const Field& f = g.field();
  Vec out(g.cols(), 0);
  for (std::size_t h = 0; h < g.cols(); ++h) {
    for (std::size_t l = 0; l < g.rows(); ++l) out[h] = f.AddScaled(out[h], g.at(l, h), info[l]);
  }
  return out;
}

TEST(MdsTest, VandermondeOverFourElements) {
  const MdsCode code = MdsCode::Vandermonde(2, 3, Field::Create(4));
  EXPECT_EQ(code.generator().ToRows(), (std::vector<Vec>{{1, 1, 1}, {0, 1, 2}}));
}

TEST(MdsTest, VandermondeRepetition) {
  const MdsCode code = MdsCode::Vandermonde(1, 2, Field::Create(2));
  EXPECT_EQ(code.generator().ToRows(), (std::vector<Vec>{{1, 1}}));
}

TEST(MdsTest, VandermondeNeedsEnoughPoints) {
  try {
    MdsCode::Vandermonde(2, 3, Field::Create(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldTooSmall);
  }
}

TEST(MdsTest, VandermondeCodesPassTheMinorCheck) {
  for (std::uint32_t q : {5u, 7u, 8u, 16u}) {
    for (std::size_t H = 1; H <= std::min<std::uint32_t>(q, 7); ++H) {
      for (std::size_t L = 1; L <= H; ++L) {
        const MdsCode code = MdsCode::Vandermonde(L, H, Field::Create(q));
        EXPECT_TRUE(CheckMds(code.generator()).is_mds) << q << " " << L << " " << H;
      }
    }
  }
}

TEST(MdsTest, ToyGeneratorIsMds) {
  const MdsCode code = Toy();
  EXPECT_EQ(code.L(), 2u);
  EXPECT_EQ(code.H(), 3u);
}

TEST(MdsTest, SingularColumnsAreReported) {
  try {
    MdsCode::FromGenerator(Matrix::FromRows(Field::Create(2), {{1, 0, 1}, {0, 1, 0}}));
    FAIL();
  } catch (const NotMdsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMds);
    EXPECT_EQ(e.columns(), (std::vector<std::size_t>{0, 2}));
  }
}

TEST(MdsTest, IdentityIsMds) {
  const MdsCode code = MdsCode::FromGenerator(Matrix::Identity(Field::Create(3), 2));
  EXPECT_EQ(code.Encode(Vec{1, 2}), (Vec{1, 2}));
}

TEST(MdsTest, ToyEncoding) {
  const MdsCode code = Toy();
  EXPECT_EQ(code.Encode(Vec{1, 0}), (Vec{1, 0, 1}));
  EXPECT_EQ(code.Encode(Vec{0, 0}), (Vec{0, 0, 0}));
  try {
    code.Encode(Vec{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(MdsTest, VandermondeEncodingMatchesMatrixProduct) {
  const MdsCode code = MdsCode::Vandermonde(2, 3, Field::Create(4));
  for (Symbol a = 0; a < 4; ++a) {
    for (Symbol b = 0; b < 4; ++b) {
      EXPECT_EQ(code.Encode(Vec{a, b}), DirectEncode(code.generator(), Vec{a, b}));
    }
  }
}

TEST(MdsTest, ToyDecodeFromFirstAndThirdServer) {
  const MdsCode code = Toy();
  for (Symbol a = 0; a < 2; ++a) {
    for (Symbol b = 0; b < 2; ++b) {
      const std::vector<std::size_t> cols{0, 2};
      EXPECT_EQ(code.Decode(cols, Vec{a, static_cast<Symbol>(a ^ b)}), (Vec{a, b}));
      const std::vector<std::size_t> systematic{0, 1};
      EXPECT_EQ(code.Decode(systematic, Vec{a, b}), (Vec{a, b}));
    }
  }
}

TEST(MdsTest, RoundTripOnEveryColumnSubset) {
  for (std::uint32_t q : {7u, 16u}) {
    const MdsCode code = MdsCode::Vandermonde(3, 6, Field::Create(q));
    Rng rng(q);
    for (int trial = 0; trial < 100; ++trial) {
      Vec info(3);
      for (auto& x : info) x = UniformSymbol(rng, q);
      const Vec word = code.Encode(info);
      for (const auto& subset : Subsets(6, 3)) {
        std::vector<std::size_t> cols(subset.begin(), subset.end());
        Vec values;
        for (std::size_t c : cols) values.push_back(word[c]);
        ASSERT_EQ(code.Decode(cols, values), info);
      }
    }
  }
}

TEST(MdsTest, EncodingIsLinear) {
  const Field f = Field::Create(11);
  const MdsCode code = MdsCode::Vandermonde(3, 5, f);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Vec x(3), y(3), z(3);
    const Symbol u = UniformSymbol(rng, 11), v = UniformSymbol(rng, 11);
    for (int i = 0; i < 3; ++i) {
      x[i] = UniformSymbol(rng, 11);
      y[i] = UniformSymbol(rng, 11);
      z[i] = f.Add(f.Mul(u, x[i]), f.Mul(v, y[i]));
    }
    const Vec ex = code.Encode(x), ey = code.Encode(y), ez = code.Encode(z);
    for (int h = 0; h < 5; ++h) EXPECT_EQ(ez[h], f.Add(f.Mul(u, ex[h]), f.Mul(v, ey[h])));
  }
}

TEST(MdsTest, BlockEncodingCommutesWithFileCombinations) {
  const Field f = Field::Create(5);
  const MdsCode code = MdsCode::Vandermonde(2, 4, f);
  Rng rng(9);
  // Two files, each two subfiles of three symbols.
  std::vector<std::vector<Block>> files(2, std::vector<Block>(2, Block(3)));
  for (auto& file : files) {
    for (auto& sub : file) {
      for (auto& x : sub) x = UniformSymbol(rng, 5);
    }
  }
  const Vec a{3, 2};
  std::vector<Block> combined(2, Block(3, 0));
  for (int l = 0; l < 2; ++l) {
    for (int j = 0; j < 3; ++j) {
      for (int n = 0; n < 2; ++n) combined[l][j] = f.AddScaled(combined[l][j], a[n], files[n][l][j]);
    }
  }
  const auto coded_combination = code.EncodeBlocks(combined);
  const auto c0 = code.EncodeBlocks(files[0]), c1 = code.EncodeBlocks(files[1]);
  for (int h = 0; h < 4; ++h) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(coded_combination[h][j], f.Add(f.Mul(a[0], c0[h][j]), f.Mul(a[1], c1[h][j])));
    }
  }
}

TEST(MdsTest, DecodingMatrixRejectsBadColumnSets) {
  const MdsCode code = Toy();
  EXPECT_THROW(code.DecodingMatrix(std::vector<std::size_t>{0}), Error);
  EXPECT_THROW(code.DecodingMatrix(std::vector<std::size_t>{1, 1}), Error);
  EXPECT_THROW(code.DecodingMatrix(std::vector<std::size_t>{0, 3}), Error);
}

TEST(MdsTest, JsonRoundTrip) {
  const MdsCode code = Toy();
  const auto j = MdsToJson(code);
  EXPECT_EQ(j.at("q"), 2);
  EXPECT_EQ(j.at("L"), 2);
  EXPECT_EQ(j.at("H"), 3);
  EXPECT_EQ(MdsFromJson(j), code);
  try {
    MdsFromJson(nlohmann::json{{"q", 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(MdsTest, ColumnSubsetCount) {
  EXPECT_EQ(ColumnSubsetCount(2, 3), 3u);
  EXPECT_EQ(ColumnSubsetCount(15, 20), 15504u);
}

}  // namespace
}  // namespace rsplfr
