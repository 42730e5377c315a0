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

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rsplfr/error.h"

namespace rsplfr {
namespace {

std::string FormatColumns(const std::vector<std::size_t>& columns) {
  std::string s = "{";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(columns[i] + 1);
  }
  return s + "}";
}

// Advances `c` to the next L-subset of [0, H) in lexicographic order.
bool NextSubset(std::vector<std::size_t>& c, std::size_t H) {
  const std::size_t L = c.size();
  for (std::size_t i = L; i-- > 0;) {
    if (c[i] < H - L + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < L; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

NotMdsError::NotMdsError(std::vector<std::size_t> columns)
    : Error(ErrorCode::kNotMds,
            "columns " + FormatColumns(columns) + " form a singular submatrix"),
      columns_(std::move(columns)) {}

MdsCheck CheckMds(const Matrix& generator) {
  MdsCheck check;
  const std::size_t L = generator.rows();
  const std::size_t H = generator.cols();
  if (L == 0 || L > H) {
    check.is_mds = false;
    return check;
  }
  std::vector<std::size_t> columns(L);
  std::iota(columns.begin(), columns.end(), 0);
  do {
    if (!Inverse(generator.SelectColumns(columns))) {
      check.singular_columns = columns;
      return check;
    }
  } while (NextSubset(columns, H));
  check.is_mds = true;
  return check;
}

std::uint64_t ColumnSubsetCount(std::size_t L, std::size_t H) {
  if (L > H) return 0;
  const std::size_t k = std::min(L, H - L);
  unsigned __int128 result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (H - k + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max()) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

MdsCode MdsCode::Vandermonde(std::size_t L, std::size_t H, const Field& field) {
  if (field.q() < H) {
    throw Error(ErrorCode::kFieldTooSmall,
                field.Name() + " has fewer than H=" + std::to_string(H) +
                    " distinct evaluation points");
  }
  if (L == 0 || L > H) {
    throw Error(ErrorCode::kConfigInvalid, "Vandermonde code needs 1 <= L <= H");
  }
  Matrix g(field, L, H);
  for (std::size_t h = 0; h < H; ++h) {
    for (std::size_t l = 0; l < L; ++l) {
      g.at(l, h) = field.Pow(static_cast<Symbol>(h), l);
    }
  }
  return MdsCode(std::move(g));
}

MdsCode MdsCode::FromGenerator(Matrix generator, MdsValidation validation) {
  if (generator.rows() == 0 || generator.rows() > generator.cols()) {
    throw Error(ErrorCode::kConfigInvalid, "generator must be L x H with 1 <= L <= H");
  }
  if (validation == MdsValidation::kExhaustive) {
    MdsCheck check = CheckMds(generator);
    if (!check.is_mds) throw NotMdsError(std::move(check.singular_columns));
  }
  return MdsCode(std::move(generator));
}

std::vector<Symbol> MdsCode::Encode(std::span<const Symbol> info) const {
  if (info.size() != L()) {
    throw Error(ErrorCode::kLengthMismatch, "expected " + std::to_string(L()) +
                                                " information symbols, got " +
                                                std::to_string(info.size()));
  }
  std::vector<Symbol> out(H());
  for (std::size_t h = 0; h < H(); ++h) out[h] = EncodeAt(info, h);
  return out;
}

Symbol MdsCode::EncodeAt(std::span<const Symbol> info, std::size_t column) const {
  const Field& f = field();
  Symbol acc = 0;
  for (std::size_t l = 0; l < info.size(); ++l) acc = f.AddScaled(acc, g(l, column), info[l]);
  return acc;
}

std::vector<Block> MdsCode::EncodeBlocks(const std::vector<Block>& info) const {
  if (info.size() != L()) {
    throw Error(ErrorCode::kLengthMismatch, "expected " + std::to_string(L()) + " blocks");
  }
  const std::size_t len = info.front().size();
  for (const auto& b : info) {
    if (b.size() != len) throw Error(ErrorCode::kLengthMismatch, "blocks differ in length");
  }
  const Field& f = field();
  std::vector<Block> out(H(), Block(len, 0));
  for (std::size_t h = 0; h < H(); ++h) {
    for (std::size_t l = 0; l < L(); ++l) {
      const Symbol c = g(l, h);
      if (c == 0) continue;
      for (std::size_t x = 0; x < len; ++x) out[h][x] = f.AddScaled(out[h][x], c, info[l][x]);
    }
  }
  return out;
}

Matrix MdsCode::DecodingMatrix(std::span<const std::size_t> columns) const {
  if (columns.size() != L()) {
    throw Error(ErrorCode::kLengthMismatch, "decoding needs exactly L=" +
                                                std::to_string(L()) + " columns");
  }
  std::vector<std::size_t> sorted(columns.begin(), columns.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.back() >= H()) {
    throw Error(ErrorCode::kConfigInvalid, "decoding columns must be distinct and < H");
  }
  auto inv = Inverse(generator_.SelectColumns(columns));
  if (!inv) {
    throw Error(ErrorCode::kSingularSubmatrix,
                "columns " + FormatColumns({columns.begin(), columns.end()}) +
                    " are singular; generator is corrupt");
  }
  return *inv;
}

std::vector<Symbol> MdsCode::Decode(std::span<const std::size_t> columns,
                                    std::span<const Symbol> values) const {
  if (values.size() != columns.size()) {
    throw Error(ErrorCode::kLengthMismatch, "one value per column expected");
  }
  const Matrix d = DecodingMatrix(columns);
  const Field& f = field();
  std::vector<Symbol> info(L(), 0);
  for (std::size_t l = 0; l < L(); ++l) {
    for (std::size_t j = 0; j < L(); ++j) info[l] = f.AddScaled(info[l], values[j], d.at(j, l));
  }
  return info;
}

nlohmann::json MdsToJson(const MdsCode& code) {
  return {{"q", code.field().q()},
          {"L", code.L()},
          {"H", code.H()},
          {"G", code.generator().ToRows()}};
}

MdsCode MdsFromJson(const nlohmann::json& j, MdsValidation validation) {
  try {
    const Field field = Field::Create(j.at("q").get<std::uint32_t>());
    const auto rows = j.at("G").get<std::vector<std::vector<Symbol>>>();
    Matrix g = Matrix::FromRows(field, rows);
    if (j.contains("L") && j.at("L").get<std::size_t>() != g.rows()) {
      throw Error(ErrorCode::kParseError, "L does not match the number of rows of G");
    }
    if (j.contains("H") && j.at("H").get<std::size_t>() != g.cols()) {
      throw Error(ErrorCode::kParseError, "H does not match the number of columns of G");
    }
    return MdsCode::FromGenerator(std::move(g), validation);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("generator JSON: ") + e.what());
  }
}

}  // namespace rsplfr
