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

#ifndef RSPLFR_MDS_H_
#define RSPLFR_MDS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "rsplfr/error.h"
#include "rsplfr/gf.h"
#include "rsplfr/linalg.h"

namespace rsplfr {

// A contiguous run of symbols: one packet of a file, a key, or a signal.
using Block = std::vector<Symbol>;

struct MdsCheck {
  bool is_mds = false;
  // 0-based column subset whose L x L submatrix is singular (empty if MDS).
  std::vector<std::size_t> singular_columns;
};

// Exhaustive minor check over all C(H, L) column subsets, in lexicographic
// order; the first singular subset is reported.
MdsCheck CheckMds(const Matrix& generator);

// Thrown by MdsCode::FromGenerator for a non-MDS matrix.
class NotMdsError : public Error {
 public:
  explicit NotMdsError(std::vector<std::size_t> columns);
  const std::vector<std::size_t>& columns() const { return columns_; }

 private:
  std::vector<std::size_t> columns_;
};

enum class MdsValidation { kExhaustive, kSkip };

// (H, L) MDS code with an L x H generator matrix G: info (x_1..x_L) is
// encoded to (sum_l g_{l,h} x_l)_{h in [H]}. Server and column indices are
// 0-based here.
class MdsCode {
 public:
  // G[l][h] = alpha_h^l with alpha_h = h (the first H canonical symbols).
  // Throws Error(kFieldTooSmall) when q < H.
  static MdsCode Vandermonde(std::size_t L, std::size_t H, const Field& field);

  // Throws NotMdsError listing a singular column subset.
  static MdsCode FromGenerator(Matrix generator,
                               MdsValidation validation = MdsValidation::kExhaustive);

  std::size_t L() const { return generator_.rows(); }
  std::size_t H() const { return generator_.cols(); }
  const Field& field() const { return generator_.field(); }
  const Matrix& generator() const { return generator_; }
  Symbol g(std::size_t l, std::size_t h) const { return generator_.at(l, h); }

  // Throws Error(kLengthMismatch) unless info.size() == L.
  std::vector<Symbol> Encode(std::span<const Symbol> info) const;
  // Coded symbol of a single column.
  Symbol EncodeAt(std::span<const Symbol> info, std::size_t column) const;

  // Element-wise encoding of L equal-length blocks into H blocks.
  std::vector<Block> EncodeBlocks(const std::vector<Block>& info) const;

  // Inverts the submatrix on `columns` (distinct, |columns| == L).
  // Throws kLengthMismatch / kConfigInvalid on bad columns and
  // kSingularSubmatrix if the submatrix is not invertible.
  std::vector<Symbol> Decode(std::span<const std::size_t> columns,
                             std::span<const Symbol> values) const;

  // Decoding matrix D with info = values * D for the given columns.
  Matrix DecodingMatrix(std::span<const std::size_t> columns) const;

  friend bool operator==(const MdsCode& a, const MdsCode& b) {
    return a.generator_ == b.generator_;
  }

 private:
  explicit MdsCode(Matrix generator) : generator_(std::move(generator)) {}

  Matrix generator_;
};

// {"q": int, "L": int, "H": int, "G": [[int]]}
nlohmann::json MdsToJson(const MdsCode& code);
MdsCode MdsFromJson(const nlohmann::json& j,
                    MdsValidation validation = MdsValidation::kExhaustive);

// Number of L-subsets of [H] (saturating at 2^63).
std::uint64_t ColumnSubsetCount(std::size_t L, std::size_t H);

}  // namespace rsplfr

#endif  // RSPLFR_MDS_H_
