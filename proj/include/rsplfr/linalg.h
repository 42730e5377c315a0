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

#ifndef RSPLFR_LINALG_H_
#define RSPLFR_LINALG_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rsplfr/gf.h"

namespace rsplfr {

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  // Throws Error(kMalformedArray) on ragged input, kDomainError on entries >= q.
  static Matrix FromRows(Field field, const std::vector<std::vector<Symbol>>& rows);
  static Matrix Identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Symbol> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix SelectColumns(std::span<const std::size_t> columns) const;
  std::vector<std::vector<Symbol>> ToRows() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

Matrix Multiply(const Matrix& a, const Matrix& b);

// Inverse by Gauss-Jordan elimination, choosing in each column the topmost
// nonzero pivot. nullopt when singular. Requires a square matrix.
std::optional<Matrix> Inverse(const Matrix& m);

std::size_t Rank(const Matrix& m);

// Incremental row basis. Rows are offered in order; a row is kept iff it is
// not in the span of the rows kept before it, so on a fixed sequence the kept
// indices are the leftmost maximal independent subset.
class RowBasis {
 public:
  RowBasis(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  // Returns true (and records the row) iff it increased the rank.
  bool TryAdd(std::span<const Symbol> row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<Symbol>> reduced_;  // each normalized at its pivot
  std::vector<std::size_t> pivots_;
};

// Indices of the rows kept when scanning top to bottom with RowBasis.
std::vector<std::size_t> IndependentRows(const Matrix& m);

// Solves c^T * rows = target for the coefficient vector c (length
// rows.rows()). Returns nullopt when target is outside the row span. Free
// variables are set to zero so the result is deterministic.
std::optional<std::vector<Symbol>> SolveRowCombination(const Matrix& rows,
                                                       std::span<const Symbol> target);

}  // namespace rsplfr

#endif  // RSPLFR_LINALG_H_
