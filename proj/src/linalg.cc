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

#include <utility>

#include "rsplfr/error.h"

namespace rsplfr {

Matrix Matrix::FromRows(Field field, const std::vector<std::vector<Symbol>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kMalformedArray,
                  "row " + std::to_string(r + 1) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!m.field_.Contains(rows[r][c])) {
        throw Error(ErrorCode::kDomainError,
                    "entry " + std::to_string(rows[r][c]) + " is not in " +
                        m.field_.Name());
      }
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::Identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::SelectColumns(std::span<const std::size_t> columns) const {
  Matrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) out.at(r, j) = at(r, columns[j]);
  }
  return out;
}

std::vector<std::vector<Symbol>> Matrix::ToRows() const {
  std::vector<std::vector<Symbol>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

Matrix Multiply(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kFieldMismatch, a.field().Name() + " vs " + b.field().Name());
  }
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kLengthMismatch, "inner dimensions differ");
  }
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol c = a.at(i, k);
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.AddScaled(out.at(i, j), c, b.at(k, j));
      }
    }
  }
  return out;
}

std::optional<Matrix> Inverse(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kLengthMismatch, "inverse of a non-square matrix");
  }
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::Identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Symbol scale = f.Inv(work.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) = f.Mul(work.at(col, j), scale);
      inv.at(col, j) = f.Mul(inv.at(col, j), scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const Symbol factor = f.Neg(work.at(r, col));
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) = f.AddScaled(work.at(r, j), factor, work.at(col, j));
        inv.at(r, j) = f.AddScaled(inv.at(r, j), factor, inv.at(col, j));
      }
    }
  }
  return inv;
}

bool RowBasis::TryAdd(std::span<const Symbol> row) {
  if (row.size() != dim_) {
    throw Error(ErrorCode::kLengthMismatch, "row length differs from basis dimension");
  }
  std::vector<Symbol> v(row.begin(), row.end());
  for (std::size_t b = 0; b < reduced_.size(); ++b) {
    const Symbol c = v[pivots_[b]];
    if (c == 0) continue;
    const Symbol factor = field_.Neg(c);
    for (std::size_t j = 0; j < dim_; ++j) {
      v[j] = field_.AddScaled(v[j], factor, reduced_[b][j]);
    }
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const Symbol scale = field_.Inv(v[pivot]);
  for (auto& x : v) x = field_.Mul(x, scale);
  reduced_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::vector<std::size_t> IndependentRows(const Matrix& m) {
  RowBasis basis(m.field(), m.cols());
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (basis.TryAdd(m.row(r))) kept.push_back(r);
  }
  return kept;
}

std::size_t Rank(const Matrix& m) { return IndependentRows(m).size(); }

std::optional<std::vector<Symbol>> SolveRowCombination(const Matrix& rows,
                                                       std::span<const Symbol> target) {
  if (target.size() != rows.cols()) {
    throw Error(ErrorCode::kLengthMismatch, "target length differs from row length");
  }
  const Field& f = rows.field();
  const std::size_t n = rows.rows();
  const std::size_t dim = rows.cols();
  // Augmented system A^T c = target: dim equations in n unknowns.
  std::vector<std::vector<Symbol>> eq(dim, std::vector<Symbol>(n + 1, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t r = 0; r < n; ++r) eq[j][r] = rows.at(r, j);
    eq[j][n] = target[j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < dim; ++col) {
    std::size_t p = rank;
    while (p < dim && eq[p][col] == 0) ++p;
    if (p == dim) continue;
    std::swap(eq[p], eq[rank]);
    const Symbol scale = f.Inv(eq[rank][col]);
    for (auto& x : eq[rank]) x = f.Mul(x, scale);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == rank || eq[r][col] == 0) continue;
      const Symbol factor = f.Neg(eq[r][col]);
      for (std::size_t j = 0; j <= n; ++j) eq[r][j] = f.AddScaled(eq[r][j], factor, eq[rank][j]);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < dim; ++r) {
    if (eq[r][n] != 0) return std::nullopt;
  }
  std::vector<Symbol> c(n, 0);
  for (std::size_t r = 0; r < rank; ++r) c[pivot_col[r]] = eq[r][n];
  return c;
}

}  // namespace rsplfr
