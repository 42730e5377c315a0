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

#ifndef RSPLFR_PDA_H_
#define RSPLFR_PDA_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsplfr/error.h"

namespace rsplfr {

// One entry of a placement delivery array: the star, or an ordinary symbol
// s >= 1.
class Cell {
 public:
  static constexpr Cell Star() { return Cell(0); }
  // Throws Error(kMalformedArray) for s < 1.
  static Cell Ordinary(int s);

  constexpr bool is_star() const { return value_ == 0; }
  // Throws Error(kDomainError) on a star.
  int symbol() const;

  friend constexpr bool operator==(Cell a, Cell b) { return a.value_ == b.value_; }

 private:
  explicit constexpr Cell(int value) : value_(value) {}
  int value_;
};

struct PdaParameters {
  int K = 0;
  int F = 0;
  int Z = 0;
  int S = 0;
  friend bool operator==(const PdaParameters&, const PdaParameters&) = default;
};

// Position of an entry, 0-based (row i in [0, F), column j in [0, K)).
struct CellPosition {
  int row = 0;
  int col = 0;
  friend bool operator==(const CellPosition&, const CellPosition&) = default;
};

// Validation failure naming the offending pair of entries and the violated
// rule (kConditionA: same row or column; kConditionB: the 2x2 sub-array is not
// of star form). For star-count / symbol-gap failures the positions are
// unused.
class PdaViolation : public Error {
 public:
  PdaViolation(ErrorCode code, const std::string& message, CellPosition first = {},
               CellPosition second = {})
      : Error(code, message), first_(first), second_(second) {}

  CellPosition first() const { return first_; }
  CellPosition second() const { return second_; }

 private:
  CellPosition first_;
  CellPosition second_;
};

// A validated (K, F, Z, S) placement delivery array. Rows index packets,
// columns index users.
class Pda {
 public:
  // Checks, in order: rectangular non-empty shape, the pairwise conditions a)
  // and b) over every repeated ordinary symbol, equal star counts per column,
  // and that every symbol of [S] occurs. Throws PdaViolation.
  static Pda Validate(std::vector<std::vector<Cell>> entries);

  // MAN-PDA for 0 <= t <= K: rows are the t-subsets of users in lexicographic
  // order, symbols are lexicographic ranks of (t+1)-subsets. Throws
  // kConfigInvalid outside that range.
  static Pda Man(int K, int t);

  int K() const { return params_.K; }
  int F() const { return params_.F; }
  int Z() const { return params_.Z; }
  int S() const { return params_.S; }
  PdaParameters parameters() const { return params_; }

  Cell at(int row, int col) const { return entries_[row][col]; }
  const std::vector<std::vector<Cell>>& entries() const { return entries_; }

  // Entries carrying ordinary symbol s (1-based), in row-major order.
  const std::vector<CellPosition>& occurrences(int s) const { return occurrences_[s - 1]; }

  // MAN structure, present only for arrays built by Man().
  bool is_man() const { return man_t_.has_value(); }
  std::optional<int> man_t() const { return man_t_; }
  // 0-based user subsets T_u of each row.
  const std::vector<std::vector<int>>& row_subsets() const { return row_subsets_; }
  // 0-based user subset J of each symbol s (index s-1).
  const std::vector<std::vector<int>>& symbol_subsets() const { return symbol_subsets_; }

  friend bool operator==(const Pda& a, const Pda& b) { return a.entries_ == b.entries_; }

 private:
  Pda() = default;

  PdaParameters params_;
  std::vector<std::vector<Cell>> entries_;
  std::vector<std::vector<CellPosition>> occurrences_;
  std::optional<int> man_t_;
  std::vector<std::vector<int>> row_subsets_;
  std::vector<std::vector<int>> symbol_subsets_;
};

// Text format: one row per line, entries separated by whitespace, '*' for the
// star and positive integers for symbols. Blank lines and '#' comments are
// ignored. Throws Error(kParseError) on bad tokens, then validates.
Pda ParsePdaText(std::string_view text);
std::vector<std::vector<Cell>> ParsePdaCells(std::string_view text);
std::string FormatPdaText(const Pda& pda);

// All k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int k);

}  // namespace rsplfr

#endif  // RSPLFR_PDA_H_
