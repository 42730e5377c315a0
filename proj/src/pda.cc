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
#include <charconv>
#include <map>
#include <sstream>

namespace rsplfr {
namespace {

std::string Pos(CellPosition p) {
  return "(" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + ")";
}

std::string CellText(Cell c) { return c.is_star() ? "*" : std::to_string(c.symbol()); }

}  // namespace

Cell Cell::Ordinary(int s) {
  if (s < 1) {
    throw Error(ErrorCode::kMalformedArray,
                "ordinary symbols are positive integers, got " + std::to_string(s));
  }
  return Cell(s);
}

int Cell::symbol() const {
  if (is_star()) throw Error(ErrorCode::kDomainError, "star has no symbol");
  return value_;
}

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

Pda Pda::Validate(std::vector<std::vector<Cell>> entries) {
  if (entries.empty() || entries.front().empty()) {
    throw PdaViolation(ErrorCode::kMalformedArray, "array is empty");
  }
  const int F = static_cast<int>(entries.size());
  const int K = static_cast<int>(entries.front().size());
  for (int i = 0; i < F; ++i) {
    if (static_cast<int>(entries[i].size()) != K) {
      throw PdaViolation(ErrorCode::kMalformedArray,
                         "row " + std::to_string(i + 1) + " has " +
                             std::to_string(entries[i].size()) + " entries, expected " +
                             std::to_string(K));
    }
  }

  int S = 0;
  std::map<int, std::vector<CellPosition>> by_symbol;
  for (int i = 0; i < F; ++i) {
    for (int j = 0; j < K; ++j) {
      if (entries[i][j].is_star()) continue;
      const int s = entries[i][j].symbol();
      S = std::max(S, s);
      by_symbol[s].push_back({i, j});
    }
  }

  // Pairwise conditions, scanning symbols in increasing order and pairs in
  // row-major order.
  for (const auto& [s, cells] : by_symbol) {
    for (std::size_t x = 0; x < cells.size(); ++x) {
      for (std::size_t y = x + 1; y < cells.size(); ++y) {
        const CellPosition a = cells[x];
        const CellPosition b = cells[y];
        if (a.row == b.row || a.col == b.col) {
          throw PdaViolation(ErrorCode::kConditionA,
                             "symbol " + std::to_string(s) + " at " + Pos(a) + " and " +
                                 Pos(b) + " shares a " +
                                 (a.row == b.row ? "row" : "column"),
                             a, b);
        }
        const Cell c1 = entries[a.row][b.col];
        const Cell c2 = entries[b.row][a.col];
        if (!c1.is_star() || !c2.is_star()) {
          const CellPosition bad = !c1.is_star() ? CellPosition{a.row, b.col}
                                                 : CellPosition{b.row, a.col};
          throw PdaViolation(ErrorCode::kConditionB,
                             "symbol " + std::to_string(s) + " at " + Pos(a) + " and " +
                                 Pos(b) + ": entry " + Pos(bad) + " is " +
                                 CellText(entries[bad.row][bad.col]) + ", not *",
                             a, b);
        }
      }
    }
  }

  int Z = -1;
  for (int j = 0; j < K; ++j) {
    int stars = 0;
    for (int i = 0; i < F; ++i) stars += entries[i][j].is_star() ? 1 : 0;
    if (Z < 0) {
      Z = stars;
    } else if (stars != Z) {
      throw PdaViolation(ErrorCode::kUnequalStarCounts,
                         "column 1 has " + std::to_string(Z) + " stars but column " +
                             std::to_string(j + 1) + " has " + std::to_string(stars));
    }
  }

  for (int s = 1; s <= S; ++s) {
    if (!by_symbol.count(s)) {
      throw PdaViolation(ErrorCode::kSymbolGap,
                         "symbol " + std::to_string(s) + " of [" + std::to_string(S) +
                             "] never occurs");
    }
  }

  Pda pda;
  pda.params_ = {K, F, Z, S};
  pda.entries_ = std::move(entries);
  pda.occurrences_.resize(S);
  for (auto& [s, cells] : by_symbol) pda.occurrences_[s - 1] = std::move(cells);
  return pda;
}

Pda Pda::Man(int K, int t) {
  if (K < 1 || t < 0 || t > K) {
    throw Error(ErrorCode::kConfigInvalid,
                "MAN-PDA needs K >= 1 and 0 <= t <= K (K=" + std::to_string(K) +
                    ", t=" + std::to_string(t) + ")");
  }
  std::vector<std::vector<int>> rows = Subsets(K, t);
  std::vector<std::vector<int>> symbols = Subsets(K, t + 1);
  std::map<std::vector<int>, int> rank;
  for (std::size_t s = 0; s < symbols.size(); ++s) rank[symbols[s]] = static_cast<int>(s) + 1;

  std::vector<std::vector<Cell>> entries(rows.size(), std::vector<Cell>(K, Cell::Star()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < K; ++j) {
      const auto& T = rows[i];
      if (std::find(T.begin(), T.end(), j) != T.end()) continue;
      std::vector<int> J = T;
      J.insert(std::upper_bound(J.begin(), J.end(), j), j);
      entries[i][j] = Cell::Ordinary(rank.at(J));
    }
  }
  Pda pda = Validate(std::move(entries));
  pda.man_t_ = t;
  pda.row_subsets_ = std::move(rows);
  pda.symbol_subsets_ = std::move(symbols);
  return pda;
}

std::vector<std::vector<Cell>> ParsePdaCells(std::string_view text) {
  std::vector<std::vector<Cell>> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<Cell> row;
    std::string tok;
    while (tokens >> tok) {
      if (tok == "*") {
        row.push_back(Cell::Star());
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) +
                                                ": bad PDA entry '" + tok + "'");
      }
      row.push_back(Cell::Ordinary(value));
    }
    if (!row.empty()) entries.push_back(std::move(row));
  }
  return entries;
}

Pda ParsePdaText(std::string_view text) { return Pda::Validate(ParsePdaCells(text)); }

std::string FormatPdaText(const Pda& pda) {
  std::string out;
  for (const auto& row : pda.entries()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += CellText(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace rsplfr
