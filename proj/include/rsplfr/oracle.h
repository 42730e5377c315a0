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

#ifndef RSPLFR_ORACLE_H_
#define RSPLFR_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rsplfr/rational.h"
#include "rsplfr/scheme.h"

namespace rsplfr {

// 10^7, or the value of RSPLFR_BUDGET when set to a positive integer.
std::uint64_t DefaultBudget();

struct OracleOptions {
  std::uint64_t budget = DefaultBudget();
  unsigned threads = 1;
  // Correctness only: sample size and seed used above the budget.
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0;
};

enum class Condition {
  kCorrectness,
  kSecurity,       // W independent of X_[H]
  kSecurityJoint,  // (W, d) independent of X_[H]
  kUserPrivacy,    // d outside S independent of (Z_S, X_[H], d_S) given W
  kServerPrivacy,  // d independent of (Q, Wbar, V)
};
std::string_view ConditionName(Condition c);

// Whether the variant is designed to satisfy the condition.
bool ExpectedToHold(Condition c, Variant v);

// Number of equally likely worlds: files, security keys, free privacy-key
// symbols and demand tuples (unit vectors for kFP).
BigInt WorldCount(const SchemeConfig& config);

struct IndependenceReport {
  Condition condition = Condition::kSecurity;
  Variant variant = Variant::kLSP;
  std::vector<std::size_t> users;  // the colluding set S for kUserPrivacy
  std::uint64_t world_count = 0;
  // max over the conditioning value c and outcomes a, b of
  // |P(a,b|c) - P(a|c) P(b|c)|, computed from exact counts.
  Rational max_deviation;
  bool holds() const { return max_deviation == 0; }
};

// Each throws Error(kBudgetExceeded) when WorldCount exceeds the budget.
IndependenceReport CheckSecurity(const SchemeConfig& config, const OracleOptions& options = {});
IndependenceReport CheckSecurityJoint(const SchemeConfig& config,
                                      const OracleOptions& options = {});
// One report per non-empty proper subset S of the users, in order of size
// then lexicographically.
std::vector<IndependenceReport> CheckUserPrivacy(const SchemeConfig& config,
                                                 const OracleOptions& options = {});
IndependenceReport CheckServerPrivacy(const SchemeConfig& config,
                                      const OracleOptions& options = {});

struct CorrectnessReport {
  Variant variant = Variant::kLSP;
  std::uint64_t demand_tuples = 0;  // tuples examined
  BigInt assignments;               // (tuple, per-user subset choice) pairs examined
  BigInt successes;
  BigInt total;                     // demand space times C(H,L)^K
  bool exhaustive = true;
  bool holds() const { return successes == assignments; }
  double coverage() const;
};

// Fixed library and keys drawn from config.seed(). For each demand tuple all
// users decode from every L-subset; an assignment of subsets to users
// succeeds iff each of its decodes is exact. Above the budget, a sample of
// `samples` demand tuples is examined instead.
CorrectnessReport CheckCorrectness(const SchemeConfig& config, const OracleOptions& options = {});

nlohmann::json ToJson(const IndependenceReport& report);
nlohmann::json ToJson(const CorrectnessReport& report);

}  // namespace rsplfr

#endif  // RSPLFR_ORACLE_H_
