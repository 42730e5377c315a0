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

#ifndef RSPLFR_CONFIG_H_
#define RSPLFR_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rsplfr/mds.h"
#include "rsplfr/netsim.h"
#include "rsplfr/scheme.h"
#include "rsplfr/tradeoff.h"

namespace rsplfr {

// Generators whose exhaustive MDS check would visit more column subsets than
// this are refused unless validation is skipped.
inline constexpr std::uint64_t kMaxValidatedSubsets = 1'000'000;

struct RunSpec {
  SchemeConfig config;
  std::optional<std::vector<Demand>> demands;  // 0-based users
};

// Run config:
//   {"N", "K", "L", "H", "q", "t" | "pda_file", "G" | "vandermonde",
//    "variant", "B", "seed", "demands"}
// "pda_file" is resolved against base_dir. Without "G" a Vandermonde code is
// used. Throws Error(kConfigInvalid) / Error(kParseError).
RunSpec ParseRunConfig(const nlohmann::json& j, const std::filesystem::path& base_dir = {},
                       MdsValidation validation = MdsValidation::kExhaustive);
RunSpec LoadRunConfig(const std::filesystem::path& path,
                      MdsValidation validation = MdsValidation::kExhaustive);

// Scenario: a run config plus
//   "availability": {"<user>": [servers]} or [[servers] per user] (1-based)
//   "adversary": {"wiretap": bool, "colluding_users": [users], "colluding_servers": bool}
Scenario ParseScenario(const nlohmann::json& j, const std::filesystem::path& base_dir = {},
                       MdsValidation validation = MdsValidation::kExhaustive);
Scenario LoadScenario(const std::filesystem::path& path,
                      MdsValidation validation = MdsValidation::kExhaustive);

// Run presets: "toy", "micro-lsp", "micro-lp", "micro-fp", "micro-l".
// Throws Error(kConfigInvalid) for other names.
RunSpec RunPreset(std::string_view name);
std::vector<std::string> RunPresetNames();

// Tradeoff presets "fig2a", "fig2b", "fig2c"; nullopt for other names.
std::optional<TradeoffParameters> TradeoffPreset(std::string_view name);

// The given demands, or, when absent, a draw taken from the seeded generator
// after the randomness and the library (so the run itself is unchanged).
std::vector<Demand> ResolveDemands(const RunSpec& spec);

Scenario MakeScenario(const RunSpec& spec);

nlohmann::json RunConfigToJson(const SchemeConfig& config,
                               const std::optional<std::vector<Demand>>& demands = std::nullopt);

}  // namespace rsplfr

#endif  // RSPLFR_CONFIG_H_
