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

#ifndef RSPLFR_NETSIM_H_
#define RSPLFR_NETSIM_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rsplfr/scheme.h"

namespace rsplfr {

struct Scenario {
  SchemeConfig config;
  std::vector<Demand> demands;
  // Servers (0-based) whose signals reach user k. Users missing from the map
  // receive every server.
  std::map<std::size_t, std::vector<std::size_t>> availability;
  bool wiretap = false;
  std::vector<std::size_t> colluding_users;
  bool colluding_servers = false;
};

enum class Phase { kPlacement, kQuery, kDelivery };
std::string_view PhaseName(Phase phase);

// One logical message. Endpoints are "placement", "server:<h>", "user:<k>"
// and "broadcast" (1-based ids in names).
struct Message {
  Phase phase = Phase::kPlacement;
  std::size_t step = 0;
  std::string sender;
  std::string receiver;
  std::size_t symbols = 0;
};

struct DecodeOutcome {
  std::size_t user = 0;
  std::vector<std::size_t> servers;  // servers the user heard
  bool decoded = false;             // RobustDecode returned
  bool correct = false;             // and matched sum_n d_{k,n} W_n
  std::string error;                // message of the failure, if any
  std::vector<Symbol> output;
};

struct Transcript {
  ProtocolRun run;
  std::vector<std::vector<std::size_t>> availability;  // resolved, per user
  std::vector<Message> messages;                       // canonical order
  std::map<std::pair<std::string, std::string>, std::size_t> link_totals;
  std::vector<DecodeOutcome> outcomes;                 // empty without decoding
  MeasuredTradeoff measured;
  std::size_t uplink_symbols = 0;
  std::size_t downlink_symbols = 0;  // payload + query echoes, all servers
};

// Runs placement, the K*H uplink queries, the H broadcasts (computed
// concurrently) and, when `decode` is set, every user's decode from its
// available servers. Scheme errors of a single user are recorded in its
// outcome. Throws Error(kConfigInvalid) on a malformed availability entry.
Transcript SimulateWorld(const SchemeConfig& config, Library library, Randomness randomness,
                         std::vector<Demand> demands,
                         const std::map<std::size_t, std::vector<std::size_t>>& availability,
                         bool decode = true);

// Seeded run: randomness, then a synthetic library, from config.seed().
Transcript Simulate(const Scenario& scenario);

enum class AdversaryKind { kWiretapper, kColludingServers, kColludingUsers };
// Accepts "wiretapper", "colluding-servers", "colluding-users".
// Throws Error(kUnknownAdversary).
AdversaryKind ParseAdversaryKind(std::string_view name);
std::string_view AdversaryKindName(AdversaryKind kind);

// The observation of one adversary, flattened in a fixed order so that views
// can be compared and counted.
//   wiretapper         X_1..X_H (echoed queries, block ids, blocks)
//   colluding servers  queries, coded stores of every server, V
//   colluding users    Z_k and d_k for k in S (increasing), then X_1..X_H
struct AdversaryView {
  AdversaryKind kind = AdversaryKind::kWiretapper;
  std::vector<std::size_t> users;
  std::vector<Symbol> symbols;
  friend bool operator==(const AdversaryView&, const AdversaryView&) = default;
};

// Throws Error(kUnknownAdversary) for colluding users without a valid user
// set.
AdversaryView ExtractAdversaryView(const Transcript& transcript, AdversaryKind kind,
                                   const std::vector<std::size_t>& users = {});

// Lowercase hex, one fixed-width group per symbol.
std::string HexSymbols(const Field& field, const std::vector<Symbol>& symbols);

// Sorted-key JSON; identical inputs give byte-identical dumps.
nlohmann::json TranscriptToJson(const SchemeConfig& config, const Transcript& transcript);

}  // namespace rsplfr

#endif  // RSPLFR_NETSIM_H_
