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

#include "rsplfr/netsim.h"

#include <algorithm>
#include <future>

#include "rsplfr/error.h"

namespace rsplfr {
namespace {

std::string ServerName(std::size_t h) { return "server:" + std::to_string(h + 1); }
std::string UserName(std::size_t k) { return "user:" + std::to_string(k + 1); }

void Append(std::vector<Symbol>& out, const std::vector<Symbol>& v) {
  out.insert(out.end(), v.begin(), v.end());
}

void AppendSignal(std::vector<Symbol>& out, const ServerSignal& sig) {
  for (const auto& q : sig.queries) Append(out, q);
  for (int s : sig.block_ids) out.push_back(static_cast<Symbol>(s));
  for (const auto& b : sig.blocks) Append(out, b);
}

void AppendCache(std::vector<Symbol>& out, const UserState& user) {
  if (user.stores_privacy_key) Append(out, user.privacy_key);
  for (const auto& row : user.rows) {
    for (const auto& b : row.uncoded) Append(out, b);
    for (const auto& b : row.masked) Append(out, b);
  }
}

std::vector<std::vector<std::size_t>> ResolveAvailability(
    const SchemeConfig& config, const std::map<std::size_t, std::vector<std::size_t>>& given) {
  std::vector<std::vector<std::size_t>> out(config.K());
  for (std::size_t k = 0; k < config.K(); ++k) {
    auto it = given.find(k);
    if (it == given.end()) {
      for (std::size_t h = 0; h < config.H(); ++h) out[k].push_back(h);
      continue;
    }
    out[k] = it->second;
    std::sort(out[k].begin(), out[k].end());
    if (std::adjacent_find(out[k].begin(), out[k].end()) != out[k].end() ||
        (!out[k].empty() && out[k].back() >= config.H())) {
      throw Error(ErrorCode::kConfigInvalid,
                  "availability of user " + std::to_string(k + 1) +
                      " must list distinct servers in [1, H]");
    }
  }
  for (const auto& [k, servers] : given) {
    if (k >= config.K()) {
      throw Error(ErrorCode::kConfigInvalid, "availability names unknown user " + std::to_string(k + 1));
    }
  }
  return out;
}

nlohmann::json RationalJson(const Rational& r) { return ToString(r); }

}  // namespace

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kPlacement: return "placement";
    case Phase::kQuery: return "query";
    case Phase::kDelivery: return "delivery";
  }
  return "?";
}

Transcript SimulateWorld(const SchemeConfig& config, Library library, Randomness randomness,
                         std::vector<Demand> demands,
                         const std::map<std::size_t, std::vector<std::size_t>>& availability,
                         bool decode) {
  if (demands.size() != config.K()) {
    throw Error(ErrorCode::kDemandInvalid, "one demand per user expected");
  }
  std::vector<std::vector<std::size_t>> resolved = ResolveAvailability(config, availability);

  Placement placement = Place(config, library, randomness);
  std::vector<Query> queries;
  for (std::size_t k = 0; k < config.K(); ++k) {
    queries.push_back(MakeQuery(config, placement.users[k], demands[k]));
  }

  // Each server sees only its own store, the shared keys and the queries.
  std::vector<std::future<ServerSignal>> pending;
  for (const auto& store : placement.servers) {
    pending.push_back(std::async(std::launch::async, [&config, &store, &queries, &placement] {
      return ServerDelivery(config, store, queries, placement.keys);
    }));
  }
  std::vector<ServerSignal> signals;
  for (auto& f : pending) signals.push_back(f.get());

  MeasuredTradeoff measured = Measure(config, placement, signals);
  Transcript tr{ProtocolRun{std::move(library), std::move(randomness), std::move(placement),
                            std::move(demands), std::move(queries), std::move(signals)},
                std::move(resolved), {}, {}, {}, std::move(measured)};
  const ProtocolRun& run = tr.run;

  const std::size_t P = config.packet_size();
  std::size_t step = 0;
  for (std::size_t h = 0; h < config.H(); ++h) {
    tr.messages.push_back({Phase::kPlacement, step++, "placement", ServerName(h),
                           config.N() * config.F() * P});
  }
  for (std::size_t k = 0; k < config.K(); ++k) {
    tr.messages.push_back(
        {Phase::kPlacement, step++, "placement", UserName(k), run.placement.users[k].CacheSymbols()});
  }
  step = 0;
  for (std::size_t h = 0; h < config.H(); ++h) {
    for (std::size_t k = 0; k < config.K(); ++k) {
      tr.messages.push_back({Phase::kQuery, step++, UserName(k), ServerName(h), run.queries[k].size()});
      tr.uplink_symbols += run.queries[k].size();
    }
  }
  step = 0;
  for (const auto& sig : run.signals) {
    const std::size_t n = sig.payload_symbols() + sig.overhead_symbols();
    tr.messages.push_back({Phase::kDelivery, step++, ServerName(sig.server), "broadcast", n});
    tr.downlink_symbols += n;
  }
  for (const auto& m : tr.messages) tr.link_totals[{m.sender, m.receiver}] += m.symbols;


  if (decode) {
    for (std::size_t k = 0; k < config.K(); ++k) {
      DecodeOutcome o;
      o.user = k;
      o.servers = tr.availability[k];
      std::vector<ServerSignal> heard;
      for (std::size_t h : o.servers) heard.push_back(tr.run.signals[h]);
      try {
        o.output = RobustDecode(config, tr.run.placement.users[k], tr.run.demands[k], heard);
        o.decoded = true;
        o.correct = o.output == tr.run.library.Combination(config.field(), tr.run.demands[k]);
        if (!o.correct) o.error = "decoded output differs from the demanded combination";
      } catch (const Error& e) {
        o.error = e.what();
      }
      tr.outcomes.push_back(std::move(o));
    }
  }
  return tr;
}

Transcript Simulate(const Scenario& scenario) {
  Rng rng(scenario.config.seed());
  Randomness randomness = DrawRandomness(scenario.config, rng);
  Library library = Library::Random(scenario.config, rng);
  return SimulateWorld(scenario.config, std::move(library), std::move(randomness),
                       scenario.demands, scenario.availability, true);
}

AdversaryKind ParseAdversaryKind(std::string_view name) {
  if (name == "wiretapper") return AdversaryKind::kWiretapper;
  if (name == "colluding-servers") return AdversaryKind::kColludingServers;
  if (name == "colluding-users") return AdversaryKind::kColludingUsers;
  throw Error(ErrorCode::kUnknownAdversary,
              "'" + std::string(name) +
                  "' (expected wiretapper, colluding-servers or colluding-users)");
}

std::string_view AdversaryKindName(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kWiretapper: return "wiretapper";
    case AdversaryKind::kColludingServers: return "colluding-servers";
    case AdversaryKind::kColludingUsers: return "colluding-users";
  }
  return "?";
}

AdversaryView ExtractAdversaryView(const Transcript& transcript, AdversaryKind kind,
                                   const std::vector<std::size_t>& users) {
  const ProtocolRun& run = transcript.run;
  AdversaryView view;
  view.kind = kind;
  switch (kind) {
    case AdversaryKind::kWiretapper:
      for (const auto& sig : run.signals) AppendSignal(view.symbols, sig);
      break;
    case AdversaryKind::kColludingServers:
      for (const auto& q : run.queries) Append(view.symbols, q);
      for (const auto& store : run.placement.servers) {
        for (const auto& per_n : store.coded) {
          for (const auto& b : per_n) Append(view.symbols, b);
        }
      }
      for (const auto& per_l : run.placement.keys.uncoded) {
        for (const auto& b : per_l) Append(view.symbols, b);
      }
      break;
    case AdversaryKind::kColludingUsers: {
      view.users = users;
      std::sort(view.users.begin(), view.users.end());
      const bool valid = !view.users.empty() &&
                         std::adjacent_find(view.users.begin(), view.users.end()) ==
                             view.users.end() &&
                         view.users.back() < run.placement.users.size();
      if (!valid) {
        throw Error(ErrorCode::kUnknownAdversary, "colluding users need a non-empty set of known users");
      }
      for (std::size_t k : view.users) {
        AppendCache(view.symbols, run.placement.users[k]);
        Append(view.symbols, run.demands[k]);
      }
      for (const auto& sig : run.signals) AppendSignal(view.symbols, sig);
      break;
    }
  }
  return view;
}

std::string HexSymbols(const Field& field, const std::vector<Symbol>& symbols) {
  int width = 1;
  for (std::uint32_t m = field.q() - 1; m >= 16; m >>= 4) ++width;
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(symbols.size() * width);
  for (Symbol s : symbols) {
    for (int d = width - 1; d >= 0; --d) out.push_back(kDigits[(s >> (4 * d)) & 0xF]);
  }
  return out;
}

nlohmann::json TranscriptToJson(const SchemeConfig& config, const Transcript& tr) {
  using nlohmann::json;
  const Field& f = config.field();
  const ProtocolRun& run = tr.run;
  json j;
  j["config"] = {{"N", config.N()},       {"K", config.K()},
                 {"L", config.L()},       {"H", config.H()},
                 {"q", f.q()},            {"F", config.F()},
                 {"S", config.S()},       {"B", config.B()},
                 {"variant", VariantName(config.variant())},
                 {"seed", config.seed()}, {"G", config.code().generator().ToRows()}};
  j["demands"] = run.demands;
  j["queries"] = run.queries;

  json keys = json::array();
  for (const auto& per_l : run.randomness.security_keys) {
    json row = json::array();
    for (const auto& b : per_l) row.push_back(HexSymbols(f, b));
    keys.push_back(row);
  }
  j["randomness"] = {{"security_keys", keys}, {"privacy_keys", run.randomness.privacy_keys}};

  json servers = json::array();
  for (const auto& sig : run.signals) {
    json blocks = json::array();
    for (const auto& b : sig.blocks) blocks.push_back(HexSymbols(f, b));
    servers.push_back({{"server", sig.server + 1},
                       {"block_ids", sig.block_ids},
                       {"blocks", blocks},
                       {"payload_symbols", sig.payload_symbols()},
                       {"overhead_symbols", sig.overhead_symbols()}});
  }
  j["servers"] = servers;

  json users = json::array();
  for (std::size_t k = 0; k < run.placement.users.size(); ++k) {
    json u = {{"user", k + 1}, {"cache_symbols", run.placement.users[k].CacheSymbols()}};
    std::vector<std::size_t> heard;
    for (std::size_t h : tr.availability[k]) heard.push_back(h + 1);
    u["available"] = heard;
    if (k < tr.outcomes.size()) {
      const DecodeOutcome& o = tr.outcomes[k];
      u["decoded"] = o.decoded;
      u["correct"] = o.correct;
      u["error"] = o.error;
      u["output"] = HexSymbols(f, o.output);
    }
    users.push_back(u);
  }
  j["users"] = users;

  json messages = json::array();
  for (const auto& m : tr.messages) {
    messages.push_back({{"phase", PhaseName(m.phase)},
                        {"step", m.step},
                        {"sender", m.sender},
                        {"receiver", m.receiver},
                        {"symbols", m.symbols}});
  }
  j["messages"] = messages;
  json links = json::array();
  for (const auto& [link, n] : tr.link_totals) {
    links.push_back({{"sender", link.first}, {"receiver", link.second}, {"symbols", n}});
  }
  j["link_totals"] = links;

  const MeasuredTradeoff& m = tr.measured;
  j["counts"] = {{"uplink_symbols", tr.uplink_symbols},
                 {"downlink_symbols", tr.downlink_symbols},
                 {"payload_symbols", m.payload_symbols},
                 {"overhead_symbols", m.overhead_symbols},
                 {"cache_symbols", m.cache_symbols},
                 {"M_measured", RationalJson(m.M_measured)},
                 {"M_payload", RationalJson(m.M_payload)},
                 {"R_measured", RationalJson(m.R_measured)},
                 {"R_payload", RationalJson(m.R_payload)}};
  return j;
}

}  // namespace rsplfr
