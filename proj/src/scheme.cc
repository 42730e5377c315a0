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

#include "rsplfr/scheme.h"

#include <algorithm>
#include <map>
#include <string>

#include "rsplfr/error.h"
#include "rsplfr/linalg.h"

namespace rsplfr {
namespace {

void AxpyInto(const Field& f, Block& acc, Symbol c, std::span<const Symbol> x) {
  if (c == 0) return;
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f.AddScaled(acc[j], c, x[j]);
}

void AddInto(const Field& f, Block& acc, std::span<const Symbol> x) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f.Add(acc[j], x[j]);
}

void SubInto(const Field& f, Block& acc, std::span<const Symbol> x) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f.Sub(acc[j], x[j]);
}

[[noreturn]] void Inconsistent(const std::string& what) {
  throw Error(ErrorCode::kDecodeInconsistency, what);
}

// Sum_n a_n * packets[n*L + l] for a cached star row.
Block CachedCombination(const Field& f, const CachedRow& row, std::span<const Symbol> a,
                        std::size_t N, std::size_t L, std::size_t l, std::size_t len) {
  Block out(len, 0);
  for (std::size_t n = 0; n < N; ++n) AxpyInto(f, out, a[n], row.uncoded[n * L + l]);
  return out;
}

// Weight of occurrence p in symbol s. Pruned deliveries alternate signs by
// the column's position within the symbol's user set; otherwise all ones.
Symbol OccurrenceWeight(const SchemeConfig& config, int s, const CellPosition& p) {
  if (!config.prunes_signals()) return 1;
  const auto& J = config.pda().symbol_subsets()[s - 1];
  const auto pos = std::find(J.begin(), J.end(), p.col) - J.begin();
  return pos % 2 == 0 ? Symbol{1} : config.field().Neg(1);
}

// Coefficients of Y_{l,s} (identical for every l) over the unknown packets
// W_{n,l,u}, flattened as n*F + u. Security keys are zero whenever this is
// used.
std::vector<Symbol> SignalCoefficients(const SchemeConfig& config,
                                       const std::vector<Query>& queries, int s) {
  const Field& f = config.field();
  const std::size_t F = config.F();
  std::vector<Symbol> coef(config.N() * F, 0);
  for (const CellPosition& p : config.pda().occurrences(s)) {
    const Query& q = queries[p.col];
    const Symbol w = OccurrenceWeight(config, s, p);
    for (std::size_t n = 0; n < config.N(); ++n) {
      coef[n * F + p.row] = f.AddScaled(coef[n * F + p.row], w, q[n]);
    }
  }
  return coef;
}

}  // namespace

std::string_view VariantName(Variant v) {
  switch (v) {
    case Variant::kLSP: return "LSP";
    case Variant::kLP: return "LP";
    case Variant::kFP: return "FP";
    case Variant::kL: return "L";
  }
  return "?";
}

Variant ParseVariant(std::string_view name) {
  if (name == "LSP") return Variant::kLSP;
  if (name == "LP") return Variant::kLP;
  if (name == "FP") return Variant::kFP;
  if (name == "L") return Variant::kL;
  throw Error(ErrorCode::kConfigInvalid,
              "unknown variant '" + std::string(name) + "' (expected LSP|LP|FP|L)");
}

SchemeConfig::SchemeConfig(std::size_t N, Pda pda, MdsCode code, Variant variant,
                           std::size_t B, std::uint64_t seed)
    : N_(N), pda_(std::move(pda)), code_(std::move(code)), variant_(variant), B_(B),
      seed_(seed) {
  if (N_ < 2) {
    throw Error(ErrorCode::kConfigInvalid, "N must be at least 2 (got " + std::to_string(N_) + ")");
  }
  const std::size_t unit = L() * F();
  if (B_ == 0) B_ = unit;
  if (B_ % unit != 0) {
    throw Error(ErrorCode::kConfigInvalid, "B=" + std::to_string(B_) +
                                               " is not a multiple of L*F=" +
                                               std::to_string(unit));
  }
}

SchemeConfig SchemeConfig::WithSeed(std::uint64_t seed) const {
  SchemeConfig c = *this;
  c.seed_ = seed;
  return c;
}

SchemeConfig SchemeConfig::WithVariant(Variant variant) const {
  SchemeConfig c = *this;
  c.variant_ = variant;
  return c;
}

Library::Library(std::size_t L, std::size_t F, std::vector<std::vector<Symbol>> files)
    : L_(L), F_(F), B_(files.empty() ? 0 : files.front().size()), files_(std::move(files)) {
  if (files_.empty() || B_ == 0 || L_ == 0 || F_ == 0 || B_ % (L_ * F_) != 0) {
    throw Error(ErrorCode::kConfigInvalid, "library files must be non-empty multiples of L*F");
  }
  for (const auto& f : files_) {
    if (f.size() != B_) throw Error(ErrorCode::kConfigInvalid, "library files differ in length");
  }
}

Library Library::Random(const SchemeConfig& config, Rng& rng) {
  std::vector<std::vector<Symbol>> files(config.N(), std::vector<Symbol>(config.B()));
  for (auto& file : files) {
    for (auto& x : file) x = UniformSymbol(rng, config.field().q());
  }
  return Library(config.L(), config.F(), std::move(files));
}

std::span<const Symbol> Library::packet(std::size_t n, std::size_t l, std::size_t i) const {
  const std::size_t p = packet_size();
  return std::span<const Symbol>(files_[n]).subspan(l * (B_ / L_) + i * p, p);
}

std::vector<Symbol> Library::Combination(const Field& field, std::span<const Symbol> a) const {
  Block out(B_, 0);
  for (std::size_t n = 0; n < files_.size(); ++n) AxpyInto(field, out, a[n], files_[n]);
  return out;
}

Block Library::PacketCombination(const Field& field, std::span<const Symbol> a, std::size_t l,
                                 std::size_t i) const {
  Block out(packet_size(), 0);
  for (std::size_t n = 0; n < files_.size(); ++n) AxpyInto(field, out, a[n], packet(n, l, i));
  return out;
}

Randomness DrawRandomness(const SchemeConfig& config, Rng& rng) {
  const Field& f = config.field();
  const std::uint32_t q = f.q();
  Randomness r;
  if (UsesSecurityKeys(config.variant())) {
    r.security_keys.assign(config.L(), std::vector<Block>(config.S(), Block(config.packet_size())));
    for (auto& per_l : r.security_keys) {
      for (auto& block : per_l) {
        for (auto& x : block) x = UniformSymbol(rng, q);
      }
    }
  }
  r.privacy_keys.assign(config.K(), std::vector<Symbol>(config.N(), 0));
  if (!UsesPrivacyKeys(config.variant())) return r;
  for (auto& p : r.privacy_keys) {
    if (FileRetrievalOnly(config.variant())) {
      // Free coordinates 1..N-1, the last one closes the sum to -1.
      Symbol sum = 0;
      for (std::size_t n = 0; n + 1 < p.size(); ++n) {
        p[n] = UniformSymbol(rng, q);
        sum = f.Add(sum, p[n]);
      }
      p.back() = f.Sub(f.Neg(1), sum);
    } else {
      for (auto& x : p) x = UniformSymbol(rng, q);
    }
  }
  return r;
}

std::size_t UserState::PacketSymbols() const {
  std::size_t total = 0;
  for (const auto& row : rows) {
    for (const auto& b : row.uncoded) total += b.size();
    for (const auto& b : row.masked) total += b.size();
  }
  return total;
}

std::size_t UserState::CacheSymbols() const {
  return PacketSymbols() + (stores_privacy_key ? privacy_key.size() : 0);
}

Placement Place(const SchemeConfig& config, const Library& library, const Randomness& randomness) {
  const Field& f = config.field();
  const std::size_t N = config.N(), K = config.K(), L = config.L(), H = config.H();
  const std::size_t F = config.F(), S = config.S(), P = config.packet_size();
  if (library.N() != N || library.B() != config.B()) {
    throw Error(ErrorCode::kConfigInvalid, "library shape does not match the configuration");
  }
  if (randomness.privacy_keys.size() != K) {
    throw Error(ErrorCode::kConfigInvalid, "one privacy key per user expected");
  }
  for (const auto& p : randomness.privacy_keys) {
    if (p.size() != N) throw Error(ErrorCode::kConfigInvalid, "privacy keys must have length N");
  }

  Placement placement;
  SecurityKeys& keys = placement.keys;
  keys.present = config.variant() != Variant::kL;
  if (keys.present) {
    if (UsesSecurityKeys(config.variant())) {
      if (randomness.security_keys.size() != L) {
        throw Error(ErrorCode::kConfigInvalid, "security keys must have L*S blocks");
      }
      keys.uncoded = randomness.security_keys;
      for (const auto& per_l : keys.uncoded) {
        if (per_l.size() != S) throw Error(ErrorCode::kConfigInvalid, "security keys must have L*S blocks");
        for (const auto& b : per_l) {
          if (b.size() != P) throw Error(ErrorCode::kConfigInvalid, "security key blocks must be B/(LF) long");
        }
      }
    } else {
      keys.uncoded.assign(L, std::vector<Block>(S, Block(P, 0)));
    }
    keys.coded.assign(H, std::vector<Block>(S));
    for (std::size_t s = 0; s < S; ++s) {
      std::vector<Block> info(L);
      for (std::size_t l = 0; l < L; ++l) info[l] = keys.uncoded[l][s];
      std::vector<Block> coded = config.code().EncodeBlocks(info);
      for (std::size_t h = 0; h < H; ++h) keys.coded[h][s] = std::move(coded[h]);
    }
  }

  placement.servers.resize(H);
  for (std::size_t h = 0; h < H; ++h) {
    ServerStore& store = placement.servers[h];
    store.server = h;
    store.coded.assign(N, std::vector<Block>(F, Block(P, 0)));
    for (std::size_t n = 0; n < N; ++n) {
      for (std::size_t i = 0; i < F; ++i) {
        for (std::size_t l = 0; l < L; ++l) {
          AxpyInto(f, store.coded[n][i], config.code().g(l, h), library.packet(n, l, i));
        }
      }
    }
  }

  const bool masked = UsesPrivacyKeys(config.variant());
  placement.users.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    UserState& user = placement.users[k];
    user.user = k;
    user.privacy_key = randomness.privacy_keys[k];
    user.stores_privacy_key = masked;
    user.rows.resize(F);
    for (std::size_t i = 0; i < F; ++i) {
      CachedRow& row = user.rows[i];
      const Cell cell = config.pda().at(static_cast<int>(i), static_cast<int>(k));
      row.star = cell.is_star();
      if (row.star) {
        row.uncoded.reserve(N * L);
        for (std::size_t n = 0; n < N; ++n) {
          for (std::size_t l = 0; l < L; ++l) {
            auto pk = library.packet(n, l, i);
            row.uncoded.emplace_back(pk.begin(), pk.end());
          }
        }
      } else if (masked) {
        const std::size_t s = static_cast<std::size_t>(cell.symbol()) - 1;
        for (std::size_t l = 0; l < L; ++l) {
          Block b = library.PacketCombination(f, user.privacy_key, l, i);
          AddInto(f, b, keys.uncoded[l][s]);
          row.masked.push_back(std::move(b));
        }
      }
    }
  }
  return placement;
}

void ValidateDemand(const SchemeConfig& config, std::span<const Symbol> demand) {
  if (demand.size() != config.N()) {
    throw Error(ErrorCode::kDemandInvalid, "demand has length " + std::to_string(demand.size()) +
                                               ", expected N=" + std::to_string(config.N()));
  }
  for (Symbol x : demand) {
    if (!config.field().Contains(x)) {
      throw Error(ErrorCode::kDemandInvalid,
                  std::to_string(x) + " is not an element of " + config.field().Name());
    }
  }
  if (FileRetrievalOnly(config.variant())) {
    const auto ones = std::count(demand.begin(), demand.end(), Symbol{1});
    const auto zeros = std::count(demand.begin(), demand.end(), Symbol{0});
    if (ones != 1 || zeros + 1 != static_cast<std::ptrdiff_t>(demand.size())) {
      throw Error(ErrorCode::kDemandInvalid, "FP demands must be unit vectors e_n");
    }
  }
}

Query MakeQuery(const SchemeConfig& config, const UserState& user, std::span<const Symbol> demand) {
  ValidateDemand(config, demand);
  const Field& f = config.field();
  Query q(config.N());
  for (std::size_t n = 0; n < q.size(); ++n) q[n] = f.Add(demand[n], user.privacy_key[n]);
  return q;
}

std::vector<std::size_t> SelectIndependentSet(const Field& field, const std::vector<Query>& queries) {
  std::vector<std::size_t> kept;
  if (queries.empty()) return kept;
  RowBasis basis(field, queries.front().size());
  for (std::size_t k = 0; k < queries.size(); ++k) {
    if (basis.TryAdd(queries[k])) kept.push_back(k);
  }
  return kept;
}

std::vector<int> DeliveredSymbols(const SchemeConfig& config, const std::vector<Query>& queries) {
  std::vector<int> ids;
  const int S = config.pda().S();
  if (!config.prunes_signals()) {
    for (int s = 1; s <= S; ++s) ids.push_back(s);
    return ids;
  }
  const std::vector<std::size_t> independent = SelectIndependentSet(config.field(), queries);
  std::vector<bool> in_set(config.K(), false);
  for (std::size_t k : independent) in_set[k] = true;
  for (int s = 1; s <= S; ++s) {
    const auto& J = config.pda().symbol_subsets()[s - 1];
    if (std::any_of(J.begin(), J.end(), [&](int j) { return in_set[j]; })) ids.push_back(s);
  }
  return ids;
}

std::size_t ServerSignal::payload_symbols() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  return total;
}

std::size_t ServerSignal::overhead_symbols() const {
  std::size_t total = 0;
  for (const auto& q : queries) total += q.size();
  return total;
}

ServerSignal ServerDelivery(const SchemeConfig& config, const ServerStore& store,
                            const std::vector<Query>& queries, const SecurityKeys& keys) {
  if (queries.size() != config.K()) {
    throw Error(ErrorCode::kMissingQuery, "server " + std::to_string(store.server + 1) +
                                              " received " + std::to_string(queries.size()) +
                                              " of K=" + std::to_string(config.K()) + " queries");
  }
  for (const auto& q : queries) {
    if (q.size() != config.N()) {
      throw Error(ErrorCode::kMissingQuery, "query of length " + std::to_string(q.size()) +
                                                ", expected N=" + std::to_string(config.N()));
    }
  }
  const Field& f = config.field();
  ServerSignal signal;
  signal.server = store.server;
  signal.queries = queries;
  signal.block_ids = DeliveredSymbols(config, queries);
  for (int s : signal.block_ids) {
    Block y = keys.present ? keys.coded[store.server][s - 1] : Block(config.packet_size(), 0);
    for (const CellPosition& p : config.pda().occurrences(s)) {
      const Query& q = queries[p.col];
      const Symbol w = OccurrenceWeight(config, s, p);
      for (std::size_t n = 0; n < config.N(); ++n) AxpyInto(f, y, f.Mul(w, q[n]), store.coded[n][p.row]);
    }
    signal.blocks.push_back(std::move(y));
  }
  return signal;
}

std::vector<Symbol> RobustDecode(const SchemeConfig& config, const UserState& user,
                                 std::span<const Symbol> demand,
                                 std::span<const ServerSignal> signals) {
  ValidateDemand(config, demand);
  const Field& f = config.field();
  const std::size_t N = config.N(), K = config.K(), L = config.L(), F = config.F();
  const std::size_t P = config.packet_size();
  const std::size_t k = user.user;
  const Pda& pda = config.pda();

  // Distinct servers, ordered by id.
  std::vector<const ServerSignal*> received;
  for (const auto& sig : signals) received.push_back(&sig);
  std::sort(received.begin(), received.end(),
            [](const ServerSignal* a, const ServerSignal* b) { return a->server < b->server; });
  received.erase(std::unique(received.begin(), received.end(),
                             [](const ServerSignal* a, const ServerSignal* b) {
                               return a->server == b->server;
                             }),
                 received.end());
  if (received.size() < L) {
    throw Error(ErrorCode::kInsufficientServers,
                "user " + std::to_string(k + 1) + " received " + std::to_string(received.size()) +
                    " signals, needs L=" + std::to_string(L));
  }
  for (const ServerSignal* sig : received) {
    if (sig->server >= config.H()) Inconsistent("signal from unknown server");
  }

  const std::vector<Query>& queries = received.front()->queries;
  if (queries.size() != K) Inconsistent("signal does not echo all K queries");
  for (const ServerSignal* sig : received) {
    if (sig->queries != queries) Inconsistent("servers echo different queries");
  }
  const Query own = MakeQuery(config, user, demand);
  if (queries[k] != own) Inconsistent("echoed query of this user differs from d_k + p_k");

  const std::vector<int> expected = DeliveredSymbols(config, queries);
  for (const ServerSignal* sig : received) {
    if (sig->block_ids != expected || sig->blocks.size() != expected.size()) {
      Inconsistent("server " + std::to_string(sig->server + 1) + " sent an unexpected block set");
    }
    for (const auto& b : sig->blocks) {
      if (b.size() != P) Inconsistent("signal block of wrong length");
    }
  }

  // Y[s-1][l]: MDS-decoded information blocks of each delivered symbol.
  std::vector<std::vector<Block>> Y(config.S());
  std::vector<std::size_t> columns(L);
  for (std::size_t j = 0; j < L; ++j) columns[j] = received[j]->server;
  const Matrix decoder = config.code().DecodingMatrix(columns);
  for (std::size_t b = 0; b < expected.size(); ++b) {
    std::vector<Block> info(L, Block(P, 0));
    for (std::size_t l = 0; l < L; ++l) {
      for (std::size_t j = 0; j < L; ++j) AxpyInto(f, info[l], decoder.at(j, l), received[j]->blocks[b]);
    }
    for (std::size_t extra = L; extra < received.size(); ++extra) {
      const std::size_t h = received[extra]->server;
      Block coded(P, 0);
      for (std::size_t l = 0; l < L; ++l) AxpyInto(f, coded, config.code().g(l, h), info[l]);
      if (coded != received[extra]->blocks[b]) {
        Inconsistent("server " + std::to_string(h + 1) + " disagrees with the MDS codeword of symbol " +
                     std::to_string(expected[b]));
      }
    }
    Y[expected[b] - 1] = std::move(info);
  }

  // Symbols this user needs that were pruned from the delivery.
  std::vector<int> missing;
  for (std::size_t i = 0; i < F; ++i) {
    const Cell c = pda.at(static_cast<int>(i), static_cast<int>(k));
    if (!c.is_star() && Y[c.symbol() - 1].empty()) missing.push_back(c.symbol());
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  if (!missing.empty()) {
    Matrix delivered(f, expected.size(), N * F);
    for (std::size_t b = 0; b < expected.size(); ++b) {
      const auto coef = SignalCoefficients(config, queries, expected[b]);
      for (std::size_t x = 0; x < coef.size(); ++x) delivered.at(b, x) = coef[x];
    }
    for (int s : missing) {
      const auto target = SignalCoefficients(config, queries, s);
      const auto combo = SolveRowCombination(delivered, target);
      if (!combo) Inconsistent("pruned symbol " + std::to_string(s) + " is not spanned by the delivery");
      std::vector<Block> info(L, Block(P, 0));
      for (std::size_t b = 0; b < expected.size(); ++b) {
        for (std::size_t l = 0; l < L; ++l) AxpyInto(f, info[l], (*combo)[b], Y[expected[b] - 1][l]);
      }
      Y[s - 1] = std::move(info);
    }
  }

  std::vector<Symbol> out(config.B(), 0);
  const std::size_t subfile = config.subfile_size();
  for (std::size_t i = 0; i < F; ++i) {
    const CachedRow& row = user.rows[i];
    for (std::size_t l = 0; l < L; ++l) {
      Block packet;
      if (row.star) {
        packet = CachedCombination(f, row, demand, N, L, l, P);
      } else {
        const int s = pda.at(static_cast<int>(i), static_cast<int>(k)).symbol();
        packet = Y[s - 1][l];
        Symbol own = 1;
        for (const CellPosition& p : pda.occurrences(s)) {
          if (p.row == static_cast<int>(i) && p.col == static_cast<int>(k)) {
            own = OccurrenceWeight(config, s, p);
            continue;
          }
          const CachedRow& other = user.rows[p.row];
          if (!other.star) Inconsistent("interference packet is not cached");
          AxpyInto(f, packet, f.Neg(OccurrenceWeight(config, s, p)),
                   CachedCombination(f, other, queries[p.col], N, L, l, P));
        }
        if (own != 1) {
          const Symbol inv = f.Inv(own);
          for (auto& x : packet) x = f.Mul(inv, x);
        }
        if (!row.masked.empty()) SubInto(f, packet, row.masked[l]);
      }
      std::copy(packet.begin(), packet.end(), out.begin() + l * subfile + i * P);
    }
  }
  return out;
}

MeasuredTradeoff Measure(const SchemeConfig& config, const Placement& placement,
                         std::span<const ServerSignal> signals) {
  MeasuredTradeoff m;
  std::size_t packet_symbols = 0;
  for (const auto& u : placement.users) {
    m.cache_symbols = std::max(m.cache_symbols, u.CacheSymbols());
    packet_symbols = std::max(packet_symbols, u.PacketSymbols());
  }
  for (const auto& sig : signals) {
    m.payload_symbols += sig.payload_symbols();
    m.overhead_symbols += sig.overhead_symbols();
  }
  const auto B = static_cast<std::int64_t>(config.B());
  m.M_measured = MakeRational(static_cast<std::int64_t>(m.cache_symbols), B);
  m.M_payload = MakeRational(static_cast<std::int64_t>(packet_symbols), B);
  m.R_measured = MakeRational(static_cast<std::int64_t>(m.payload_symbols + m.overhead_symbols), B);
  m.R_payload = MakeRational(static_cast<std::int64_t>(m.payload_symbols), B);
  return m;
}

ProtocolRun RunProtocol(const SchemeConfig& config, Library library, Randomness randomness,
                        std::vector<Demand> demands) {
  if (demands.size() != config.K()) {
    throw Error(ErrorCode::kDemandInvalid, "one demand per user expected");
  }
  Placement placement = Place(config, library, randomness);
  std::vector<Query> queries;
  queries.reserve(config.K());
  for (std::size_t k = 0; k < config.K(); ++k) {
    queries.push_back(MakeQuery(config, placement.users[k], demands[k]));
  }
  std::vector<ServerSignal> signals;
  signals.reserve(config.H());
  for (const auto& store : placement.servers) {
    signals.push_back(ServerDelivery(config, store, queries, placement.keys));
  }
  return ProtocolRun{std::move(library), std::move(randomness), std::move(placement),
                     std::move(demands), std::move(queries), std::move(signals)};
}

ProtocolRun RunProtocol(const SchemeConfig& config, std::vector<Demand> demands) {
  Rng rng(config.seed());
  Randomness randomness = DrawRandomness(config, rng);
  Library library = Library::Random(config, rng);
  return RunProtocol(config, std::move(library), std::move(randomness), std::move(demands));
}

std::vector<Demand> RandomDemands(const SchemeConfig& config, Rng& rng) {
  std::vector<Demand> demands(config.K(), Demand(config.N(), 0));
  for (auto& d : demands) {
    if (FileRetrievalOnly(config.variant())) {
      d[UniformSymbol(rng, static_cast<std::uint32_t>(config.N()))] = 1;
    } else {
      for (auto& x : d) x = UniformSymbol(rng, config.field().q());
    }
  }
  return demands;
}

}  // namespace rsplfr
