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

#ifndef RSPLFR_SCHEME_H_
#define RSPLFR_SCHEME_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rsplfr/gf.h"
#include "rsplfr/mds.h"
#include "rsplfr/pda.h"
#include "rsplfr/rational.h"

namespace rsplfr {

// Which conditions a run guarantees.
//   kLSP  robust correctness, security, user- and server-side privacy
//   kLP   robust correctness and both privacies (no security keys)
//   kFP   as kLP, for file-retrieval (unit vector) demands only
//   kL    robust correctness only (no keys at all)
enum class Variant { kLSP, kLP, kFP, kL };

std::string_view VariantName(Variant v);
// Accepts "LSP", "LP", "FP", "L". Throws Error(kConfigInvalid).
Variant ParseVariant(std::string_view name);

constexpr bool UsesSecurityKeys(Variant v) { return v == Variant::kLSP; }
constexpr bool UsesPrivacyKeys(Variant v) { return v != Variant::kL; }
constexpr bool FileRetrievalOnly(Variant v) { return v == Variant::kFP; }

// A bound system configuration: N files of B symbols, K users (the PDA
// columns), an (H, L) MDS code and the variant. Users and servers are
// 0-based throughout the library.
class SchemeConfig {
 public:
  // B == 0 selects the minimal file length L*F. Throws Error(kConfigInvalid)
  // when N < 2 or B is not a multiple of L*F.
  SchemeConfig(std::size_t N, Pda pda, MdsCode code, Variant variant, std::size_t B = 0,
               std::uint64_t seed = 0);

  std::size_t N() const { return N_; }
  std::size_t K() const { return static_cast<std::size_t>(pda_.K()); }
  std::size_t L() const { return code_.L(); }
  std::size_t H() const { return code_.H(); }
  std::size_t F() const { return static_cast<std::size_t>(pda_.F()); }
  std::size_t S() const { return static_cast<std::size_t>(pda_.S()); }
  std::size_t B() const { return B_; }
  // Symbols per packet, B / (L F).
  std::size_t packet_size() const { return B_ / (L() * F()); }
  std::size_t subfile_size() const { return B_ / L(); }
  const Field& field() const { return code_.field(); }
  const Pda& pda() const { return pda_; }
  const MdsCode& code() const { return code_; }
  Variant variant() const { return variant_; }
  std::uint64_t seed() const { return seed_; }

  SchemeConfig WithSeed(std::uint64_t seed) const;
  SchemeConfig WithVariant(Variant variant) const;

  // True when delivery sends only the symbols J with J meeting the
  // independent query set (MAN-PDA, no security keys).
  bool prunes_signals() const { return variant_ != Variant::kLSP && pda_.is_man(); }

 private:
  std::size_t N_;
  Pda pda_;
  MdsCode code_;
  Variant variant_;
  std::size_t B_;
  std::uint64_t seed_;
};

// N files of B symbols. Subfile l of file n is symbols [l B/L, (l+1) B/L);
// packet i of that subfile is the i-th run of B/(L F) symbols inside it.
class Library {
 public:
  // Throws Error(kConfigInvalid) on ragged files or bad divisibility.
  Library(std::size_t L, std::size_t F, std::vector<std::vector<Symbol>> files);

  // N*B uniform symbols drawn file by file.
  static Library Random(const SchemeConfig& config, Rng& rng);

  std::size_t N() const { return files_.size(); }
  std::size_t B() const { return B_; }
  std::size_t packet_size() const { return B_ / (L_ * F_); }

  std::span<const Symbol> file(std::size_t n) const { return files_[n]; }
  std::span<const Symbol> packet(std::size_t n, std::size_t l, std::size_t i) const;

  // W_a = sum_n a_n W_n over the whole file length.
  std::vector<Symbol> Combination(const Field& field, std::span<const Symbol> a) const;
  // W_{a,l,i}.
  Block PacketCombination(const Field& field, std::span<const Symbol> a, std::size_t l,
                          std::size_t i) const;

  const std::vector<std::vector<Symbol>>& files() const { return files_; }

 private:
  std::size_t L_;
  std::size_t F_;
  std::size_t B_;
  std::vector<std::vector<Symbol>> files_;
};

// Every random draw of a run other than the library.
struct Randomness {
  // V[l][s]: S*L uniform blocks for kLSP; empty otherwise.
  std::vector<std::vector<Block>> security_keys;
  // p_k: uniform over F_q^N (kLSP, kLP), uniform over the hyperplane
  // sum_n x_n = -1 (kFP), all-zero (kL).
  std::vector<std::vector<Symbol>> privacy_keys;
};

// Draw order: V by (l, s) lexicographically, then p_1..p_K.
Randomness DrawRandomness(const SchemeConfig& config, Rng& rng);

struct SecurityKeys {
  // False for kL, where no keys exist; kLP / kFP carry all-zero blocks.
  bool present = false;
  std::vector<std::vector<Block>> uncoded;  // V[l][s]
  std::vector<std::vector<Block>> coded;    // Vbar[h][s], MDS codeword of V[.][s]
};

// Server h stores the h-th coded packet of every packet index of every file.
struct ServerStore {
  std::size_t server = 0;
  std::vector<std::vector<Block>> coded;  // [n][i] = Wbar_{n,h,i}
};

// One row (packet index i) of a user's cache.
struct CachedRow {
  bool star = false;
  // a_{i,k} == *: the uncoded packets W_{n,l,i}, indexed n*L + l.
  std::vector<Block> uncoded;
  // a_{i,k} == s: W_{p_k,l,i} + V_{l,s}, indexed by l. Empty for kL.
  std::vector<Block> masked;
};

struct UserState {
  std::size_t user = 0;
  std::vector<Symbol> privacy_key;  // p_k
  bool stores_privacy_key = false;
  std::vector<CachedRow> rows;  // one per PDA row

  std::size_t CacheSymbols() const;
  // Cached packet symbols only, excluding p_k.
  std::size_t PacketSymbols() const;
};

struct Placement {
  SecurityKeys keys;
  std::vector<ServerStore> servers;
  std::vector<UserState> users;
};

Placement Place(const SchemeConfig& config, const Library& library, const Randomness& randomness);

using Demand = std::vector<Symbol>;
using Query = std::vector<Symbol>;

// Throws Error(kDemandInvalid) on wrong length or, for kFP, a non-unit vector.
void ValidateDemand(const SchemeConfig& config, std::span<const Symbol> demand);

// q_k = d_k + p_k.
Query MakeQuery(const SchemeConfig& config, const UserState& user, std::span<const Symbol> demand);

// Leftmost maximal independent subset of the queries (0-based users).
std::vector<std::size_t> SelectIndependentSet(const Field& field, const std::vector<Query>& queries);

// 1-based symbols delivered for these queries, increasing: all of [S], or
// the J with J meeting the independent set when signals are pruned.
std::vector<int> DeliveredSymbols(const SchemeConfig& config, const std::vector<Query>& queries);

struct ServerSignal {
  std::size_t server = 0;
  std::vector<Query> queries;
  std::vector<int> block_ids;  // 1-based symbols s
  std::vector<Block> blocks;   // Ybar_{h,s} in block_ids order

  std::size_t payload_symbols() const;
  std::size_t overhead_symbols() const;
};

// Ybar_{h,s} = Vbar_{h,s} + sum_{a_{u,v}=s} Wbar_{q_v,h,u} for each delivered
// s, computed from the server's own store. Throws Error(kMissingQuery) unless
// exactly K queries of length N arrive.
ServerSignal ServerDelivery(const SchemeConfig& config, const ServerStore& store,
                            const std::vector<Query>& queries, const SecurityKeys& keys);

// Recovers W_{d_k} from the signals of at least L distinct servers.
//
// The first L signals (by server id) are MDS-decoded per delivered symbol;
// any further signals must agree with the re-encoded codeword. Pruned symbols
// are rebuilt as linear combinations of delivered ones, then each packet is
// read from the cache (star rows) or peeled off Y_{l,a_{i,k}} by removing the
// cached key-masked packet and the interference terms of the other users.
//
// Throws Error(kInsufficientServers) with fewer than L distinct servers and
// Error(kDecodeInconsistency) when the signals disagree with each other, with
// the user's state, or with the expected block set.
std::vector<Symbol> RobustDecode(const SchemeConfig& config, const UserState& user,
                                 std::span<const Symbol> demand,
                                 std::span<const ServerSignal> signals);

struct MeasuredTradeoff {
  std::size_t cache_symbols = 0;     // per user, including p_k
  std::size_t payload_symbols = 0;   // all servers, signal blocks only
  std::size_t overhead_symbols = 0;  // all servers, query echoes
  Rational M_measured;  // cache_symbols / B
  Rational M_payload;   // cached packet symbols / B
  Rational R_measured;  // (payload + overhead) / B
  Rational R_payload;   // payload / B
};

MeasuredTradeoff Measure(const SchemeConfig& config, const Placement& placement,
                         std::span<const ServerSignal> signals);

// Full protocol: placement, queries and the H server signals.
struct ProtocolRun {
  Library library;
  Randomness randomness;
  Placement placement;
  std::vector<Demand> demands;
  std::vector<Query> queries;
  std::vector<ServerSignal> signals;
};

ProtocolRun RunProtocol(const SchemeConfig& config, Library library, Randomness randomness,
                        std::vector<Demand> demands);

// Seeded variant: randomness first, then a synthetic library, from one
// generator seeded with config.seed().
ProtocolRun RunProtocol(const SchemeConfig& config, std::vector<Demand> demands);

// Uniform demands for the variant (unit vectors for kFP).
std::vector<Demand> RandomDemands(const SchemeConfig& config, Rng& rng);

}  // namespace rsplfr

#endif  // RSPLFR_SCHEME_H_
