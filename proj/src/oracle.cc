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

#include "rsplfr/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "rsplfr/error.h"
#include "rsplfr/netsim.h"
#include "rsplfr/pda.h"

namespace rsplfr {
namespace {

using Key = std::vector<Symbol>;

struct Triple {
  Key c;
  Key a;
  Key b;
};

// Counts for one conditioning value.
struct Bucket {
  std::uint64_t n = 0;
  std::map<Key, std::uint64_t> a;
  std::map<Key, std::uint64_t> b;
  std::map<std::pair<Key, Key>, std::uint64_t> ab;

  void Merge(const Bucket& o) {
    n += o.n;
    for (const auto& [k, v] : o.a) a[k] += v;
    for (const auto& [k, v] : o.b) b[k] += v;
    for (const auto& [k, v] : o.ab) ab[k] += v;
  }
};

using Counts = std::map<Key, Bucket>;

Rational MaxDeviation(const Counts& counts) {
  Rational best = 0;
  for (const auto& [c, bucket] : counts) {
    const BigInt nc = bucket.n;
    BigInt worst = 0;
    for (const auto& [a, na] : bucket.a) {
      for (const auto& [b, nb] : bucket.b) {
        auto it = bucket.ab.find({a, b});
        const BigInt nab = it == bucket.ab.end() ? 0 : it->second;
        BigInt diff = nab * nc - BigInt(na) * nb;
        if (diff < 0) diff = -diff;
        worst = std::max(worst, diff);
      }
    }
    if (worst != 0) best = std::max(best, Rational(worst, nc * nc));
  }
  return best;
}

struct Layout {
  std::size_t library = 0;   // radix q
  std::size_t security = 0;  // radix q
  std::size_t privacy = 0;   // radix q, free coordinates only
  std::size_t demand = 0;    // radix q, or radix N for kFP
  std::uint32_t q = 0;
  std::uint32_t demand_radix = 0;
};

Layout MakeLayout(const SchemeConfig& config) {
  Layout l;
  l.q = config.field().q();
  l.library = config.N() * config.B();
  if (UsesSecurityKeys(config.variant())) l.security = config.L() * config.S() * config.packet_size();
  if (UsesPrivacyKeys(config.variant())) {
    l.privacy = config.K() * (FileRetrievalOnly(config.variant()) ? config.N() - 1 : config.N());
  }
  if (FileRetrievalOnly(config.variant())) {
    l.demand = config.K();
    l.demand_radix = static_cast<std::uint32_t>(config.N());
  } else {
    l.demand = config.K() * config.N();
    l.demand_radix = l.q;
  }
  return l;
}

BigInt DemandSpace(const SchemeConfig& config) {
  const Layout l = MakeLayout(config);
  return boost::multiprecision::pow(BigInt(l.demand_radix), static_cast<unsigned>(l.demand));
}

// Mixed-radix digits of a world index, least significant first.
class DigitReader {
 public:
  explicit DigitReader(std::uint64_t index) : rest_(index) {}
  Symbol Next(std::uint32_t radix) {
    const auto d = static_cast<Symbol>(rest_ % radix);
    rest_ /= radix;
    return d;
  }

 private:
  std::uint64_t rest_;
};

std::vector<Demand> ReadDemands(const SchemeConfig& config, DigitReader& r) {
  std::vector<Demand> demands(config.K(), Demand(config.N(), 0));
  for (auto& d : demands) {
    if (FileRetrievalOnly(config.variant())) {
      d[r.Next(static_cast<std::uint32_t>(config.N()))] = 1;
    } else {
      for (auto& x : d) x = r.Next(config.field().q());
    }
  }
  return demands;
}

struct World {
  Library library;
  Randomness randomness;
  std::vector<Demand> demands;
};

World ReadWorld(const SchemeConfig& config, std::uint64_t index) {
  const Field& f = config.field();
  const std::uint32_t q = f.q();
  DigitReader r(index);
  std::vector<std::vector<Symbol>> files(config.N(), std::vector<Symbol>(config.B()));
  for (auto& file : files) {
    for (auto& x : file) x = r.Next(q);
  }
  Randomness rnd;
  if (UsesSecurityKeys(config.variant())) {
    rnd.security_keys.assign(config.L(),
                             std::vector<Block>(config.S(), Block(config.packet_size())));
    for (auto& per_l : rnd.security_keys) {
      for (auto& b : per_l) {
        for (auto& x : b) x = r.Next(q);
      }
    }
  }
  rnd.privacy_keys.assign(config.K(), std::vector<Symbol>(config.N(), 0));
  if (UsesPrivacyKeys(config.variant())) {
    for (auto& p : rnd.privacy_keys) {
      if (FileRetrievalOnly(config.variant())) {
        Symbol sum = 0;
        for (std::size_t n = 0; n + 1 < p.size(); ++n) {
          p[n] = r.Next(q);
          sum = f.Add(sum, p[n]);
        }
        p.back() = f.Sub(f.Neg(1), sum);
      } else {
        for (auto& x : p) x = r.Next(q);
      }
    }
  }
  std::vector<Demand> demands = ReadDemands(config, r);
  return World{Library(config.L(), config.F(), std::move(files)), std::move(rnd),
               std::move(demands)};
}

std::uint64_t CheckedWorldCount(const SchemeConfig& config, const OracleOptions& options) {
  const BigInt count = WorldCount(config);
  if (count > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                ToString(Rational(count)) + " worlds exceed the budget of " +
                    std::to_string(options.budget) +
                    "; shrink B, N, K or q, or raise RSPLFR_BUDGET");
  }
  return static_cast<std::uint64_t>(count);
}

Key Flatten(const std::vector<std::vector<Symbol>>& rows) {
  Key out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

Key Concat(Key a, const Key& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

using Probe = std::function<void(const Transcript&, std::vector<Triple>&)>;

// Runs every world through the message-level simulation and accumulates,
// for each of the `tests` probes' outputs, joint counts. Returns the max
// deviation per test.
std::vector<Rational> Enumerate(const SchemeConfig& config, const OracleOptions& options,
                                std::size_t tests, const Probe& probe, std::uint64_t* worlds) {
  const std::uint64_t total = CheckedWorldCount(config, options);
  *worlds = total;
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<Counts>> partial(threads, std::vector<Counts>(tests));

  auto work = [&](unsigned w) {
    std::vector<Triple> out;
    for (std::uint64_t index = w; index < total; index += threads) {
      World world = ReadWorld(config, index);
      const Transcript tr = SimulateWorld(config, std::move(world.library),
                                          std::move(world.randomness), std::move(world.demands),
                                          {}, false);
      out.clear();
      probe(tr, out);
      for (std::size_t t = 0; t < tests; ++t) {
        Bucket& b = partial[w][t][out[t].c];
        ++b.n;
        ++b.a[out[t].a];
        ++b.b[out[t].b];
        ++b.ab[{std::move(out[t].a), std::move(out[t].b)}];
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<Rational> result;
  for (std::size_t t = 0; t < tests; ++t) {
    Counts merged = std::move(partial[0][t]);
    for (unsigned w = 1; w < threads; ++w) {
      for (const auto& [c, bucket] : partial[w][t]) merged[c].Merge(bucket);
    }
    result.push_back(MaxDeviation(merged));
  }
  return result;
}

IndependenceReport Single(Condition condition, const SchemeConfig& config,
                          const OracleOptions& options, const Probe& probe) {
  IndependenceReport report;
  report.condition = condition;
  report.variant = config.variant();
  report.max_deviation = Enumerate(config, options, 1, probe, &report.world_count).front();
  return report;
}

}  // namespace

std::uint64_t DefaultBudget() {
  if (const char* env = std::getenv("RSPLFR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

std::string_view ConditionName(Condition c) {
  switch (c) {
    case Condition::kCorrectness: return "correctness";
    case Condition::kSecurity: return "security";
    case Condition::kSecurityJoint: return "security-joint";
    case Condition::kUserPrivacy: return "user-privacy";
    case Condition::kServerPrivacy: return "server-privacy";
  }
  return "?";
}

bool ExpectedToHold(Condition c, Variant v) {
  switch (c) {
    case Condition::kCorrectness: return true;
    case Condition::kSecurity:
    case Condition::kSecurityJoint: return UsesSecurityKeys(v);
    case Condition::kUserPrivacy:
    case Condition::kServerPrivacy: return UsesPrivacyKeys(v);
  }
  return false;
}

BigInt WorldCount(const SchemeConfig& config) {
  const Layout l = MakeLayout(config);
  return boost::multiprecision::pow(BigInt(l.q),
                                    static_cast<unsigned>(l.library + l.security + l.privacy)) *
         DemandSpace(config);
}

IndependenceReport CheckSecurity(const SchemeConfig& config, const OracleOptions& options) {
  return Single(Condition::kSecurity, config, options,
                [](const Transcript& tr, std::vector<Triple>& out) {
                  out.push_back({{}, Flatten(tr.run.library.files()),
                                 ExtractAdversaryView(tr, AdversaryKind::kWiretapper).symbols});
                });
}

IndependenceReport CheckSecurityJoint(const SchemeConfig& config, const OracleOptions& options) {
  return Single(Condition::kSecurityJoint, config, options,
                [](const Transcript& tr, std::vector<Triple>& out) {
                  out.push_back({{},
                                 Concat(Flatten(tr.run.library.files()), Flatten(tr.run.demands)),
                                 ExtractAdversaryView(tr, AdversaryKind::kWiretapper).symbols});
                });
}

std::vector<IndependenceReport> CheckUserPrivacy(const SchemeConfig& config,
                                                 const OracleOptions& options) {
  const int K = static_cast<int>(config.K());
  std::vector<std::vector<std::size_t>> sets;
  for (int size = 1; size < K; ++size) {
    for (const auto& s : Subsets(K, size)) sets.emplace_back(s.begin(), s.end());
  }
  std::vector<IndependenceReport> reports;
  if (sets.empty()) return reports;
  std::uint64_t worlds = 0;
  const auto deviations = Enumerate(
      config, options, sets.size(),
      [&sets, K](const Transcript& tr, std::vector<Triple>& out) {
        const Key w = Flatten(tr.run.library.files());
        for (const auto& S : sets) {
          Key others;
          for (int k = 0; k < K; ++k) {
            if (!std::binary_search(S.begin(), S.end(), static_cast<std::size_t>(k))) {
              others.insert(others.end(), tr.run.demands[k].begin(), tr.run.demands[k].end());
            }
          }
          out.push_back({w, std::move(others),
                         ExtractAdversaryView(tr, AdversaryKind::kColludingUsers, S).symbols});
        }
      },
      &worlds);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    IndependenceReport r;
    r.condition = Condition::kUserPrivacy;
    r.variant = config.variant();
    r.users = sets[i];
    r.world_count = worlds;
    r.max_deviation = deviations[i];
    reports.push_back(std::move(r));
  }
  return reports;
}

IndependenceReport CheckServerPrivacy(const SchemeConfig& config, const OracleOptions& options) {
  return Single(Condition::kServerPrivacy, config, options,
                [](const Transcript& tr, std::vector<Triple>& out) {
                  out.push_back({{}, Flatten(tr.run.demands),
                                 ExtractAdversaryView(tr, AdversaryKind::kColludingServers).symbols});
                });
}

double CorrectnessReport::coverage() const {
  if (total == 0) return 1.0;
  return ToDouble(Rational(assignments, total));
}

CorrectnessReport CheckCorrectness(const SchemeConfig& config, const OracleOptions& options) {
  CorrectnessReport report;
  report.variant = config.variant();
  const BigInt space = DemandSpace(config);
  const auto subsets = Subsets(static_cast<int>(config.H()), static_cast<int>(config.L()));
  const BigInt per_tuple =
      boost::multiprecision::pow(BigInt(subsets.size()), static_cast<unsigned>(config.K()));
  report.total = space * per_tuple;
  report.exhaustive = report.total <= options.budget;

  Rng rng(config.seed());
  const Randomness randomness = DrawRandomness(config, rng);
  const Library library = Library::Random(config, rng);
  Rng sampler(options.seed);

  const std::uint64_t tuples =
      report.exhaustive ? static_cast<std::uint64_t>(space) : options.samples;
  for (std::uint64_t i = 0; i < tuples; ++i) {
    std::vector<Demand> demands;
    if (report.exhaustive) {
      DigitReader r(i);
      demands = ReadDemands(config, r);
    } else {
      demands = RandomDemands(config, sampler);
    }
    const ProtocolRun run = RunProtocol(config, library, randomness, demands);
    BigInt ok = 1;
    for (std::size_t k = 0; k < config.K(); ++k) {
      const std::vector<Symbol> want = library.Combination(config.field(), demands[k]);
      std::uint64_t good = 0;
      for (const auto& subset : subsets) {
        std::vector<ServerSignal> heard;
        for (int h : subset) heard.push_back(run.signals[h]);
        try {
          if (RobustDecode(config, run.placement.users[k], demands[k], heard) == want) ++good;
        } catch (const Error&) {
        }
      }
      ok *= good;
    }
    report.successes += ok;
    report.assignments += per_tuple;
    ++report.demand_tuples;
  }
  return report;
}

static nlohmann::json IntegerJson(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(v);
  }
  return ToString(Rational(v));
}

nlohmann::json ToJson(const IndependenceReport& report) {
  nlohmann::json j = {{"condition", ConditionName(report.condition)},
                      {"variant", VariantName(report.variant)},
                      {"world_count", report.world_count},
                      {"max_deviation_num", IntegerJson(numerator(report.max_deviation))},
                      {"max_deviation_den", IntegerJson(denominator(report.max_deviation))},
                      {"verdict", report.holds() ? "holds" : "fails"}};
  if (!report.users.empty()) {
    std::vector<std::size_t> users;
    for (std::size_t k : report.users) users.push_back(k + 1);
    j["users"] = users;
  }
  return j;
}

nlohmann::json ToJson(const CorrectnessReport& report) {
  return {{"condition", ConditionName(Condition::kCorrectness)},
          {"variant", VariantName(report.variant)},
          {"demand_tuples", report.demand_tuples},
          {"assignments", ToString(Rational(report.assignments))},
          {"successes", ToString(Rational(report.successes))},
          {"total", ToString(Rational(report.total))},
          {"exhaustive", report.exhaustive},
          {"coverage", report.coverage()},
          {"verdict", report.holds() ? "holds" : "fails"}};
}

}  // namespace rsplfr
