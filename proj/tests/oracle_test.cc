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

#include <functional>
#include <map>

#include "gtest/gtest.h"
#include "rsplfr/config.h"
#include "rsplfr/error.h"

namespace rsplfr {
namespace {

using Tuple = std::vector<Symbol>;

SchemeConfig Micro(const char* name) { return RunPreset(name).config; }

void Append(Tuple& out, const std::vector<Symbol>& v) { out.insert(out.end(), v.begin(), v.end()); }

// World enumeration written against the scheme API only, for the binary micro
// instances (N=2, K=2, L=1, S=1, one-symbol packets).

void ForEachBinaryMicroWorld(const SchemeConfig& c, const std::function<void(const ProtocolRun&)>& visit) {
  ASSERT_EQ(c.field().q(), 2u);
  const bool keys = c.variant() == Variant::kLSP;
  const bool priv = c.variant() != Variant::kL;
  const int bits = 4 + (keys ? 1 : 0) + (priv ? 4 : 0) + 4;
  for (int w = 0; w < (1 << bits); ++w) {
    int x = w;
    auto next = [&x] {
      const Symbol b = x & 1;
      x >>= 1;
      return b;
    };
    std::vector<std::vector<Symbol>> files(2, std::vector<Symbol>(2));
    for (auto& f : files) {
      for (auto& s : f) s = next();
    }
    Randomness r;
    if (keys) r.security_keys = {{{next()}}};
    r.privacy_keys.assign(2, {0, 0});
    if (priv) {
      for (auto& p : r.privacy_keys) {
        for (auto& s : p) s = next();
      }
    }
    std::vector<Demand> d(2, Demand(2));
    for (auto& dk : d) {
      for (auto& s : dk) s = next();
    }
    visit(RunProtocol(c, Library(1, 2, files), r, d));
  }
}

// max over c, a, b of |n_abc n_c - n_ac n_bc| / n_c^2.
class Counter {
 public:
  void Add(const Tuple& c, const Tuple& a, const Tuple& b) {
    ++n_c_[c];
    ++n_ac_[{c, a}];
    ++n_bc_[{c, b}];
    ++n_abc_[{c, {a, b}}];
  }
  Rational Deviation() const {
    Rational worst = 0;
    for (const auto& [ac, nac] : n_ac_) {
      const auto& [c, a] = ac;
      const std::int64_t nc = n_c_.at(c);
      for (const auto& [bc, nbc] : n_bc_) {
        if (bc.first != c) continue;
        auto it = n_abc_.find({c, {a, bc.second}});
        const std::int64_t nabc = it == n_abc_.end() ? 0 : it->second;
        Rational dev = MakeRational(nabc * nc - nac * nbc, nc * nc);
        if (dev < 0) dev = -dev;
        if (dev > worst) worst = dev;
      }
    }
    return worst;
  }

 private:
  std::map<Tuple, std::int64_t> n_c_;
  std::map<std::pair<Tuple, Tuple>, std::int64_t> n_ac_, n_bc_;
  std::map<std::pair<Tuple, std::pair<Tuple, Tuple>>, std::int64_t> n_abc_;
};

Tuple Files(const ProtocolRun& run) {
  Tuple t;
  for (const auto& f : run.library.files()) Append(t, f);
  return t;
}

Tuple Wire(const ProtocolRun& run) {
  Tuple t;
  for (const auto& sig : run.signals) {
    for (const auto& q : sig.queries) Append(t, q);
    for (const auto& b : sig.blocks) Append(t, b);
  }
  return t;
}

Tuple Cache(const UserState& u) {
  Tuple t;
  if (u.stores_privacy_key) Append(t, u.privacy_key);
  for (const auto& row : u.rows) {
    for (const auto& b : row.uncoded) Append(t, b);
    for (const auto& b : row.masked) Append(t, b);
  }
  return t;
}

Tuple Demands(const ProtocolRun& run) {
  Tuple t;
  for (const auto& d : run.demands) Append(t, d);
  return t;
}

Rational ReferenceSecurity(const SchemeConfig& c) {
  Counter counter;
  ForEachBinaryMicroWorld(c, [&](const ProtocolRun& run) { counter.Add({}, Files(run), Wire(run)); });
  return counter.Deviation();
}

Rational ReferenceUserPrivacy(const SchemeConfig& c, std::size_t k) {
  Counter counter;
  ForEachBinaryMicroWorld(c, [&](const ProtocolRun& run) {
    Tuple seen = Cache(run.placement.users[k]);
    Append(seen, Wire(run));
    Append(seen, run.demands[k]);
    counter.Add(Files(run), run.demands[1 - k], seen);
  });
  return counter.Deviation();
}

Rational ReferenceServerPrivacy(const SchemeConfig& c) {
  Counter counter;
  ForEachBinaryMicroWorld(c, [&](const ProtocolRun& run) {
    Tuple seen;
    for (const auto& q : run.queries) Append(seen, q);
    for (const auto& st : run.placement.servers) {
      for (const auto& per_n : st.coded) {
        for (const auto& b : per_n) Append(seen, b);
      }
    }
    for (const auto& per_l : run.randomness.security_keys) {
      for (const auto& b : per_l) Append(seen, b);
    }
    counter.Add({}, Demands(run), seen);
  });
  return counter.Deviation();
}

TEST(WorldCountTest, Micro) {
  EXPECT_EQ(WorldCount(Micro("micro-lsp")), 8192);
  EXPECT_EQ(WorldCount(Micro("micro-lp")), 4096);
  EXPECT_EQ(WorldCount(Micro("micro-l")), 256);
  // GF(3): 3^4 files, one free privacy symbol per user, unit demands.
  EXPECT_EQ(WorldCount(Micro("micro-fp")), 81 * 9 * 4);
}

TEST(ExpectedTest, Table) {
  for (Variant v : {Variant::kLSP, Variant::kLP, Variant::kFP, Variant::kL}) {
    EXPECT_TRUE(ExpectedToHold(Condition::kCorrectness, v));
    EXPECT_EQ(ExpectedToHold(Condition::kSecurity, v), v == Variant::kLSP);
    EXPECT_EQ(ExpectedToHold(Condition::kUserPrivacy, v), v != Variant::kL);
    EXPECT_EQ(ExpectedToHold(Condition::kServerPrivacy, v), v != Variant::kL);
  }
}

TEST(SecurityTest, MatchesReferenceEnumeration) {
  for (const char* name : {"micro-lsp", "micro-lp", "micro-l"}) {
    const SchemeConfig c = Micro(name);
    const IndependenceReport r = CheckSecurity(c);
    EXPECT_EQ(r.max_deviation, ReferenceSecurity(c)) << name;
    EXPECT_EQ(r.holds(), c.variant() == Variant::kLSP) << name;
  }
}

TEST(SecurityTest, JointWithDemands) {
  EXPECT_TRUE(CheckSecurityJoint(Micro("micro-lsp")).holds());
  EXPECT_FALSE(CheckSecurityJoint(Micro("micro-lp")).holds());
  EXPECT_FALSE(CheckSecurityJoint(Micro("micro-l")).holds());
}

TEST(UserPrivacyTest, MatchesReferenceEnumeration) {
  for (const char* name : {"micro-lsp", "micro-lp", "micro-l"}) {
    const SchemeConfig c = Micro(name);
    const auto reports = CheckUserPrivacy(c);
    ASSERT_EQ(reports.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_EQ(reports[k].users, (std::vector<std::size_t>{k}));
      EXPECT_EQ(reports[k].max_deviation, ReferenceUserPrivacy(c, k)) << name << " S={" << k + 1 << "}";
      EXPECT_EQ(reports[k].holds(), c.variant() != Variant::kL);
    }
  }
}

TEST(ServerPrivacyTest, MatchesReferenceEnumeration) {
  for (const char* name : {"micro-lsp", "micro-lp", "micro-l"}) {
    const SchemeConfig c = Micro(name);
    const IndependenceReport r = CheckServerPrivacy(c);
    EXPECT_EQ(r.max_deviation, ReferenceServerPrivacy(c)) << name;
    EXPECT_EQ(r.holds(), c.variant() != Variant::kL);
  }
}

TEST(FileRetrievalTest, TernaryMicroInstance) {
  const SchemeConfig c = Micro("micro-fp");
  EXPECT_TRUE(CheckServerPrivacy(c).holds());
  for (const auto& r : CheckUserPrivacy(c)) EXPECT_TRUE(r.holds());
  EXPECT_FALSE(CheckSecurity(c).holds());
  EXPECT_TRUE(CheckCorrectness(c).holds());
}

TEST(CorrectnessTest, MicroAndToy) {
  for (const char* name : {"micro-lsp", "micro-lp", "micro-fp", "micro-l"}) {
    const CorrectnessReport r = CheckCorrectness(Micro(name));
    EXPECT_TRUE(r.holds()) << name;
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.assignments, r.total);
  }
  const CorrectnessReport micro = CheckCorrectness(Micro("micro-lsp"));
  EXPECT_EQ(micro.demand_tuples, 16u);
  EXPECT_EQ(micro.total, 16 * 4);

  const CorrectnessReport toy = CheckCorrectness(RunPreset("toy").config);
  EXPECT_EQ(toy.demand_tuples, 4096u);
  EXPECT_EQ(toy.total, 4096 * 27);
  EXPECT_TRUE(toy.holds());
  EXPECT_EQ(toy.coverage(), 1.0);
}

TEST(CorrectnessTest, SamplesAboveBudget) {
  OracleOptions o;
  o.budget = 1000;
  o.samples = 300;
  o.seed = 4;
  const CorrectnessReport r = CheckCorrectness(RunPreset("toy").config, o);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.demand_tuples, 300u);
  EXPECT_TRUE(r.holds());
  EXPECT_LT(r.coverage(), 1.0);
}

TEST(BudgetTest, Exceeded) {
  OracleOptions o;
  o.budget = 100;
  for (auto check : {&CheckSecurity, &CheckSecurityJoint, &CheckServerPrivacy}) {
    try {
      check(Micro("micro-lsp"), o);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    }
  }
  EXPECT_THROW(CheckUserPrivacy(Micro("micro-lsp"), o), Error);
  EXPECT_THROW(CheckSecurity(RunPreset("toy").config), Error);
}

TEST(ThreadsTest, ResultIndependentOfPartitioning) {
  for (const char* name : {"micro-lsp", "micro-l"}) {
    const SchemeConfig c = Micro(name);
    OracleOptions one, many;
    many.threads = 5;
    EXPECT_EQ(CheckSecurity(c, one).max_deviation, CheckSecurity(c, many).max_deviation);
    EXPECT_EQ(CheckServerPrivacy(c, one).max_deviation, CheckServerPrivacy(c, many).max_deviation);
    const auto a = CheckUserPrivacy(c, one), b = CheckUserPrivacy(c, many);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].max_deviation, b[i].max_deviation);
  }
}

TEST(JsonTest, VerdictReport) {
  const nlohmann::json j = ToJson(CheckSecurity(Micro("micro-l")));
  EXPECT_EQ(j["condition"], "security");
  EXPECT_EQ(j["variant"], "L");
  EXPECT_EQ(j["world_count"], 256);
  EXPECT_EQ(j["verdict"], "fails");
  EXPECT_GT(j["max_deviation_num"].get<std::int64_t>(), 0);
  const nlohmann::json ok = ToJson(CheckSecurity(Micro("micro-lsp")));
  EXPECT_EQ(ok["max_deviation_num"], 0);
  EXPECT_EQ(ok["max_deviation_den"], 1);
  EXPECT_EQ(ok["verdict"], "holds");
}

}  // namespace
}  // namespace rsplfr
