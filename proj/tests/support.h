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

#ifndef RSPLFR_TESTS_SUPPORT_H_
#define RSPLFR_TESTS_SUPPORT_H_

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "rsplfr/netsim.h"
#include "rsplfr/pda.h"
#include "rsplfr/scheme.h"

namespace rsplfr::testing {

// Random L-subset of [0, H).
inline std::vector<std::size_t> RandomSubset(std::mt19937_64& rng, std::size_t H, std::size_t L) {
  std::vector<std::size_t> all(H);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(L);
  std::sort(all.begin(), all.end());
  return all;
}

// q in {2,3,4,5}, K <= 5, H <= min(q, 5), random variant, t and per-user
// L-subsets.
inline Scenario RandomScenario(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5}[pick(0, 3)];
  const int K = pick(1, 5);
  const int t = pick(0, K);
  const auto H = static_cast<std::size_t>(pick(1, std::min<int>(q, 5)));
  const auto L = static_cast<std::size_t>(pick(1, static_cast<int>(H)));
  const auto N = static_cast<std::size_t>(pick(2, 4));
  const Variant v = std::vector<Variant>{Variant::kLSP, Variant::kLP, Variant::kFP, Variant::kL}[pick(0, 3)];
  const std::size_t mult = static_cast<std::size_t>(pick(1, 2));
  const SchemeConfig base(N, Pda::Man(K, t), MdsCode::Vandermonde(L, H, Field::Create(q)), v);
  const SchemeConfig config(N, Pda::Man(K, t), MdsCode::Vandermonde(L, H, Field::Create(q)), v,
                            base.B() * mult, rng());
  Rng demand_rng(rng());
  Scenario s{config, RandomDemands(config, demand_rng), {}, false, {}, false};
  for (int k = 0; k < K; ++k) s.availability[k] = RandomSubset(rng, H, L);
  return s;
}

}  // namespace rsplfr::testing

#endif  // RSPLFR_TESTS_SUPPORT_H_
