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

#ifndef RSPLFR_TRADEOFF_H_
#define RSPLFR_TRADEOFF_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rsplfr/pda.h"
#include "rsplfr/rational.h"
#include "rsplfr/scheme.h"

namespace rsplfr {

struct TradeoffParameters {
  std::size_t N = 0;
  std::size_t K = 0;
  std::size_t L = 0;
  std::size_t H = 0;
  friend bool operator==(const TradeoffParameters&, const TradeoffParameters&) = default;
};

struct TradeoffPoint {
  Variant variant = Variant::kLSP;
  Rational M;
  Rational R;
  std::optional<int> t;                     // corner index, none for trivial points
  std::optional<BigInt> subpacketization;   // L * F where a placement exists
};

// Memory / load pair of the scheme built on an arbitrary PDA with full
// security and privacy: (1 + Z(N-1)/F, H S / (L F)).
TradeoffPoint PdaPoint(const Pda& pda, std::size_t N, std::size_t L, std::size_t H);

// Corner t in [0, K] of the variant's MAN-based family. kLP / kFP use the
// worst-case query rank min{K,N} / min{K,N-1}.
TradeoffPoint CornerPoint(Variant variant, const TradeoffParameters& p, int t);

// All K+1 corners, plus the point (0, HN/L) for kLP and kFP.
std::vector<TradeoffPoint> CornerPoints(Variant variant, const TradeoffParameters& p);

class PiecewiseLinearCurve {
 public:
  // Throws Error(kDomainError) unless M is strictly increasing.
  explicit PiecewiseLinearCurve(std::vector<TradeoffPoint> corners);

  const std::vector<TradeoffPoint>& corners() const { return corners_; }
  const Rational& min_memory() const { return corners_.front().M; }
  const Rational& max_memory() const { return corners_.back().M; }

  // Linear interpolation between adjacent corners. Throws Error(kDomainError)
  // outside [min_memory, max_memory].
  Rational Evaluate(const Rational& M) const;

  // Slopes between consecutive corners are non-decreasing and non-positive.
  bool IsConvexNonIncreasing() const;

 private:
  std::vector<TradeoffPoint> corners_;
};

// Lower convex hull (monotone chain). Of points sharing M the lowest R is
// kept; collinear interior points are dropped.
PiecewiseLinearCurve LowerConvexEnvelope(std::vector<TradeoffPoint> points);

PiecewiseLinearCurve TradeoffCurve(Variant variant, const TradeoffParameters& p);
inline PiecewiseLinearCurve ManCurve(const TradeoffParameters& p) {
  return TradeoffCurve(Variant::kLSP, p);
}
inline PiecewiseLinearCurve LpCurve(const TradeoffParameters& p) {
  return TradeoffCurve(Variant::kLP, p);
}
inline PiecewiseLinearCurve FpCurve(const TradeoffParameters& p) {
  return TradeoffCurve(Variant::kFP, p);
}
inline PiecewiseLinearCurve LCurve(const TradeoffParameters& p) {
  return TradeoffCurve(Variant::kL, p);
}

// Load lower bound for PDA-based schemes, HK(N-M) / (L(N-1+K(M-1))).
// Throws Error(kDomainError) for M < 1 or M > N.
Rational PdaLowerBound(const Rational& M, const TradeoffParameters& p);

// a: N >= (K+1+sqrt(3K^2+1))/2, b: K < N below that threshold, c: N <= K.
enum class Regime { kA, kB, kC };
Regime EnvelopeRegime(std::size_t N, std::size_t K);
char RegimeTag(Regime r);

// The three parameter sets (N,K,L,H) of the comparison figure.
std::vector<TradeoffParameters> Fig2ParameterSets();

// "variant,M,R,t,is_corner" rows: curve corners (is_corner=1), then, when
// samples > 0, that many evenly spaced interpolated points (is_corner=0, empty
// t) merged in M order. Decimals use 12 significant digits.
std::string CurveCsv(const PiecewiseLinearCurve& curve, Variant variant, int samples = 0);

}  // namespace rsplfr

#endif  // RSPLFR_TRADEOFF_H_
