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

#include "rsplfr/tradeoff.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "rsplfr/error.h"

namespace rsplfr {
namespace {

Rational Big(std::size_t v) { return Rational(BigInt(v)); }

// Cross product of (b - a) x (c - a); <= 0 means b is on or above segment ac.
Rational Cross(const TradeoffPoint& a, const TradeoffPoint& b, const TradeoffPoint& c) {
  return (b.M - a.M) * (c.R - a.R) - (b.R - a.R) * (c.M - a.M);
}

}  // namespace

TradeoffPoint PdaPoint(const Pda& pda, std::size_t N, std::size_t L, std::size_t H) {
  TradeoffPoint p;
  p.variant = Variant::kLSP;
  p.M = 1 + Rational(BigInt(pda.Z()) * BigInt(N - 1), BigInt(pda.F()));
  p.R = Rational(BigInt(H) * BigInt(pda.S()), BigInt(L) * BigInt(pda.F()));
  p.t = pda.man_t();
  p.subpacketization = BigInt(L) * BigInt(pda.F());
  return p;
}

TradeoffPoint CornerPoint(Variant variant, const TradeoffParameters& p, int t) {
  const auto K = static_cast<std::int64_t>(p.K);
  const auto N = static_cast<std::int64_t>(p.N);
  if (t < 0 || t > K) {
    throw Error(ErrorCode::kDomainError, "corner index t=" + std::to_string(t) +
                                             " outside [0, " + std::to_string(K) + "]");
  }
  TradeoffPoint point;
  point.variant = variant;
  point.t = t;
  const BigInt F = Binomial(K, t);
  point.subpacketization = BigInt(p.L) * F;
  const Rational scale = Rational(BigInt(p.H), BigInt(p.L) * F);
  switch (variant) {
    case Variant::kLSP:
      point.M = 1 + Rational(BigInt(t) * BigInt(N - 1), BigInt(K));
      point.R = scale * Binomial(K, t + 1);
      break;
    case Variant::kLP:
    case Variant::kFP: {
      const std::int64_t rank = variant == Variant::kLP ? std::min(K, N) : std::min(K, N - 1);
      point.M = 1 + Rational(BigInt(t) * BigInt(N - 1), BigInt(K));
      point.R = scale * (Binomial(K, t + 1) - Binomial(K - rank, t + 1));
      break;
    }
    case Variant::kL:
      point.M = Rational(BigInt(t) * BigInt(N), BigInt(K));
      point.R = scale * (Binomial(K, t + 1) - Binomial(K - std::min(K, N), t + 1));
      break;
  }
  return point;
}

std::vector<TradeoffPoint> CornerPoints(Variant variant, const TradeoffParameters& p) {
  if (p.K == 0 || p.L == 0 || p.H == 0 || p.N < 1) {
    throw Error(ErrorCode::kDomainError, "tradeoff parameters must be positive");
  }
  std::vector<TradeoffPoint> points;
  if (variant == Variant::kLP || variant == Variant::kFP) {
    TradeoffPoint trivial;
    trivial.variant = variant;
    trivial.M = 0;
    trivial.R = Rational(BigInt(p.H) * BigInt(p.N), BigInt(p.L));
    points.push_back(trivial);
  }
  for (int t = 0; t <= static_cast<int>(p.K); ++t) points.push_back(CornerPoint(variant, p, t));
  return points;
}

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<TradeoffPoint> corners)
    : corners_(std::move(corners)) {
  if (corners_.empty()) throw Error(ErrorCode::kDomainError, "curve without corners");
  for (std::size_t i = 1; i < corners_.size(); ++i) {
    if (corners_[i].M <= corners_[i - 1].M) {
      throw Error(ErrorCode::kDomainError, "curve corners must increase strictly in M");
    }
  }
}

Rational PiecewiseLinearCurve::Evaluate(const Rational& M) const {
  if (M < min_memory() || M > max_memory()) {
    throw Error(ErrorCode::kDomainError, "M=" + ToString(M) + " outside [" +
                                             ToString(min_memory()) + ", " +
                                             ToString(max_memory()) + "]");
  }
  auto it = std::lower_bound(corners_.begin(), corners_.end(), M,
                             [](const TradeoffPoint& c, const Rational& m) { return c.M < m; });
  if (it->M == M) return it->R;
  const TradeoffPoint& hi = *it;
  const TradeoffPoint& lo = *(it - 1);
  return lo.R + (hi.R - lo.R) * (M - lo.M) / (hi.M - lo.M);
}

bool PiecewiseLinearCurve::IsConvexNonIncreasing() const {
  std::optional<Rational> previous;
  for (std::size_t i = 1; i < corners_.size(); ++i) {
    const Rational slope =
        (corners_[i].R - corners_[i - 1].R) / (corners_[i].M - corners_[i - 1].M);
    if (slope > 0) return false;
    if (previous && slope < *previous) return false;
    previous = slope;
  }
  return true;
}

PiecewiseLinearCurve LowerConvexEnvelope(std::vector<TradeoffPoint> points) {
  std::sort(points.begin(), points.end(), [](const TradeoffPoint& a, const TradeoffPoint& b) {
    return a.M != b.M ? a.M < b.M : a.R < b.R;
  });
  std::vector<TradeoffPoint> hull;
  for (auto& p : points) {
    if (!hull.empty() && hull.back().M == p.M) continue;  // a lower R was kept
    while (hull.size() >= 2 && Cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(std::move(p));
  }
  return PiecewiseLinearCurve(std::move(hull));
}

PiecewiseLinearCurve TradeoffCurve(Variant variant, const TradeoffParameters& p) {
  return LowerConvexEnvelope(CornerPoints(variant, p));
}

Rational PdaLowerBound(const Rational& M, const TradeoffParameters& p) {
  if (M < 1 || M > Big(p.N)) {
    throw Error(ErrorCode::kDomainError,
                "bound requires 1 <= M <= N (got M=" + ToString(M) + ")");
  }
  const Rational N = Big(p.N), K = Big(p.K);
  return Big(p.H) * K * (N - M) / (Big(p.L) * (N - 1 + K * (M - 1)));
}

Regime EnvelopeRegime(std::size_t N, std::size_t K) {
  if (N <= K) return Regime::kC;
  const auto n = static_cast<std::int64_t>(N), k = static_cast<std::int64_t>(K);
  const BigInt lhs = BigInt(2 * n - k - 1);
  if (lhs >= 0 && lhs * lhs >= BigInt(3) * k * k + 1) return Regime::kA;
  return Regime::kB;
}

char RegimeTag(Regime r) {
  switch (r) {
    case Regime::kA: return 'a';
    case Regime::kB: return 'b';
    case Regime::kC: return 'c';
  }
  return '?';
}

std::vector<TradeoffParameters> Fig2ParameterSets() {
  return {{30, 10, 15, 20}, {25, 20, 15, 20}, {10, 30, 15, 20}};
}

std::string CurveCsv(const PiecewiseLinearCurve& curve, Variant variant, int samples) {
  struct Row {
    Rational M;
    Rational R;
    std::optional<int> t;
    bool corner;
  };
  std::vector<Row> rows;
  for (const auto& c : curve.corners()) rows.push_back({c.M, c.R, c.t, true});
  if (samples > 0) {
    const Rational span = curve.max_memory() - curve.min_memory();
    for (int j = 0; j < samples; ++j) {
      const Rational M = samples == 1 ? curve.min_memory()
                                      : curve.min_memory() + span * j / (samples - 1);
      rows.push_back({M, curve.Evaluate(M), std::nullopt, false});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.M != b.M ? a.M < b.M : a.corner > b.corner;
  });
  std::ostringstream out;
  out << "variant,M,R,t,is_corner\n";
  for (const auto& r : rows) {
    out << VariantName(variant) << ',' << ToDecimal(r.M) << ',' << ToDecimal(r.R) << ','
        << (r.t ? std::to_string(*r.t) : std::string()) << ',' << (r.corner ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace rsplfr
