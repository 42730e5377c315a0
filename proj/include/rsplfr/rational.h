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

#ifndef RSPLFR_RATIONAL_H_
#define RSPLFR_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsplfr {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "p/q", or "p" when the denominator is one.
std::string ToString(const Rational& value);

// Decimal rendering with the given number of significant digits.
std::string ToDecimal(const Rational& value, int significant_digits = 12);

double ToDouble(const Rational& value);

// Binomial coefficient; zero when k < 0 or k > n (including n < 0).
BigInt Binomial(std::int64_t n, std::int64_t k);

}  // namespace rsplfr

#endif  // RSPLFR_RATIONAL_H_
