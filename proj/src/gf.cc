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

#include "rsplfr/gf.h"

#include <array>
#include <limits>

#include "rsplfr/error.h"

namespace rsplfr {
namespace {

// Primitive polynomials x^e + ..., indexed by e. Entry e includes the x^e bit.
constexpr std::array<std::uint32_t, 17> kReductionPolynomials = {
    0,        0,        0x7,      0xB,      0x13,     0x25,
    0x43,     0x83,     0x11D,    0x211,    0x409,    0x805,
    0x1053,   0x201B,   0x4443,   0x8003,   0x1100B,
};

bool IsPrime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::Create(std::uint32_t q) {
  auto impl = std::make_shared<Impl>();
  impl->q = q;
  if (IsPrime(q)) {
    impl->characteristic = q;
    impl->degree = 1;
    return Field(std::move(impl));
  }
  unsigned degree = 0;
  while (degree < 32 && (std::uint64_t{1} << degree) < q) ++degree;
  if (q < 4 || (std::uint64_t{1} << degree) != q || degree > 16) {
    throw Error(ErrorCode::kUnsupportedCardinality,
                "q=" + std::to_string(q) +
                    " is neither prime nor 2^e with 2 <= e <= 16");
  }
  impl->characteristic = 2;
  impl->degree = degree;
  impl->polynomial = kReductionPolynomials[degree];

  // Powers of x; x must reach every nonzero element exactly once before
  // returning to 1, which certifies the polynomial is primitive and hence
  // irreducible.
  const std::uint32_t order = q - 1;
  impl->exp.assign(2 * static_cast<std::size_t>(order), 0);
  impl->log.assign(q, 0);
  std::vector<bool> seen(q, false);
  Symbol value = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (seen[value]) {
      throw Error(ErrorCode::kUnsupportedCardinality,
                  "reduction polynomial for q=" + std::to_string(q) +
                      " is not primitive");
    }
    seen[value] = true;
    impl->exp[i] = value;
    impl->exp[i + order] = value;
    impl->log[value] = i;
    value <<= 1;
    if (value & q) value ^= impl->polynomial;
  }
  if (value != 1) {
    throw Error(ErrorCode::kUnsupportedCardinality,
                "reduction polynomial for q=" + std::to_string(q) +
                    " is not primitive");
  }
  return Field(std::move(impl));
}

Symbol Field::Inv(Symbol a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (impl_->degree > 1) {
    const std::uint32_t order = impl_->q - 1;
    return impl_->exp[(order - impl_->log[a]) % order];
  }
  return Pow(a, impl_->q - 2);
}

Symbol Field::Pow(Symbol a, std::uint64_t exponent) const {
  Symbol result = 1;
  Symbol base = a;
  while (exponent > 0) {
    if (exponent & 1) result = Mul(result, base);
    base = Mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::string Field::Name() const {
  return "GF(" + std::to_string(impl_->q) + ")";
}

FieldElement::FieldElement(Field field, std::uint64_t value)
    : field_(std::move(field)), value_(0) {
  if (!field_.Contains(value)) {
    throw Error(ErrorCode::kDomainError, std::to_string(value) +
                                             " is not a canonical element of " +
                                             field_.Name());
  }
  value_ = static_cast<Symbol>(value);
}

namespace {

const Field& CommonField(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kFieldMismatch,
                a.field().Name() + " vs " + b.field().Name());
  }
  return a.field();
}

}  // namespace

FieldElement FieldElement::Inverse() const {
  return FieldElement(field_, field_.Inv(value_));
}

FieldElement FieldElement::Pow(std::uint64_t exponent) const {
  return FieldElement(field_, field_.Pow(value_, exponent));
}

FieldElement FieldElement::Pow(const FieldElement& exponent) const {
  return Pow(std::uint64_t{exponent.value()});
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return FieldElement(f, f.Add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return FieldElement(f, f.Sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return FieldElement(f, f.Mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return FieldElement(f, f.Div(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field_, a.field_.Neg(a.value_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  CommonField(a, b);
  return a.value_ == b.value_;
}

Symbol UniformSymbol(Rng& rng, std::uint32_t q) {
  const std::uint64_t range = q;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<Symbol>(draw % range);
}

}  // namespace rsplfr
