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

#ifndef RSPLFR_GF_H_
#define RSPLFR_GF_H_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace rsplfr {

// A field symbol in canonical form: an integer in [0, q-1]. For GF(2^e) the
// bits are the coefficients of the polynomial representative (bit j holds the
// coefficient of x^j), so the element "alpha" of GF(4) is 2 and alpha+1 is 3.
using Symbol = std::uint32_t;

// Arithmetic over GF(q) for q prime (q < 2^32) or q = 2^e with e <= 16.
//
// Field is a cheap handle onto an immutable, shareable description. Two
// handles compare equal iff they describe the same cardinality; the canonical
// reduction polynomial table makes that an identity of fields.
class Field {
 public:
  // Throws Error(kUnsupportedCardinality) for any other q.
  static Field Create(std::uint32_t q);

  std::uint32_t q() const { return impl_->q; }
  std::uint32_t characteristic() const { return impl_->characteristic; }
  unsigned extension_degree() const { return impl_->degree; }
  // Bit mask of the reduction polynomial including the leading x^e term;
  // zero for prime fields.
  std::uint32_t reduction_polynomial() const { return impl_->polynomial; }
  bool is_binary_extension() const { return impl_->degree > 1; }

  bool Contains(std::uint64_t value) const { return value < impl_->q; }

  Symbol Add(Symbol a, Symbol b) const {
    if (impl_->characteristic == 2) return a ^ b;
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Symbol>(s >= impl_->q ? s - impl_->q : s);
  }
  Symbol Neg(Symbol a) const {
    if (impl_->characteristic == 2 || a == 0) return a;
    return impl_->q - a;
  }
  Symbol Sub(Symbol a, Symbol b) const { return Add(a, Neg(b)); }
  Symbol Mul(Symbol a, Symbol b) const {
    if (impl_->degree > 1) {
      if (a == 0 || b == 0) return 0;
      return impl_->exp[impl_->log[a] + impl_->log[b]];
    }
    return static_cast<Symbol>((std::uint64_t{a} * b) % impl_->q);
  }
  // Throws Error(kDivisionByZero) when a == 0.
  Symbol Inv(Symbol a) const;
  Symbol Div(Symbol a, Symbol b) const { return Mul(a, Inv(b)); }
  Symbol Pow(Symbol a, std::uint64_t exponent) const;

  // a + c*b, the inner step of every row operation.
  Symbol AddScaled(Symbol a, Symbol c, Symbol b) const { return Add(a, Mul(c, b)); }

  std::string Name() const;

  friend bool operator==(const Field& x, const Field& y) { return x.q() == y.q(); }
  friend bool operator!=(const Field& x, const Field& y) { return !(x == y); }

 private:
  struct Impl {
    std::uint32_t q = 0;
    std::uint32_t characteristic = 0;
    unsigned degree = 0;
    std::uint32_t polynomial = 0;
    std::vector<Symbol> exp;  // doubled length so log a + log b needs no reduction
    std::vector<std::uint32_t> log;
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// A symbol bound to its field. Mixing elements of different fields throws
// Error(kFieldMismatch).
class FieldElement {
 public:
  // Values >= q are rejected with Error(kDomainError).
  FieldElement(Field field, std::uint64_t value);

  const Field& field() const { return field_; }
  Symbol value() const { return value_; }

  FieldElement Inverse() const;
  FieldElement Pow(std::uint64_t exponent) const;
  // Pow with another element as exponent uses its canonical integer value.
  FieldElement Pow(const FieldElement& exponent) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  Field field_;
  Symbol value_;
};

// Seeded generator used for every random draw in a run.
using Rng = std::mt19937_64;

// Uniform symbol by rejection sampling on the raw 64-bit output, so the
// stream of draws is identical on every standard library.
Symbol UniformSymbol(Rng& rng, std::uint32_t q);

}  // namespace rsplfr

#endif  // RSPLFR_GF_H_
