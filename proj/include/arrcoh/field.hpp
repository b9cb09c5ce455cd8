// Copyright 2026 The Authors.
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

#ifndef ARRCOH_FIELD_HPP_
#define ARRCOH_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "arrcoh/rational.hpp"

namespace arrcoh {

// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<Integer>;

// The M-th cyclotomic polynomial, computed by exact division of x^M - 1 by
// the cyclotomic polynomials of the proper divisors of M.
IntPoly cyclotomic_polynomial(int modulus);

// Euler's totient.
int euler_phi(int n);

bool is_prime(std::uint64_t n);

enum class FieldKind { kRationals, kPrime, kCyclotomic };

// Names one of the supported coefficient fields: Q, F_p, or Q(zeta_M).
// Copies share the (immutable) reduction data.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals();
  // p must be prime and below 2^31.
  static FieldDescriptor prime(std::uint64_t p);
  static FieldDescriptor cyclotomic(int modulus);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return kind_ == FieldKind::kPrime ? param_ : 0; }
  // Prime p for kPrime, M for kCyclotomic, 0 for kRationals.
  std::uint64_t parameter() const { return param_; }
  // Dimension over the prime field: phi(M) for cyclotomic fields, else 1.
  std::size_t degree() const;
  // Phi_M with rational coefficients (cyclotomic fields only).
  const std::vector<Rational>& modulus_polynomial() const;
  bool is_finite() const { return kind_ == FieldKind::kPrime; }

  std::string to_string() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  FieldDescriptor(FieldKind kind, std::uint64_t param,
                  std::shared_ptr<const std::vector<Rational>> modulus)
      : kind_(kind), param_(param), modulus_(std::move(modulus)) {}

  FieldKind kind_;
  std::uint64_t param_;
  std::shared_ptr<const std::vector<Rational>> modulus_;
};

// An element of the field named by its descriptor, held in canonical form:
// rationals in lowest terms, residues in [0, p), cyclotomic residues as
// coefficient vectors of length exactly phi(M).
class FieldElem {
 public:
  using Payload = std::variant<Rational, std::uint64_t, std::vector<Rational>>;

  static FieldElem zero(const FieldDescriptor& field);
  static FieldElem one(const FieldDescriptor& field);
  static FieldElem from_integer(const FieldDescriptor& field, const Integer& value);
  // Throws FieldError in F_p when p divides the denominator.
  static FieldElem from_rational(const FieldDescriptor& field, const Rational& value);
  // The class of x in Q(zeta_M) = Q[x]/(Phi_M).
  static FieldElem generator(const FieldDescriptor& field);
  // Cyclotomic element from coefficients in the basis 1, x, ..., x^{d-1};
  // longer input is reduced modulo Phi_M.
  static FieldElem from_coefficients(const FieldDescriptor& field,
                                     std::vector<Rational> coefficients);

  const FieldDescriptor& field() const { return field_; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& other);
  FieldElem& operator-=(const FieldElem& other);
  FieldElem& operator*=(const FieldElem& other);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inverse();
  }

  // Throws FieldError on zero.
  FieldElem inverse() const;
  // Negative exponents invert first.
  FieldElem pow(std::int64_t exponent) const;

  // Coefficients in the power basis (length = field degree). For Q and F_p a
  // single entry.
  std::vector<Rational> coefficients() const;

  // Canonical text: "3/4", "5", or "[c0, c1, ...]".
  std::string to_string() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

 private:
  FieldElem(FieldDescriptor field, Payload payload)
      : field_(std::move(field)), payload_(std::move(payload)) {}

  void require_same_field(const FieldElem& other) const;

  FieldDescriptor field_;
  Payload payload_;
};

// zeta^exponent for a zeta of exact multiplicative order `order`.
// Cyclotomic fields take zeta = zeta_M^{M/order}; F_p takes the smallest
// positive integer of exact order `order`; Q supports orders 1 and 2.
FieldElem root_of_unity(const FieldDescriptor& field, std::int64_t order,
                        std::int64_t exponent);

// Smallest positive residue of exact multiplicative order `order` mod p.
std::uint64_t smallest_element_of_order(std::uint64_t p, std::uint64_t order);

}  // namespace arrcoh

#endif  // ARRCOH_FIELD_HPP_
