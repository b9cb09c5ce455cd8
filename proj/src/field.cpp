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

#include "arrcoh/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic integer polynomial b; b must divide a.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  trim(a);
  assert(!b.empty() && b.back() == 1);
  if (a.size() < b.size()) return {};
  IntPoly q(a.size() - b.size() + 1);
  for (std::size_t i = a.size(); i >= b.size(); --i) {
    const Integer c = a[i - 1];
    const std::size_t shift = i - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw InternalError("cyclotomic division left a remainder");
  return q;
}

RatPoly multiply(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Quotient and remainder of a by b over Q (b nonzero).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i >= b.size(); --i) {
    const Rational c = a[i - 1] / lead;
    const std::size_t shift = i - b.size();
    q[shift] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

// Reduce modulo a monic polynomial and pad to its degree.
RatPoly reduce(RatPoly a, const RatPoly& modulus) {
  const std::size_t d = modulus.size() - 1;
  trim(a);
  for (std::size_t i = a.size(); i > d; --i) {
    const Rational c = a[i - 1];
    if (c == 0) continue;
    const std::size_t shift = i - 1 - d;
    for (std::size_t j = 0; j <= d; ++j) a[shift + j] -= c * modulus[j];
  }
  a.resize(d);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const Integer& z, std::uint64_t p) {
  Integer r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p) {
  std::uint64_t x = g % p;
  std::uint64_t k = 1;
  while (x != 1) {
    x = mulmod(x, g, p);
    ++k;
  }
  return k;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

IntPoly cyclotomic_polynomial(int modulus) {
  if (modulus < 1) throw FieldError("cyclotomic modulus must be >= 1");
  IntPoly p(static_cast<std::size_t>(modulus) + 1, Integer(0));
  p[0] = -1;
  p[static_cast<std::size_t>(modulus)] = 1;
  for (int d = 1; d < modulus; ++d) {
    if (modulus % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

FieldDescriptor FieldDescriptor::rationals() {
  return FieldDescriptor(FieldKind::kRationals, 0, nullptr);
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("F_p requires a prime, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 31)) throw FieldError("prime too large (limit 2^31)");
  return FieldDescriptor(FieldKind::kPrime, p, nullptr);
}

FieldDescriptor FieldDescriptor::cyclotomic(int modulus) {
  const IntPoly phi = cyclotomic_polynomial(modulus);
  auto poly = std::make_shared<std::vector<Rational>>();
  poly->reserve(phi.size());
  for (const Integer& c : phi) poly->emplace_back(c);
  return FieldDescriptor(FieldKind::kCyclotomic, static_cast<std::uint64_t>(modulus),
                         std::move(poly));
}

std::size_t FieldDescriptor::degree() const {
  return kind_ == FieldKind::kCyclotomic ? modulus_->size() - 1 : 1;
}

const std::vector<Rational>& FieldDescriptor::modulus_polynomial() const {
  if (kind_ != FieldKind::kCyclotomic) throw FieldError("not a cyclotomic field");
  return *modulus_;
}

std::string FieldDescriptor::to_string() const {
  switch (kind_) {
    case FieldKind::kRationals:
      return "Q";
    case FieldKind::kPrime:
      return "F_" + std::to_string(param_);
    case FieldKind::kCyclotomic:
      return "Q(zeta_" + std::to_string(param_) + ")";
  }
  return "?";
}

FieldElem FieldElem::zero(const FieldDescriptor& field) {
  return from_integer(field, 0);
}

FieldElem FieldElem::one(const FieldDescriptor& field) {
  return from_integer(field, 1);
}

FieldElem FieldElem::from_integer(const FieldDescriptor& field, const Integer& value) {
  switch (field.kind()) {
    case FieldKind::kRationals:
      return FieldElem(field, Rational(value));
    case FieldKind::kPrime:
      return FieldElem(field, residue(value, field.parameter()));
    case FieldKind::kCyclotomic: {
      RatPoly c(field.degree());
      c[0] = value;
      return FieldElem(field, std::move(c));
    }
  }
  throw FieldError("unknown field kind");
}

FieldElem FieldElem::from_rational(const FieldDescriptor& field, const Rational& value) {
  switch (field.kind()) {
    case FieldKind::kRationals:
      return FieldElem(field, value);
    case FieldKind::kPrime: {
      const std::uint64_t p = field.parameter();
      const std::uint64_t den = residue(value.get_den(), p);
      if (den == 0) throw FieldError("denominator divisible by " + std::to_string(p));
      const std::uint64_t num = residue(value.get_num(), p);
      return FieldElem(field, mulmod(num, powmod(den, p - 2, p), p));
    }
    case FieldKind::kCyclotomic: {
      RatPoly c(field.degree());
      c[0] = value;
      return FieldElem(field, std::move(c));
    }
  }
  throw FieldError("unknown field kind");
}

FieldElem FieldElem::generator(const FieldDescriptor& field) {
  if (field.kind() != FieldKind::kCyclotomic) throw FieldError("generator() needs Q(zeta_M)");
  return from_coefficients(field, {Rational(0), Rational(1)});
}

FieldElem FieldElem::from_coefficients(const FieldDescriptor& field,
                                       std::vector<Rational> coefficients) {
  if (field.kind() != FieldKind::kCyclotomic) {
    if (coefficients.size() > 1) throw FieldError("too many coefficients for " + field.to_string());
    return from_rational(field, coefficients.empty() ? Rational(0) : coefficients[0]);
  }
  return FieldElem(field, reduce(std::move(coefficients), field.modulus_polynomial()));
}

void FieldElem::require_same_field(const FieldElem& other) const {
  if (!(field_ == other.field_)) {
    throw FieldError("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

bool FieldElem::is_zero() const {
  switch (payload_.index()) {
    case 0:
      return std::get<0>(payload_) == 0;
    case 1:
      return std::get<1>(payload_) == 0;
    default: {
      const auto& c = std::get<2>(payload_);
      return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
    }
  }
}

bool FieldElem::is_one() const { return *this == one(field_); }

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  switch (out.payload_.index()) {
    case 0:
      std::get<0>(out.payload_) = -std::get<0>(out.payload_);
      break;
    case 1: {
      auto& r = std::get<1>(out.payload_);
      r = r == 0 ? 0 : field_.parameter() - r;
      break;
    }
    default:
      for (Rational& x : std::get<2>(out.payload_)) x = -x;
  }
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
  require_same_field(other);
  switch (payload_.index()) {
    case 0:
      std::get<0>(payload_) += std::get<0>(other.payload_);
      break;
    case 1: {
      auto& r = std::get<1>(payload_);
      r = (r + std::get<1>(other.payload_)) % field_.parameter();
      break;
    }
    default: {
      auto& c = std::get<2>(payload_);
      const auto& o = std::get<2>(other.payload_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += o[i];
    }
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) { return *this += -other; }

FieldElem& FieldElem::operator*=(const FieldElem& other) {
  require_same_field(other);
  switch (payload_.index()) {
    case 0:
      std::get<0>(payload_) *= std::get<0>(other.payload_);
      break;
    case 1: {
      auto& r = std::get<1>(payload_);
      r = mulmod(r, std::get<1>(other.payload_), field_.parameter());
      break;
    }
    default: {
      auto& c = std::get<2>(payload_);
      c = reduce(multiply(c, std::get<2>(other.payload_)), field_.modulus_polynomial());
    }
  }
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  switch (payload_.index()) {
    case 0:
      return FieldElem(field_, Rational(1) / std::get<0>(payload_));
    case 1: {
      const std::uint64_t p = field_.parameter();
      return FieldElem(field_, powmod(std::get<1>(payload_), p - 2, p));
    }
    default:
      break;
  }
  // Extended Euclid against Phi_M; Phi_M is irreducible over Q, so the gcd
  // with any nonzero residue is a nonzero constant.
  const RatPoly& phi = field_.modulus_polynomial();
  RatPoly r0 = phi;
  RatPoly r1 = std::get<2>(payload_);
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly qs = multiply(q, s1);
    RatPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw InternalError("cyclotomic gcd is not a unit");
  const Rational scale = Rational(1) / r0[0];
  for (Rational& c : s0) c *= scale;
  return FieldElem(field_, reduce(std::move(s0), phi));
}

FieldElem FieldElem::pow(std::int64_t exponent) const {
  FieldElem base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  FieldElem result = one(field_);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<Rational> FieldElem::coefficients() const {
  switch (payload_.index()) {
    case 0:
      return {std::get<0>(payload_)};
    case 1:
      return {Rational(static_cast<unsigned long>(std::get<1>(payload_)))};
    default:
      return std::get<2>(payload_);
  }
}

std::string FieldElem::to_string() const {
  switch (payload_.index()) {
    case 0:
      return std::get<0>(payload_).get_str();
    case 1:
      return std::to_string(std::get<1>(payload_));
    default: {
      std::ostringstream out;
      out << '[';
      const auto& c = std::get<2>(payload_);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ", ";
        out << c[i].get_str();
      }
      out << ']';
      return out.str();
    }
  }
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_ == b.field_ && a.payload_ == b.payload_;
}

std::uint64_t smallest_element_of_order(std::uint64_t p, std::uint64_t order) {
  if (order == 0 || (p - 1) % order != 0) {
    throw FieldError("order " + std::to_string(order) + " does not divide p-1 = " +
                     std::to_string(p - 1));
  }
  for (std::uint64_t g = 1; g < p; ++g) {
    if (powmod(g, order, p) == 1 && multiplicative_order(g, p) == order) return g;
  }
  throw InternalError("no element of the requested order");
}

FieldElem root_of_unity(const FieldDescriptor& field, std::int64_t order,
                        std::int64_t exponent) {
  if (order < 1) throw FieldError("root of unity order must be >= 1");
  const std::int64_t e = floor_mod(exponent, order);
  switch (field.kind()) {
    case FieldKind::kRationals:
      if (order > 2) throw FieldError("Q contains only the roots of unity of order 1 and 2");
      return FieldElem::from_integer(field, (order == 2 && e == 1) ? -1 : 1);
    case FieldKind::kPrime: {
      const std::uint64_t p = field.parameter();
      const std::uint64_t g = smallest_element_of_order(p, static_cast<std::uint64_t>(order));
      return FieldElem::from_integer(field, static_cast<unsigned long>(
                                                powmod(g, static_cast<std::uint64_t>(e), p)));
    }
    case FieldKind::kCyclotomic: {
      const auto m = static_cast<std::int64_t>(field.parameter());
      if (m % order != 0) {
        throw FieldError("order " + std::to_string(order) + " does not divide M = " +
                         std::to_string(m));
      }
      const std::int64_t power = (m / order) * e;
      std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
      c.back() = 1;
      return FieldElem::from_coefficients(field, std::move(c));
    }
  }
  throw FieldError("unknown field kind");
}

}  // namespace arrcoh
