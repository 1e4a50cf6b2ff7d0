// Copyright 2026 The apolarkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/*
 * Exact scalar fields.
 *
 * Three fields are supported: the rationals (GMP), prime fields F_p with
 * p < 2^31, and quadratic extensions F_{p^2} = F_p[t]/(t^2 - r) where r is
 * the smallest quadratic non-residue mod p. A field is a small descriptor
 * object; its elements are plain values. Finite-field elements carry their
 * modulus so that mixing two fields in one expression throws FieldMismatch.
 */

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "apolarkit/error.hpp"

namespace apolarkit {

using Rational = mpq_class;

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

/// Deterministic Miller-Rabin, exact for all n < 2^32.
inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rationals

class RationalField {
 public:
  using Element = Rational;
  static constexpr bool is_finite = false;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_rational(const Rational& q) const { return q; }
  bool is_zero(const Element& e) const { return sgn(e) == 0; }
  Element inverse(const Element& e) const {
    if (is_zero(e)) throw PreconditionError("division by zero");
    return Element(1) / e;
  }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }
  std::string descriptor() const { return "q"; }

  /// Small random integer in [-bound, bound].
  Element random(std::mt19937_64& rng, std::int64_t bound = 12) const {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    return from_int(dist(rng));
  }

  /// Rational value of a field element when it has one (always, here).
  std::optional<Rational> as_rational(const Element& e) const { return e; }
  std::string format(const Element& e) const { return e.get_str(); }

  bool operator==(const RationalField&) const = default;
};

// ---------------------------------------------------------------------------
// Prime fields

struct Fp {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.value == b.value && a.modulus == b.modulus;
  }
};

namespace detail {
inline void check_same(const Fp& a, const Fp& b) {
  if (a.modulus != b.modulus) throw FieldMismatch("scalars from different prime fields");
}
}  // namespace detail

inline Fp operator+(const Fp& a, const Fp& b) {
  detail::check_same(a, b);
  std::uint64_t s = std::uint64_t{a.value} + b.value;
  if (s >= a.modulus) s -= a.modulus;
  return {static_cast<std::uint32_t>(s), a.modulus};
}
inline Fp operator-(const Fp& a) {
  return {a.value == 0 ? 0U : a.modulus - a.value, a.modulus};
}
inline Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
inline Fp operator*(const Fp& a, const Fp& b) {
  detail::check_same(a, b);
  return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % a.modulus), a.modulus};
}
inline Fp inverse(const Fp& a) {
  if (a.value == 0) throw PreconditionError("division by zero");
  return {static_cast<std::uint32_t>(detail::pow_mod(a.value, a.modulus - 2, a.modulus)), a.modulus};
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }
inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }
inline Fp& operator/=(Fp& a, const Fp& b) { return a = a / b; }

class PrimeField {
 public:
  using Element = Fp;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!detail::is_prime_u32(p)) {
      throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint32_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }

  Element zero() const { return {0, p_}; }
  Element one() const { return {1 % p_, p_}; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r), p_};
  }
  Element from_rational(const Rational& q) const {
    std::uint32_t den = detail::reduce_mpz(q.get_den(), p_);
    if (den == 0) {
      throw PreconditionError("denominator of " + q.get_str() + " is divisible by " +
                              std::to_string(p_));
    }
    return Element{detail::reduce_mpz(q.get_num(), p_), p_} / Element{den, p_};
  }
  bool is_zero(const Element& e) const { return e.value == 0; }
  Element inverse(const Element& e) const { return apolarkit::inverse(e); }

  /// Enumeration of the field: element_at(i) for 0 <= i < order().
  Element element_at(std::uint64_t index) const {
    return {static_cast<std::uint32_t>(index % p_), p_};
  }
  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return {dist(rng), p_};
  }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::string descriptor() const { return "fp:" + std::to_string(p_); }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t signed_value(const Element& e) const {
    std::int64_t v = e.value;
    return v > static_cast<std::int64_t>(p_ / 2) ? v - p_ : v;
  }
  std::optional<Rational> as_rational(const Element& e) const {
    return Rational(static_cast<long>(signed_value(e)));
  }
  std::string format(const Element& e) const { return std::to_string(signed_value(e)); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Quadratic extensions F_p[t]/(t^2 - r)

struct Fp2 {
  std::uint32_t re = 0;  // coefficient of 1
  std::uint32_t im = 0;  // coefficient of t
  std::uint32_t modulus = 0;
  std::uint32_t nonresidue = 0;

  friend bool operator==(const Fp2& a, const Fp2& b) {
    return a.re == b.re && a.im == b.im && a.modulus == b.modulus;
  }
};

namespace detail {
inline void check_same(const Fp2& a, const Fp2& b) {
  if (a.modulus != b.modulus) throw FieldMismatch("scalars from different extension fields");
}
inline std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t negm(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
}  // namespace detail

inline Fp2 operator+(const Fp2& a, const Fp2& b) {
  detail::check_same(a, b);
  const auto p = a.modulus;
  return {detail::addm(a.re, b.re, p), detail::addm(a.im, b.im, p), p, a.nonresidue};
}
inline Fp2 operator-(const Fp2& a) {
  const auto p = a.modulus;
  return {detail::negm(a.re, p), detail::negm(a.im, p), p, a.nonresidue};
}
inline Fp2 operator-(const Fp2& a, const Fp2& b) { return a + (-b); }
inline Fp2 operator*(const Fp2& a, const Fp2& b) {
  detail::check_same(a, b);
  const std::uint64_t p = a.modulus;
  std::uint64_t re = (std::uint64_t{a.re} * b.re +
                      std::uint64_t{a.im} * b.im % p * a.nonresidue) % p;
  std::uint64_t im = (std::uint64_t{a.re} * b.im + std::uint64_t{a.im} * b.re) % p;
  return {static_cast<std::uint32_t>(re), static_cast<std::uint32_t>(im), a.modulus,
          a.nonresidue};
}
inline Fp2 inverse(const Fp2& a) {
  const auto p = a.modulus;
  // (re + im t)^{-1} = (re - im t) / (re^2 - r im^2)
  std::uint32_t norm = detail::addm(detail::mulm(a.re, a.re, p),
                                    detail::negm(detail::mulm(detail::mulm(a.im, a.im, p),
                                                              a.nonresidue, p), p), p);
  if (norm == 0) throw PreconditionError("division by zero");
  auto ninv = static_cast<std::uint32_t>(detail::pow_mod(norm, p - 2, p));
  return {detail::mulm(a.re, ninv, p), detail::mulm(detail::negm(a.im, p), ninv, p), p,
          a.nonresidue};
}
inline Fp2 operator/(const Fp2& a, const Fp2& b) { return a * inverse(b); }
inline Fp2& operator+=(Fp2& a, const Fp2& b) { return a = a + b; }
inline Fp2& operator-=(Fp2& a, const Fp2& b) { return a = a - b; }
inline Fp2& operator*=(Fp2& a, const Fp2& b) { return a = a * b; }
inline Fp2& operator/=(Fp2& a, const Fp2& b) { return a = a / b; }

class PrimeSquareField {
 public:
  using Element = Fp2;
  static constexpr bool is_finite = true;

  explicit PrimeSquareField(std::uint32_t p) : p_(p) {
    if (!detail::is_prime_u32(p) || p == 2) {
      throw PreconditionError("GF(p^2) needs an odd prime, got " + std::to_string(p));
    }
    r_ = 2;
    while (detail::pow_mod(r_, (p - 1) / 2, p) != p - 1) ++r_;
  }

  std::uint32_t modulus() const { return p_; }
  std::uint32_t nonresidue() const { return r_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return std::uint64_t{p_} * p_; }
  PrimeField base_field() const { return PrimeField(p_); }

  Element zero() const { return {0, 0, p_, r_}; }
  Element one() const { return {1, 0, p_, r_}; }
  Element generator() const { return {0, 1, p_, r_}; }
  Element from_int(std::int64_t v) const { return embed(base_field().from_int(v)); }
  Element from_rational(const Rational& q) const {
    return embed(base_field().from_rational(q));
  }
  Element embed(const Fp& a) const {
    if (a.modulus != p_) throw FieldMismatch("embedding from a different prime field");
    return {a.value, 0, p_, r_};
  }
  bool in_base_field(const Element& e) const { return e.im == 0; }
  Fp to_base(const Element& e) const {
    if (e.im != 0) throw PreconditionError("element is not in the prime subfield");
    return {e.re, p_};
  }
  /// x -> x^p, which maps re + im t to re - im t.
  Element frobenius(const Element& e) const { return {e.re, detail::negm(e.im, p_), p_, r_}; }

  bool is_zero(const Element& e) const { return e.re == 0 && e.im == 0; }
  Element inverse(const Element& e) const { return apolarkit::inverse(e); }

  Element element_at(std::uint64_t index) const {
    return {static_cast<std::uint32_t>(index % p_), static_cast<std::uint32_t>(index / p_ % p_),
            p_, r_};
  }
  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    std::uint32_t re = dist(rng);
    return {re, dist(rng), p_, r_};
  }

  std::string name() const { return "GF(" + std::to_string(p_) + "^2)"; }
  std::string descriptor() const { return "fp2:" + std::to_string(p_); }

  std::int64_t signed_component(std::uint32_t v) const {
    return v > p_ / 2 ? static_cast<std::int64_t>(v) - p_ : v;
  }
  std::optional<Rational> as_rational(const Element& e) const {
    if (e.im != 0) return std::nullopt;
    return Rational(static_cast<long>(signed_component(e.re)));
  }
  /// "a" for prime-subfield elements, "(a+b*t)" otherwise.
  std::string format(const Element& e) const {
    if (e.im == 0) return std::to_string(signed_component(e.re));
    std::int64_t b = signed_component(e.im);
    std::string s = "(" + std::to_string(signed_component(e.re));
    s += b < 0 ? "-" : "+";
    std::int64_t mag = b < 0 ? -b : b;
    if (mag != 1) s += std::to_string(mag) + "*";
    return s + "t)";
  }

  bool operator==(const PrimeSquareField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
  std::uint32_t r_ = 0;
};

// ---------------------------------------------------------------------------
// Concepts

template <class F>
concept Field = requires(const F& f, const typename F::Element& a, std::int64_t n,
                         const Rational& q) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.from_rational(q) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.inverse(a) } -> std::same_as<typename F::Element>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { f.as_rational(a) } -> std::same_as<std::optional<Rational>>;
};

template <class F>
concept FiniteField = Field<F> && F::is_finite && requires(const F& f, std::uint64_t i) {
  { f.element_at(i) } -> std::same_as<typename F::Element>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
};

template <Field F>
using Element = typename F::Element;

/// Uniform random element for finite fields, small integer for QQ.
template <Field F>
Element<F> random_element(const F& field, std::mt19937_64& rng) {
  return field.random(rng);
}

/// Random nonzero element.
template <Field F>
Element<F> random_nonzero(const F& field, std::mt19937_64& rng) {
  for (;;) {
    Element<F> e = field.random(rng);
    if (!field.is_zero(e)) return e;
  }
}

/// Random odd prime in [lo, hi), drawn from `rng`.
inline std::uint32_t random_prime(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  std::uniform_int_distribution<std::uint32_t> dist(lo, hi - 1);
  for (;;) {
    std::uint32_t c = dist(rng) | 1U;
    if (c < hi && detail::is_prime_u32(c)) return c;
  }
}

}  // namespace apolarkit
