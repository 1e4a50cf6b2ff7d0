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

// Dense univariate polynomials; coefficient i multiplies t^i.

#include <span>
#include <utility>
#include <vector>

#include "apolarkit/error.hpp"
#include "apolarkit/field.hpp"

namespace apolarkit {

template <Field F>
class Univariate {
 public:
  using Element = typename F::Element;

  explicit Univariate(F field) : field_(std::move(field)) {}
  Univariate(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Element>& coefficients() const { return c_; }
  const Element& lead() const { return c_.back(); }

  Element coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

  Univariate monic() const {
    if (is_zero()) return *this;
    const Element inv = field_.inverse(lead());
    std::vector<Element> out;
    for (const auto& a : c_) out.push_back(a * inv);
    return {field_, std::move(out)};
  }

  Univariate derivative() const {
    std::vector<Element> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(field_.from_int(static_cast<long>(i)) * c_[i]);
    return {field_, std::move(out)};
  }

  Element operator()(const Element& t) const {
    Element acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return Univariate(a.field_);
    std::vector<Element> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return {a.field_, std::move(out)};
  }

  /// Quotient and remainder.
  friend std::pair<Univariate, Univariate> divmod(const Univariate& a, const Univariate& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    const F& field = a.field_;
    std::vector<Element> rem = a.c_;
    if (a.degree() < b.degree()) return {Univariate(field), a};
    std::vector<Element> quo(a.c_.size() - b.c_.size() + 1, field.zero());
    const Element inv = field.inverse(b.lead());
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Element q = rem[k + b.c_.size() - 1] * inv;
      quo[k] = q;
      if (field.is_zero(q)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Univariate(field, std::move(quo)), Univariate(field, std::move(rem))};
  }

  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Element> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Univariate<F> gcd(Univariate<F> a, Univariate<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Squarefree part f / gcd(f, f'). Assumes the degree is below the characteristic.
template <Field F>
Univariate<F> squarefree_part(const Univariate<F>& f) {
  if (f.degree() <= 0) return f.monic();
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

/// The polynomial of degree < n through (xs[i], ys[i]); xs distinct.
template <Field F>
Univariate<F> lagrange_interpolate(const F& field, std::span<const Element<F>> xs,
                                   std::span<const Element<F>> ys) {
  const std::size_t n = xs.size();
  std::vector<Element<F>> out(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (field.is_zero(ys[i])) continue;
    // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
    std::vector<Element<F>> basis{field.one()};
    Element<F> denom = field.one();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Element<F>> next(basis.size() + 1, field.zero());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom = denom * (xs[i] - xs[j]);
    }
    const Element<F> scale = ys[i] * field.inverse(denom);
    for (std::size_t k = 0; k < n; ++k) out[k] += basis[k] * scale;
  }
  return Univariate<F>(field, std::move(out));
}

}  // namespace apolarkit
