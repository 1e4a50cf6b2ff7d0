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

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apolarkit/error.hpp"
#include "apolarkit/field.hpp"
#include "apolarkit/monomial.hpp"

namespace apolarkit {

/// Default variable count for an alphabet: x and y index the six
/// coordinates of the primal and dual spaces, z and w the plane.
inline std::size_t default_num_vars(char alphabet) {
  switch (alphabet) {
    case 'x':
    case 'y':
      return 6;
    case 'z':
    case 'w':
      return 3;
    default:
      throw PreconditionError(std::string("unknown alphabet '") + alphabet + "'");
  }
}

/// A homogeneous polynomial of fixed degree with dense coefficients indexed
/// by MonomialBasis(num_vars, degree). The alphabet only affects printing;
/// the zero form keeps its nominal degree.
template <Field F>
class HomogeneousForm {
 public:
  using Element = typename F::Element;

  HomogeneousForm(F field, std::size_t num_vars, std::size_t degree, char alphabet = 'x')
      : field_(std::move(field)),
        num_vars_(num_vars),
        degree_(degree),
        alphabet_(alphabet),
        coeffs_(MonomialBasis::get(num_vars, degree).size(), field_.zero()) {}

  HomogeneousForm(F field, std::size_t num_vars, std::size_t degree, std::vector<Element> coeffs,
                  char alphabet = 'x')
      : field_(std::move(field)),
        num_vars_(num_vars),
        degree_(degree),
        alphabet_(alphabet),
        coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != MonomialBasis::get(num_vars, degree).size()) {
      throw PreconditionError("coefficient vector has length " + std::to_string(coeffs_.size()) +
                              ", expected " + std::to_string(monomial_count(num_vars, degree)));
    }
  }

  static HomogeneousForm monomial(const F& field, std::size_t num_vars, const Exponent& e,
                                  Element coefficient, char alphabet = 'x') {
    HomogeneousForm f(field, num_vars, exponent_degree(e), alphabet);
    f.coeffs_[f.basis().index_of(e)] = std::move(coefficient);
    return f;
  }

  static HomogeneousForm variable(const F& field, std::size_t num_vars, std::size_t var,
                                  char alphabet = 'x') {
    if (var >= num_vars) throw PreconditionError("variable index out of range");
    return monomial(field, num_vars, unit_exponent(var), field.one(), alphabet);
  }

  /// Linear form sum c_i v_i.
  static HomogeneousForm linear(const F& field, std::vector<Element> coefficients,
                                char alphabet = 'x') {
    const std::size_t n = coefficients.size();
    return HomogeneousForm(field, n, 1, std::move(coefficients), alphabet);
  }

  static HomogeneousForm constant(const F& field, std::size_t num_vars, Element value,
                                  char alphabet = 'x') {
    return HomogeneousForm(field, num_vars, 0, {std::move(value)}, alphabet);
  }

  const F& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t degree() const { return degree_; }
  char alphabet() const { return alphabet_; }
  const MonomialBasis& basis() const { return MonomialBasis::get(num_vars_, degree_); }
  std::span<const Element> coefficients() const { return coeffs_; }
  const Element& coefficient(std::size_t index) const { return coeffs_.at(index); }
  const Element& coefficient(const Exponent& e) const { return coeffs_[basis().index_of(e)]; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!field_.is_zero(c)) return false;
    }
    return true;
  }

  HomogeneousForm with_alphabet(char alphabet) const {
    HomogeneousForm f = *this;
    f.alphabet_ = alphabet;
    return f;
  }

  /// Index of the first nonzero coefficient in graded-lex order.
  std::size_t leading_index() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!field_.is_zero(coeffs_[i])) return i;
    }
    throw PreconditionError("the zero form has no leading term");
  }

  /// Scaled so that the leading coefficient is 1.
  HomogeneousForm monic() const {
    return field_.inverse(coeffs_[leading_index()]) * (*this);
  }

  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
    a.check_compatible(b);
    HomogeneousForm r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
    a.check_compatible(b);
    HomogeneousForm r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }
  friend HomogeneousForm operator-(const HomogeneousForm& a) {
    HomogeneousForm r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend HomogeneousForm operator*(const Element& s, const HomogeneousForm& a) {
    HomogeneousForm r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  /// Equality of values; the alphabet is a printing attribute and ignored.
  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  void check_compatible(const HomogeneousForm& b) const {
    if (!(field_ == b.field_)) throw FieldMismatch("forms over different fields");
    if (num_vars_ != b.num_vars_ || degree_ != b.degree_) {
      throw PreconditionError("forms differ in variable count or degree");
    }
  }

  F field_;
  std::size_t num_vars_;
  std::size_t degree_;
  char alphabet_;
  std::vector<Element> coeffs_;
};

template <Field F>
using Form = HomogeneousForm<F>;

template <Field F>
HomogeneousForm<F> multiply(const HomogeneousForm<F>& a, const HomogeneousForm<F>& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("multiply: forms over different fields");
  if (a.num_vars() != b.num_vars()) throw PreconditionError("multiply: variable count mismatch");
  const F& field = a.field();
  HomogeneousForm<F> r(field, a.num_vars(), a.degree() + b.degree(), a.alphabet());
  std::vector<Element<F>> out(r.basis().size(), field.zero());
  const MonomialBasis& ba = a.basis();
  const MonomialBasis& bb = b.basis();
  const MonomialBasis& br = r.basis();
  for (std::size_t i = 0; i < ba.size(); ++i) {
    const auto& ca = a.coefficient(i);
    if (field.is_zero(ca)) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      const auto& cb = b.coefficient(j);
      if (field.is_zero(cb)) continue;
      out[br.index_of(add_exponents(ba[i], bb[j]))] += ca * cb;
    }
  }
  return HomogeneousForm<F>(field, a.num_vars(), r.degree(), std::move(out), a.alphabet());
}

template <Field F>
HomogeneousForm<F> power(const HomogeneousForm<F>& f, std::size_t k) {
  HomogeneousForm<F> r =
      HomogeneousForm<F>::constant(f.field(), f.num_vars(), f.field().one(), f.alphabet());
  for (std::size_t i = 0; i < k; ++i) r = multiply(r, f);
  return r;
}

/// Value of the monomial with exponent e at a point.
template <Field F>
Element<F> evaluate_monomial(const F& field, const Exponent& e,
                             std::span<const Element<F>> point) {
  Element<F> v = field.one();
  for (std::size_t i = 0; i < point.size(); ++i) {
    for (std::uint8_t k = 0; k < e[i]; ++k) v *= point[i];
  }
  return v;
}

template <Field F>
Element<F> evaluate(const HomogeneousForm<F>& f, std::span<const Element<F>> point) {
  if (point.size() != f.num_vars()) {
    throw PreconditionError("evaluate: point has " + std::to_string(point.size()) +
                            " coordinates, form has " + std::to_string(f.num_vars()) +
                            " variables");
  }
  const F& field = f.field();
  const MonomialBasis& basis = f.basis();
  Element<F> total = field.zero();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (field.is_zero(f.coefficient(i))) continue;
    total += f.coefficient(i) * evaluate_monomial(field, basis[i], point);
  }
  return total;
}

/// f(L_0, ..., L_{n-1}) for forms L_i of one common degree e in a common
/// target ring; the result has degree e * deg f.
template <Field F>
HomogeneousForm<F> substitute(const HomogeneousForm<F>& f,
                              std::span<const HomogeneousForm<F>> linear_forms) {
  if (linear_forms.size() != f.num_vars()) {
    throw PreconditionError("substitute: need one form per variable");
  }
  if (linear_forms.empty()) throw PreconditionError("substitute: empty substitution");
  const F& field = f.field();
  const std::size_t target_vars = linear_forms[0].num_vars();
  const char target_alphabet = linear_forms[0].alphabet();
  const std::size_t sub_degree = linear_forms[0].degree();
  for (const auto& l : linear_forms) {
    if (l.degree() != sub_degree) {
      throw PreconditionError("substitute: substituents have different degrees");
    }
    if (l.num_vars() != target_vars) {
      throw PreconditionError("substitute: substituents use different variable sets");
    }
    if (!(l.field() == field)) throw FieldMismatch("substitute: field mismatch");
  }
  // powers[i][k] = L_i^k
  std::vector<std::vector<HomogeneousForm<F>>> powers(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    powers[i].push_back(
        HomogeneousForm<F>::constant(field, target_vars, field.one(), target_alphabet));
    for (std::size_t k = 1; k <= f.degree(); ++k) {
      powers[i].push_back(multiply(powers[i].back(), linear_forms[i]));
    }
  }
  HomogeneousForm<F> result(field, target_vars, f.degree() * sub_degree, target_alphabet);
  const MonomialBasis& basis = f.basis();
  for (std::size_t m = 0; m < basis.size(); ++m) {
    if (field.is_zero(f.coefficient(m))) continue;
    HomogeneousForm<F> term =
        HomogeneousForm<F>::constant(field, target_vars, f.coefficient(m), target_alphabet);
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
      if (basis[m][i] > 0) term = multiply(term, powers[i][basis[m][i]]);
    }
    result = result + term;
  }
  return result;
}

template <Field F>
HomogeneousForm<F> substitute(const HomogeneousForm<F>& f,
                              const std::vector<HomogeneousForm<F>>& linear_forms) {
  return substitute(f, std::span<const HomogeneousForm<F>>(linear_forms));
}

template <Field F>
HomogeneousForm<F> partial_derivative(const HomogeneousForm<F>& f, std::size_t var) {
  if (var >= f.num_vars()) throw PreconditionError("derivative: variable out of range");
  if (f.degree() == 0) return HomogeneousForm<F>(f.field(), f.num_vars(), 0, f.alphabet());
  const F& field = f.field();
  HomogeneousForm<F> shape(field, f.num_vars(), f.degree() - 1, f.alphabet());
  std::vector<Element<F>> out(shape.basis().size(), field.zero());
  const MonomialBasis& basis = f.basis();
  for (std::size_t m = 0; m < basis.size(); ++m) {
    if (basis[m][var] == 0 || field.is_zero(f.coefficient(m))) continue;
    Exponent e = basis[m];
    const auto mult = field.from_int(e[var]);
    --e[var];
    out[shape.basis().index_of(e)] += mult * f.coefficient(m);
  }
  return HomogeneousForm<F>(field, f.num_vars(), f.degree() - 1, std::move(out), f.alphabet());
}

/// Coefficientwise image under a field map (reduction, embedding).
template <Field Target, Field Source, class Map>
HomogeneousForm<Target> map_coefficients(const HomogeneousForm<Source>& f, const Target& target,
                                         Map&& map) {
  std::vector<Element<Target>> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) out.push_back(map(c));
  return HomogeneousForm<Target>(target, f.num_vars(), f.degree(), std::move(out), f.alphabet());
}

/// Reduction of a rational form modulo p. Throws PreconditionError when a
/// denominator is divisible by p.
inline HomogeneousForm<PrimeField> reduce_mod_p(const HomogeneousForm<RationalField>& f,
                                                const PrimeField& fp) {
  return map_coefficients(f, fp, [&](const Rational& q) { return fp.from_rational(q); });
}

/// A rational form (typically a catalog constant) read into another field.
template <Field F>
HomogeneousForm<F> to_field(const HomogeneousForm<RationalField>& f, const F& field) {
  return map_coefficients(f, field, [&](const Rational& q) { return field.from_rational(q); });
}

inline HomogeneousForm<PrimeSquareField> embed(const HomogeneousForm<PrimeField>& f,
                                               const PrimeSquareField& ext) {
  return map_coefficients(f, ext, [&](const Fp& a) { return ext.embed(a); });
}

}  // namespace apolarkit
