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
 * Named objects around cubic fourfolds apolar to Veronese surfaces.
 *
 * Alphabets: cubics in x; annihilators, minors and matrix entries in y;
 * plane coordinates and ternary sextics in z; the dual ternary ring in w.
 * V = S^2 W with x_0..x_5 <-> w0^2, w0w1, w0w2, w1^2, w1w2, w2^2, so the
 * Veronese point of a = (a0, a1, a2) is (a0^2, a0a1, a0a2, a1^2, a1a2, a2^2),
 * the entries of the symmetric matrix [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]].
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apolarkit/apolarity.hpp"
#include "apolarkit/form.hpp"
#include "apolarkit/resolutions.hpp"
#include "apolarkit/text.hpp"

namespace apolarkit {

namespace catalog {

/// Polynomial text of the fixed objects.
const std::vector<std::string>& veronese_minors();
const std::string& discriminant_cubic();
const std::vector<std::string>& plane_substitution();
/// The five cubics multiplying a, b, c, d, e in family_f.
const std::vector<std::string>& family_components();
const std::string& ir_cubic();
/// 2 x 4 matrix whose 2-minors cut out the quartic scroll, row-major.
const std::vector<std::string>& scroll_matrix();
/// 2 x 6 matrix of the point configuration, row-major.
const std::vector<std::string>& points_matrix();
/// V(y0y2 - y1^2, y3, y4, y5).
const std::vector<std::string>& conic_generators();
/// Reference degree-9 form over F_5 for the drop curve of M2 of
/// family_f(1,-1,1,-1,1) on the plane of plane_substitution().
const std::string& drop_curve_mod5();

BettiTable generic_cubic_table();
BettiTable points9_table();
BettiTable points10_table();
BettiTable elliptic_sextic_table();

struct Entry {
  std::string name;
  std::string kind;  // "form", "forms", "betti"
  std::vector<std::string> polynomials;
  BettiTable betti;
};

std::vector<Entry> entries();

}  // namespace catalog

/// Parses a list of catalog strings.
template <Field F>
std::vector<HomogeneousForm<F>> parse_forms(const std::vector<std::string>& texts, const F& field) {
  std::vector<HomogeneousForm<F>> out;
  for (const auto& t : texts) out.push_back(parse_form(t, field));
  return out;
}

/// 2-minors of a 2 x c matrix of forms given row-major, pairs (i < j) in
/// lexicographic order.
template <Field F>
std::vector<HomogeneousForm<F>> two_minors(const std::vector<HomogeneousForm<F>>& entries,
                                           std::size_t cols) {
  if (entries.size() != 2 * cols) throw PreconditionError("two_minors: expected a 2 x c matrix");
  std::vector<HomogeneousForm<F>> out;
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = i + 1; j < cols; ++j) {
      out.push_back(multiply(entries[i], entries[cols + j]) -
                    multiply(entries[j], entries[cols + i]));
    }
  }
  return out;
}

template <Field F>
std::vector<HomogeneousForm<F>> veronese_ideal_quadrics(const F& field) {
  return parse_forms(catalog::veronese_minors(), field);
}

template <Field F>
HomogeneousForm<F> discriminant_cubic(const F& field) {
  return parse_form(catalog::discriminant_cubic(), field);
}

template <Field F>
std::vector<Element<F>> veronese_point(const F& field, const Element<F>& a0, const Element<F>& a1,
                                       const Element<F>& a2) {
  (void)field;
  return {a0 * a0, a0 * a1, a0 * a2, a1 * a1, a1 * a2, a2 * a2};
}

/// The Veronese parametrization as quadrics in `alphabet` (no weights).
template <Field F>
std::vector<HomogeneousForm<F>> veronese_parametrization(const F& field, char alphabet = 'w') {
  std::vector<HomogeneousForm<F>> out;
  const MonomialBasis& quad = MonomialBasis::get(3, 2);
  for (std::size_t i = 0; i < quad.size(); ++i) {
    out.push_back(HomogeneousForm<F>::monomial(field, 3, quad[i], field.one(), alphabet));
  }
  return out;
}

/// m*(f): the cubic restricted to the Veronese surface, a ternary sextic
/// in z, via x -> (z0^2, 2z0z1, 2z0z2, z1^2, 2z1z2, z2^2).
template <Field F>
HomogeneousForm<F> m_star(const HomogeneousForm<F>& f) {
  if (f.num_vars() != 6 || f.degree() != 3) throw PreconditionError("m_star needs a cubic in six variables");
  const F& field = f.field();
  auto sub = veronese_parametrization(field, 'z');
  const Element<F> two = field.from_int(2);
  for (std::size_t i : {1, 2, 4}) sub[i] = two * sub[i];
  return substitute(f, sub);
}

/// Frozen normalization c: <s(g), D> = c * <g, m(D)> for
/// D in S^3 V*, with m the unweighted Veronese substitution into S^6 W*.
inline Rational s_map_normalization() { return Rational(1, 120); }

/// s(g) for a ternary sextic g in z; s(a^6) = (a^2)^3.
template <Field F>
HomogeneousForm<F> s_map(const HomogeneousForm<F>& g) {
  if (g.num_vars() != 3 || g.degree() != 6) throw PreconditionError("s_map needs a ternary sextic");
  const F& field = g.field();
  require_differentiation_characteristic(field, 6);
  const Element<F> c = field.from_rational(s_map_normalization());
  const auto param = veronese_parametrization(field, 'z');
  const MonomialBasis& cubics = MonomialBasis::get(6, 3);
  std::vector<Element<F>> coeffs;
  for (std::size_t a = 0; a < cubics.size(); ++a) {
    const auto dual = HomogeneousForm<F>::monomial(field, 6, cubics[a], field.one(), 'y');
    const auto image = substitute(dual, param);  // m(y^a), degree 6 in z
    const auto pairing = apolar_action(image, g);
    Element<F> factorial = field.one();
    for (std::size_t i = 0; i < 6; ++i) {
      for (int k = 2; k <= cubics[a][i]; ++k) factorial = factorial * field.from_int(k);
    }
    coeffs.push_back(c * pairing.coefficient(0) * field.inverse(factorial));
  }
  return HomogeneousForm<F>(field, 6, 3, std::move(coeffs), 'x');
}

template <Field F>
HomogeneousForm<F> family_f(const F& field, const Element<F>& a, const Element<F>& b,
                            const Element<F>& c, const Element<F>& d, const Element<F>& e) {
  const auto parts = parse_forms(catalog::family_components(), field);
  const Element<F> params[] = {a, b, c, d, e};
  HomogeneousForm<F> f(field, 6, 3, 'x');
  for (std::size_t i = 0; i < parts.size(); ++i) f = f + params[i] * parts[i];
  return f;
}

/// family_f(1, -1, 1, -1, 1).
template <Field F>
HomogeneousForm<F> reference_cubic(const F& field) {
  const Element<F> one = field.one();
  const Element<F> minus = -field.one();
  return family_f(field, one, minus, one, minus, one);
}

template <Field F>
std::vector<HomogeneousForm<F>> reference_plane_substitution(const F& field) {
  return parse_forms(catalog::plane_substitution(), field);
}

template <Field F>
HomogeneousForm<F> ir_cubic(const F& field) {
  return parse_form(catalog::ir_cubic(), field);
}

template <Field F>
std::vector<HomogeneousForm<F>> scroll_minors(const F& field) {
  return two_minors(parse_forms(catalog::scroll_matrix(), field), 4);
}

template <Field F>
struct ConicPoints {
  std::vector<HomogeneousForm<F>> point_minors;  // 2-minors of the 2 x 6 matrix
  std::vector<HomogeneousForm<F>> conic;
};

template <Field F>
ConicPoints<F> conic_points_config(const F& field) {
  return {two_minors(parse_forms(catalog::points_matrix(), field), 6),
          parse_forms(catalog::conic_generators(), field)};
}

template <Field F>
std::vector<HomogeneousForm<F>> plane_restriction_forms(const F& field, std::size_t a,
                                                        std::size_t b, std::size_t c) {
  // x_a, x_b, x_c free, the rest zero: the plane V(other three).
  std::vector<HomogeneousForm<F>> out;
  const std::size_t free_vars[] = {a, b, c};
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<Element<F>> lin(3, field.zero());
    for (std::size_t k = 0; k < 3; ++k) {
      if (free_vars[k] == i) lin[k] = field.one();
    }
    out.push_back(HomogeneousForm<F>::linear(field, std::move(lin), 'z'));
  }
  return out;
}

// ---------------------------------------------------------------------------

template <Field F>
struct PowerSum {
  std::vector<HomogeneousForm<F>> forms;  // linear, alphabet x
  std::vector<Element<F>> weights;        // nonzero
  HomogeneousForm<F> f;                   // sum weights_i forms_i^3
  PointSet<F> points;                     // the coefficient vectors
};

/// k random linear forms in six variables with nonzero weights and their
/// cube combination. With `coplanar`, forms 0..3 lie in a common
/// 3-dimensional space of linear forms.
template <Field F>
PowerSum<F> random_power_sum(const F& field, std::size_t k, std::uint64_t seed,
                             bool coplanar = false) {
  if (coplanar && k < 4) throw PreconditionError("coplanar power sum needs at least 4 forms");
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::vector<Element<F>>> vecs;
    std::vector<std::vector<Element<F>>> plane;
    if (coplanar) {
      for (int b = 0; b < 3; ++b) {
        std::vector<Element<F>> v;
        for (int i = 0; i < 6; ++i) v.push_back(random_element(field, rng));
        plane.push_back(std::move(v));
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Element<F>> v(6, field.zero());
      if (coplanar && j < 4) {
        for (const auto& basis : plane) {
          const Element<F> c = random_element(field, rng);
          for (int i = 0; i < 6; ++i) v[i] += c * basis[i];
        }
      } else {
        for (auto& x : v) x = random_element(field, rng);
      }
      vecs.push_back(std::move(v));
    }
    try {
      PointSet<F> points(field, 6, vecs);
      if (coplanar) {
        std::vector<std::vector<Element<F>>> first(vecs.begin(), vecs.begin() + 4);
        if (rank(Matrix<F>::from_rows(field, 6, first)) != 3) continue;
      }
      PowerSum<F> out{{}, {}, HomogeneousForm<F>(field, 6, 3, 'x'), points};
      for (const auto& v : vecs) {
        out.forms.push_back(HomogeneousForm<F>::linear(field, v, 'x'));
        out.weights.push_back(random_nonzero(field, rng));
        out.f = out.f + out.weights.back() * power(out.forms.back(), 3);
      }
      return out;
    } catch (const PreconditionError&) {
      // zero or repeated point: draw again
    }
  }
}

}  // namespace apolarkit
