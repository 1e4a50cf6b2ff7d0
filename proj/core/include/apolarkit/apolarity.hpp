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
 * Apolarity.
 *
 * Forms f live in the primal ring (alphabet x); operators D live in the
 * dual ring (alphabet y) and act by y_i -> d/dx_i. Because the action is
 * honest differentiation, every operation here requires characteristic 0
 * or characteristic larger than the degree of the form acted upon.
 *
 * Points of P(V) carry coordinates in which dual forms are evaluated:
 * a point p corresponds to the linear form l_p = sum p_i x_i, and
 * D o l_p^d = d!/(d-k)! D(p) l_p^{d-k}.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "apolarkit/form.hpp"
#include "apolarkit/matrix.hpp"

namespace apolarkit {

/// Finite set of projective points with exact coordinates.
template <Field F>
class PointSet {
 public:
  using Point = std::vector<Element<F>>;

  /// Rejects zero vectors; rejects points equal up to scale unless
  /// `allow_duplicates` is set.
  PointSet(F field, std::size_t num_vars, std::vector<Point> points,
           bool allow_duplicates = false);

  const F& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  bool reduced() const { return reduced_; }

  /// `count` points with uniformly random coordinates (small integers over QQ).
  static PointSet random(const F& field, std::size_t num_vars, std::size_t count,
                         std::mt19937_64& rng);

 private:
  F field_;
  std::size_t num_vars_;
  std::vector<Point> points_;
  bool reduced_ = true;
};

/// True when a and b are nonzero multiples of each other.
template <Field F>
bool proportional(const F& field, std::span<const Element<F>> a, std::span<const Element<F>> b);

/// Requires characteristic 0 or characteristic > degree; throws otherwise.
template <Field F>
void require_differentiation_characteristic(const F& field, std::size_t degree);

/// D o f: D acts as the constant-coefficient operator y_i -> d/dx_i.
template <Field F>
HomogeneousForm<F> apolar_action(const HomogeneousForm<F>& op, const HomogeneousForm<F>& f);

/// Matrix of S^k V* -> S^{d-k} V, D -> D o f. Columns are indexed by the
/// degree-k dual monomials, rows by the degree d-k primal monomials.
template <Field F>
Matrix<F> catalecticant(const HomogeneousForm<F>& f, std::size_t k);

/// Degree-k piece I_f(k) of the apolar ideal, in dual coordinates.
template <Field F>
Subspace<F> apolar_ideal_component(const HomogeneousForm<F>& f, std::size_t k);

/// P(f): span of the first partial derivatives of f, inside S^{d-1} V.
template <Field F>
Subspace<F> partial_space(const HomogeneousForm<F>& f);

/// Q_f = I_f(2).
template <Field F>
Subspace<F> q_f(const HomogeneousForm<F>& f);

/// Ranks of catalecticant(f, k) for k = 0..deg f (the Hilbert function of
/// the apolar algebra).
template <Field F>
std::vector<std::size_t> apolar_hilbert_function(const HomogeneousForm<F>& f);

/// Rows: points; columns: degree-k monomials evaluated at them.
template <Field F>
Matrix<F> evaluation_matrix(const PointSet<F>& points, std::size_t k);

/// I_Z(k): degree-k dual forms vanishing on every point.
template <Field F>
Subspace<F> ideal_of_points_component(const PointSet<F>& points, std::size_t k);

template <Field F>
bool imposes_independent_conditions(const PointSet<F>& points, std::size_t degree);

/// Apolarity of the point set: every element of I_Z(d) annihilates f.
template <Field F>
bool is_apolar_pointset(const PointSet<F>& points, const HomogeneousForm<F>& f);

/// Independent route: f lies in the span of the powers l_p^d.
template <Field F>
bool in_span_of_powers(const PointSet<F>& points, const HomogeneousForm<F>& f);

/// Every generator, and every product of a generator with a dual monomial
/// up to degree 3, annihilates the cubic f.
template <Field F>
bool is_apolar_variety(const std::vector<HomogeneousForm<F>>& generators,
                       const HomogeneousForm<F>& f);

/// Minimum rank of the quadric d_u f over all u in P^{n-1}(F_p).
/// Requires 5 <= p <= 11 so that the exhaustive scan stays small.
std::size_t min_partial_rank_scan(const HomogeneousForm<PrimeField>& f);

/// Dimension of the space of degree-d dual forms singular at every point.
template <Field F>
std::size_t singular_forms_dimension(const PointSet<F>& points, std::size_t degree = 3);

/// Whether some nonzero cubic is singular along all the points.
template <Field F>
bool exists_cubic_singular_along(const PointSet<F>& points);

}  // namespace apolarkit
