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
 * Rank-drop loci of matrices of linear forms over finite fields.
 *
 * Degrees along a line come from the gcd of random maximal-size minors,
 * each recovered as a univariate polynomial by evaluation and Lagrange
 * interpolation. Plane curves are recovered by exhaustive rank sampling
 * of P^2(F_q), optionally strengthened with the line gcds as extra linear
 * conditions when F_q has too few points on the curve.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apolarkit/form.hpp"
#include "apolarkit/resolutions.hpp"
#include "apolarkit/univariate.hpp"

namespace apolarkit {

/// Number of points of P^{n-1} over a field with q elements.
std::uint64_t projective_point_count(std::uint64_t q, std::size_t n);

/// The index-th point of P^{n-1}(F), normalized so the first nonzero
/// coordinate is 1. Indices run over [0, projective_point_count).
template <FiniteField F>
std::vector<Element<F>> projective_point(const F& field, std::size_t n, std::uint64_t index);

/// Normalizes a nonzero vector so its first nonzero entry is 1.
template <Field F>
std::vector<Element<F>> normalize_point(const F& field, std::vector<Element<F>> p);

template <Field F>
Element<F> determinant(Matrix<F> m);

template <Field F>
struct RankProfile {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t threshold = 0;
  std::string field;
  std::vector<std::vector<Element<F>>> points;
  std::vector<std::size_t> ranks;

  /// Points with rank <= threshold.
  std::vector<std::vector<Element<F>>> drop_points() const;
};

/// Ranks at every point of P^{n-1}(F).
template <FiniteField F>
RankProfile<F> scan_ranks(const LinearFormMatrix<F>& m, std::size_t threshold);

// ---------------------------------------------------------------------------

template <Field F>
struct LineDegree {
  std::size_t full_degree;                      // affine gcd degree + multiplicity at infinity
  std::optional<std::size_t> squarefree_degree;  // only when char > full degree
  std::size_t infinity_multiplicity;
  Univariate<F> gcd;  // monic, in the parameter t of p + t q
  std::size_t rounds;
  std::size_t minors;
};

struct LineOptions {
  enum class Sampling {
    projections,  // det(R M C) for random R, C: a random combination of all minors
    row_subsets,  // literal minors on random row and column subsets
  };
  Sampling sampling = Sampling::projections;
  std::size_t subsets_per_round = 8;
  std::size_t min_rounds = 2;
  std::size_t max_rounds = 8;
};

/// Gcd of random (t+1)-minors of M restricted to the line p + t q. Row
/// subsets can all vanish where M keeps full rank through a few essential
/// rows, so the default samples random compressions instead.
/// Needs |F| > t + 1 evaluation points. Throws PreconditionError for a
/// degenerate line or one inside the locus, ComputationError when the gcd
/// does not stabilize.
template <FiniteField F>
LineDegree<F> line_minor_gcd(const LinearFormMatrix<F>& m, std::span<const Element<F>> p,
                             std::span<const Element<F>> q, std::size_t threshold,
                             std::uint64_t seed, const LineOptions& options = {});

/// Degree of the locus {rank <= threshold} along a line; requires p > 50.
template <FiniteField F>
LineDegree<F> drop_degree_on_line(const LinearFormMatrix<F>& m, std::span<const Element<F>> p,
                                  std::span<const Element<F>> q, std::size_t threshold,
                                  std::uint64_t seed, const LineOptions& options = {});

// ---------------------------------------------------------------------------

struct InterpolationOptions {
  std::size_t degree = 9;
  /// Lines through random points whose minor gcd (of full degree) is
  /// imposed on the restriction of the unknown form.
  std::size_t line_conditions = 0;
  std::uint64_t seed = 0;
};

template <Field F>
struct DropCurve {
  HomogeneousForm<F> form;  // monic
  RankProfile<F> profile;
  std::size_t point_conditions;
  std::size_t lines_used;
  std::size_t lines_skipped;
};

/// Defining form of the drop curve of a matrix in three variables. Throws
/// ComputationError unless the coefficient system has corank exactly 1.
template <FiniteField F>
DropCurve<F> interpolate_drop_curve(const LinearFormMatrix<F>& m, std::size_t threshold,
                                    const InterpolationOptions& options = {});

/// Scales to monic and returns the form over F_p; throws ComputationError
/// if some coefficient is outside the prime field.
HomogeneousForm<PrimeField> descend_to_prime_field(const HomogeneousForm<PrimeSquareField>& f);

/// Monic scaling; forms are compared up to scale through this.
template <Field F>
HomogeneousForm<F> normalize_leading(const HomogeneousForm<F>& f) {
  return f.monic();
}

// ---------------------------------------------------------------------------

/// Common zeros of F and its three partials over the whole of P^2(F).
template <FiniteField F>
std::vector<std::vector<Element<F>>> singular_points_plane_curve(const HomogeneousForm<F>& f);

enum class Singularity { smooth, node, worse };

std::string to_string(Singularity s);

/// Local type of a point on a plane curve: smooth if the linear term is
/// nonzero, node if the quadratic term is a nondegenerate binary form.
/// Throws PreconditionError if the point is not on the curve.
template <Field F>
Singularity classify_singularity(const HomogeneousForm<F>& f, std::span<const Element<F>> point);

}  // namespace apolarkit
