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

#include "apolarkit/rank_loci.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "apolarkit/apolarity.hpp"
#include "apolarkit/parallel.hpp"

namespace apolarkit {

std::uint64_t projective_point_count(std::uint64_t q, std::size_t n) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

template <FiniteField F>
std::vector<Element<F>> projective_point(const F& field, std::size_t n, std::uint64_t index) {
  const std::uint64_t q = field.order();
  // Points whose leading 1 sits at position i: q^{n-1-i} of them, lead 0 first.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t block = 1;
    for (std::size_t k = lead + 1; k < n; ++k) block *= q;
    if (index < block) {
      std::vector<Element<F>> p(n, field.zero());
      p[lead] = field.one();
      for (std::size_t k = n; k-- > lead + 1;) {
        p[k] = field.element_at(index % q);
        index /= q;
      }
      return p;
    }
    index -= block;
  }
  throw PreconditionError("projective point index out of range");
}

template <Field F>
std::vector<Element<F>> normalize_point(const F& field, std::vector<Element<F>> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (field.is_zero(p[i])) continue;
    const Element<F> inv = field.inverse(p[i]);
    for (auto& v : p) v = v * inv;
    return p;
  }
  throw PreconditionError("zero vector is not a projective point");
}

template <Field F>
Element<F> determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const F& field = m.field();
  const std::size_t n = m.rows();
  Element<F> det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && field.is_zero(m(pivot, c))) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det = det * m(c, c);
    const Element<F> inv = field.inverse(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field.is_zero(m(r, c))) continue;
      const Element<F> factor = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

template <Field F>
std::vector<std::vector<Element<F>>> RankProfile<F>::drop_points() const {
  std::vector<std::vector<Element<F>>> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (ranks[i] <= threshold) out.push_back(points[i]);
  }
  return out;
}

template <FiniteField F>
RankProfile<F> scan_ranks(const LinearFormMatrix<F>& m, std::size_t threshold) {
  const F& field = m.field();
  const std::size_t n = m.num_vars();
  const std::uint64_t count = projective_point_count(field.order(), n);
  RankProfile<F> profile;
  profile.rows = m.rows();
  profile.cols = m.cols();
  profile.threshold = threshold;
  profile.field = field.descriptor();
  profile.points.resize(count);
  profile.ranks.resize(count);
  parallel_for(count, [&](std::size_t i) {
    profile.points[i] = projective_point(field, n, i);
    profile.ranks[i] = rank_at_point(m, std::span<const Element<F>>(profile.points[i]));
  });
  return profile;
}

// ---------------------------------------------------------------------------

namespace {

template <class Rng>
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (k == n) return all;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

template <FiniteField F>
LineDegree<F> line_minor_gcd(const LinearFormMatrix<F>& m, std::span<const Element<F>> p,
                             std::span<const Element<F>> q, std::size_t threshold,
                             std::uint64_t seed, const LineOptions& options) {
  const F& field = m.field();
  if (p.size() != m.num_vars() || q.size() != m.num_vars()) {
    throw PreconditionError("line points have the wrong dimension");
  }
  if (proportional(field, p, q)) throw PreconditionError("degenerate line: proportional points");
  const std::size_t k = threshold + 1;
  if (k > std::min(m.rows(), m.cols())) {
    throw PreconditionError("threshold leaves no minors of size threshold + 1");
  }
  if (field.order() < k + 1) {
    throw PreconditionError("field too small to interpolate minors of size " + std::to_string(k));
  }
  const Matrix<F> a0 = m.evaluate(p);
  const Matrix<F> a1 = m.evaluate(q);
  std::mt19937_64 rng(seed);

  bool generic = false;
  for (int trial = 0; trial < 3; ++trial) {
    const Element<F> t = field.random(rng);
    generic = generic || rank(a0 + t * a1) >= k;
  }
  if (!generic) {
    throw PreconditionError("line inside drop locus: rank <= " + std::to_string(threshold) +
                            " at three random parameters");
  }

  std::vector<Element<F>> ts;
  std::vector<Matrix<F>> at;
  for (std::size_t i = 0; i <= k; ++i) {
    ts.push_back(field.element_at(i));
    if (options.sampling == LineOptions::Sampling::row_subsets) at.push_back(a0 + ts.back() * a1);
  }

  std::optional<Univariate<F>> g;
  std::size_t inf_mult = k;
  std::size_t minors = 0;
  for (std::size_t round = 1; round <= options.max_rounds; ++round) {
    const auto previous = g;
    const std::size_t previous_inf = inf_mult;
    for (std::size_t s = 0; s < options.subsets_per_round; ++s) {
      std::vector<Element<F>> values;
      if (options.sampling == LineOptions::Sampling::row_subsets) {
        const auto rows = random_subset(m.rows(), k, rng);
        const auto cols = random_subset(m.cols(), k, rng);
        for (const auto& mat : at) values.push_back(determinant(mat.select(rows, cols)));
      } else {
        const Matrix<F> left = Matrix<F>::random(field, k, m.rows(), rng);
        const Matrix<F> right = Matrix<F>::random(field, m.cols(), k, rng);
        const Matrix<F> b0 = left * a0 * right;
        const Matrix<F> b1 = left * a1 * right;
        for (const auto& t : ts) values.push_back(determinant(b0 + t * b1));
      }
      Univariate<F> minor = lagrange_interpolate<F>(field, ts, values);
      ++minors;
      if (minor.is_zero()) continue;
      inf_mult = std::min(inf_mult, k - static_cast<std::size_t>(minor.degree()));
      g = g ? gcd(*g, minor) : minor.monic();
    }
    if (round >= options.min_rounds && g && previous && *g == *previous &&
        inf_mult == previous_inf) {
      const std::size_t affine = static_cast<std::size_t>(g->degree());
      LineDegree<F> out{affine + inf_mult, std::nullopt, inf_mult, *g, round, minors};
      if (field.characteristic() > out.full_degree) {
        out.squarefree_degree =
            static_cast<std::size_t>(squarefree_part(*g).degree()) + (inf_mult > 0 ? 1 : 0);
      }
      return out;
    }
  }
  throw ComputationError("minor gcd did not stabilize after " + std::to_string(options.max_rounds) +
                         " rounds");
}

template <FiniteField F>
LineDegree<F> drop_degree_on_line(const LinearFormMatrix<F>& m, std::span<const Element<F>> p,
                                  std::span<const Element<F>> q, std::size_t threshold,
                                  std::uint64_t seed, const LineOptions& options) {
  if (m.field().characteristic() <= 50) {
    throw PreconditionError("drop_degree_on_line needs p > 50, got " + m.field().descriptor());
  }
  return line_minor_gcd(m, p, q, threshold, seed, options);
}

// ---------------------------------------------------------------------------

namespace {

/// Coefficients of t^0..t^d in the substitution z = p + t q, per monomial.
template <Field F>
Matrix<F> line_restriction_matrix(const F& field, std::size_t degree,
                                  std::span<const Element<F>> p, std::span<const Element<F>> q) {
  const MonomialBasis& mons = MonomialBasis::get(p.size(), degree);
  Matrix<F> out(field, degree + 1, mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c) {
    Univariate<F> acc(field, {field.one()});
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Univariate<F> lin(field, {p[i], q[i]});
      for (int e = 0; e < mons[c][i]; ++e) acc = acc * lin;
    }
    for (std::size_t k = 0; k <= degree; ++k) out(k, c) = acc.coefficient(k);
  }
  return out;
}

}  // namespace

template <FiniteField F>
DropCurve<F> interpolate_drop_curve(const LinearFormMatrix<F>& m, std::size_t threshold,
                                    const InterpolationOptions& options) {
  const F& field = m.field();
  const std::size_t n = m.num_vars();
  if (n != 3) throw PreconditionError("drop curve interpolation needs a matrix on the plane");
  const std::size_t d = options.degree;
  const MonomialBasis& mons = MonomialBasis::get(n, d);

  RankProfile<F> profile = scan_ranks(m, threshold);
  std::vector<std::vector<Element<F>>> rows;
  for (const auto& pt : profile.drop_points()) {
    std::vector<Element<F>> row;
    for (std::size_t c = 0; c < mons.size(); ++c) {
      row.push_back(evaluate_monomial(field, mons[c], std::span<const Element<F>>(pt)));
    }
    rows.push_back(std::move(row));
  }
  const std::size_t point_conditions = rows.size();

  std::size_t used = 0;
  std::size_t skipped = 0;
  std::mt19937_64 rng(options.seed);
  const std::uint64_t count = projective_point_count(field.order(), n);
  std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
  const std::size_t budget = 4 * options.line_conditions + 8;
  for (std::size_t attempt = 0; used < options.line_conditions && attempt < budget; ++attempt) {
    const auto p = projective_point(field, n, pick(rng));
    const auto q = projective_point(field, n, pick(rng));
    if (proportional(field, std::span<const Element<F>>(p), std::span<const Element<F>>(q))) {
      ++skipped;
      continue;
    }
    std::optional<LineDegree<F>> line;
    try {
      line = line_minor_gcd(m, std::span<const Element<F>>(p), std::span<const Element<F>>(q),
                            threshold, rng());
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    if (line->full_degree != d) {
      ++skipped;
      continue;
    }
    // F(p + t q) must be a multiple of s^inf * g: coefficient vector
    // proportional to g shifted into degrees 0..d - inf.
    const Matrix<F> restrict = line_restriction_matrix(field, d, std::span<const Element<F>>(p),
                                                       std::span<const Element<F>>(q));
    const std::size_t lead = static_cast<std::size_t>(line->gcd.degree());
    for (std::size_t k = 0; k <= d; ++k) {
      if (k == lead) continue;
      const Element<F> gk = line->gcd.coefficient(k);
      std::vector<Element<F>> row(mons.size(), field.zero());
      for (std::size_t c = 0; c < mons.size(); ++c) {
        // g_lead * c_k - g_k * c_lead, with g monic
        row[c] = restrict(k, c) - gk * restrict(lead, c);
      }
      rows.push_back(std::move(row));
    }
    ++used;
  }

  const Matrix<F> system = Matrix<F>::from_rows(field, mons.size(), rows);
  const Matrix<F> kernel = kernel_basis(system);
  if (kernel.rows() != 1) {
    throw ComputationError(
        "drop curve system has corank " + std::to_string(kernel.rows()) + " (" +
        std::to_string(point_conditions) + " drop points, " + std::to_string(used) +
        " line conditions); " +
        (kernel.rows() == 0 ? "no curve of degree " + std::to_string(d)
                            : std::string("undersampled, enlarge the field or add lines")));
  }
  HomogeneousForm<F> form(field, n, d, kernel.row_vector(0), 'z');
  return {form.monic(), std::move(profile), point_conditions, used, skipped};
}

HomogeneousForm<PrimeField> descend_to_prime_field(const HomogeneousForm<PrimeSquareField>& f) {
  const auto monic = f.monic();
  const PrimeSquareField& ext = f.field();
  PrimeField base = ext.base_field();
  std::vector<Fp> coeffs;
  for (const auto& c : monic.coefficients()) {
    if (!ext.in_base_field(c)) {
      throw ComputationError("form is not defined over " + base.name() + " after normalization");
    }
    coeffs.push_back(ext.to_base(c));
  }
  return HomogeneousForm<PrimeField>(base, f.num_vars(), f.degree(), std::move(coeffs),
                                     f.alphabet());
}

// ---------------------------------------------------------------------------

template <FiniteField F>
std::vector<std::vector<Element<F>>> singular_points_plane_curve(const HomogeneousForm<F>& f) {
  if (f.num_vars() != 3) throw PreconditionError("plane curve must have three variables");
  if (f.degree() == 0) throw PreconditionError("constant form has no curve");
  const F& field = f.field();
  std::vector<HomogeneousForm<F>> grad;
  for (std::size_t i = 0; i < 3; ++i) grad.push_back(partial_derivative(f, i));
  const std::uint64_t count = projective_point_count(field.order(), 3);
  std::vector<char> singular(count, 0);
  parallel_for(count, [&](std::size_t i) {
    const auto p = projective_point(field, 3, i);
    const std::span<const Element<F>> s(p);
    if (!field.is_zero(evaluate(f, s))) return;
    for (const auto& g : grad) {
      if (!field.is_zero(evaluate(g, s))) return;
    }
    singular[i] = 1;
  });
  std::vector<std::vector<Element<F>>> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (singular[i]) out.push_back(projective_point(field, 3, i));
  }
  return out;
}

std::string to_string(Singularity s) {
  switch (s) {
    case Singularity::smooth:
      return "smooth";
    case Singularity::node:
      return "node";
    case Singularity::worse:
      return "worse";
  }
  return "unknown";
}

template <Field F>
Singularity classify_singularity(const HomogeneousForm<F>& f, std::span<const Element<F>> point) {
  if (f.num_vars() != 3) throw PreconditionError("plane curve must have three variables");
  const F& field = f.field();
  if (!field.is_zero(evaluate(f, point))) throw PreconditionError("point is not on the curve");
  std::size_t chart = 0;
  while (chart < 3 && field.is_zero(point[chart])) ++chart;
  if (chart == 3) throw PreconditionError("zero vector is not a projective point");
  std::size_t a = (chart + 1) % 3;
  std::size_t b = (chart + 2) % 3;
  if (a > b) std::swap(a, b);
  // z = w * point + u * e_a + v * e_b, local coordinates (u, v) at w = 1.
  std::vector<HomogeneousForm<F>> sub;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Element<F>> lin{point[i], field.zero(), field.zero()};
    if (i == a) lin[1] = field.one();
    if (i == b) lin[2] = field.one();
    sub.push_back(HomogeneousForm<F>::linear(field, std::move(lin), 'w'));
  }
  const HomogeneousForm<F> local = substitute(f, sub);
  const std::uint8_t d = static_cast<std::uint8_t>(f.degree());
  auto coeff = [&](std::uint8_t eu, std::uint8_t ev) {
    Exponent e{};
    e[0] = static_cast<std::uint8_t>(d - eu - ev);
    e[1] = eu;
    e[2] = ev;
    return local.coefficient(e);
  };
  if (d >= 1 && (!field.is_zero(coeff(1, 0)) || !field.is_zero(coeff(0, 1)))) {
    return Singularity::smooth;
  }
  if (d < 2) return Singularity::worse;
  const Element<F> A = coeff(2, 0);
  const Element<F> B = coeff(1, 1);
  const Element<F> C = coeff(0, 2);
  if (field.characteristic() == 2) return field.is_zero(B) ? Singularity::worse : Singularity::node;
  const Element<F> disc = B * B - field.from_int(4) * A * C;
  return field.is_zero(disc) ? Singularity::worse : Singularity::node;
}

#define APOLARKIT_INSTANTIATE_RANK_ANY(F)                                                       \
  template std::vector<Element<F>> normalize_point<F>(const F&, std::vector<Element<F>>);       \
  template Element<F> determinant<F>(Matrix<F>);                                                \
  template struct RankProfile<F>;                                                               \
  template Singularity classify_singularity<F>(const HomogeneousForm<F>&,                       \
                                               std::span<const Element<F>>);

#define APOLARKIT_INSTANTIATE_RANK_FINITE(F)                                                    \
  template std::vector<Element<F>> projective_point<F>(const F&, std::size_t, std::uint64_t);   \
  template RankProfile<F> scan_ranks<F>(const LinearFormMatrix<F>&, std::size_t);               \
  template LineDegree<F> line_minor_gcd<F>(const LinearFormMatrix<F>&,                          \
                                           std::span<const Element<F>>,                         \
                                           std::span<const Element<F>>, std::size_t,            \
                                           std::uint64_t, const LineOptions&);                  \
  template LineDegree<F> drop_degree_on_line<F>(const LinearFormMatrix<F>&,                     \
                                                std::span<const Element<F>>,                    \
                                                std::span<const Element<F>>, std::size_t,       \
                                                std::uint64_t, const LineOptions&);             \
  template DropCurve<F> interpolate_drop_curve<F>(const LinearFormMatrix<F>&, std::size_t,      \
                                                  const InterpolationOptions&);                 \
  template std::vector<std::vector<Element<F>>> singular_points_plane_curve<F>(                 \
      const HomogeneousForm<F>&);

APOLARKIT_INSTANTIATE_RANK_ANY(RationalField)
APOLARKIT_INSTANTIATE_RANK_ANY(PrimeField)
APOLARKIT_INSTANTIATE_RANK_ANY(PrimeSquareField)
APOLARKIT_INSTANTIATE_RANK_FINITE(PrimeField)
APOLARKIT_INSTANTIATE_RANK_FINITE(PrimeSquareField)

}  // namespace apolarkit
