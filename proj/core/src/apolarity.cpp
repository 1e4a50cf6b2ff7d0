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

#include "apolarkit/apolarity.hpp"

#include <algorithm>
#include <string>

namespace apolarkit {

namespace {

/// prod_i m_i! / (m_i - a_i)! for a dividing m.
template <Field F>
Element<F> falling_factor(const F& field, const Exponent& a, const Exponent& m) {
  std::int64_t v = 1;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    for (std::uint8_t k = 0; k < a[i]; ++k) v *= m[i] - k;
  }
  return field.from_int(v);
}

Exponent subtract(const Exponent& m, const Exponent& a) {
  Exponent r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = static_cast<std::uint8_t>(m[i] - a[i]);
  return r;
}

template <Field F>
void check_same_space(const HomogeneousForm<F>& a, const HomogeneousForm<F>& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("apolarity: field mismatch");
  if (a.num_vars() != b.num_vars()) throw PreconditionError("apolarity: variable count mismatch");
}

}  // namespace

template <Field F>
PointSet<F>::PointSet(F field, std::size_t num_vars, std::vector<Point> points,
                      bool allow_duplicates)
    : field_(std::move(field)), num_vars_(num_vars), points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.size() != num_vars_) throw PreconditionError("point has the wrong number of coordinates");
    if (std::all_of(p.begin(), p.end(), [&](const auto& c) { return field_.is_zero(c); })) {
      throw PreconditionError("point " + std::to_string(i) + " is the zero vector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional<F>(field_, points_[j], p)) {
        if (!allow_duplicates) {
          throw PreconditionError("points " + std::to_string(j) + " and " + std::to_string(i) +
                                  " coincide");
        }
        reduced_ = false;
      }
    }
  }
}

template <Field F>
PointSet<F> PointSet<F>::random(const F& field, std::size_t num_vars, std::size_t count,
                                std::mt19937_64& rng) {
  std::vector<Point> pts;
  while (pts.size() < count) {
    Point p;
    for (std::size_t i = 0; i < num_vars; ++i) p.push_back(random_element(field, rng));
    bool ok = !std::all_of(p.begin(), p.end(), [&](const auto& c) { return field.is_zero(c); });
    for (const auto& q : pts) ok = ok && !proportional<F>(field, q, p);
    if (ok) pts.push_back(std::move(p));
  }
  return PointSet(field, num_vars, std::move(pts));
}

template <Field F>
bool proportional(const F& field, std::span<const Element<F>> a, std::span<const Element<F>> b) {
  if (a.size() != b.size()) return false;
  Matrix<F> m(field, 2, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(0, i) = a[i];
    m(1, i) = b[i];
  }
  return rank(m) <= 1;
}

template <Field F>
void require_differentiation_characteristic(const F& field, std::size_t degree) {
  const std::uint64_t ch = field.characteristic();
  if (ch != 0 && ch <= degree) {
    throw PreconditionError("apolarity by differentiation needs characteristic 0 or > " +
                            std::to_string(degree) + ", field is " + field.name());
  }
}

template <Field F>
HomogeneousForm<F> apolar_action(const HomogeneousForm<F>& op, const HomogeneousForm<F>& f) {
  check_same_space(op, f);
  if (op.degree() > f.degree()) {
    throw PreconditionError("apolar action: operator degree " + std::to_string(op.degree()) +
                            " exceeds form degree " + std::to_string(f.degree()));
  }
  const F& field = f.field();
  require_differentiation_characteristic(field, f.degree());
  const std::size_t n = f.num_vars();
  const MonomialBasis& ob = op.basis();
  const MonomialBasis& fb = f.basis();
  const MonomialBasis& rb = MonomialBasis::get(n, f.degree() - op.degree());
  std::vector<Element<F>> out(rb.size(), field.zero());
  for (std::size_t i = 0; i < ob.size(); ++i) {
    if (field.is_zero(op.coefficient(i))) continue;
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (field.is_zero(f.coefficient(j)) || !divides(ob[i], fb[j])) continue;
      out[rb.index_of(subtract(fb[j], ob[i]))] +=
          op.coefficient(i) * f.coefficient(j) * falling_factor(field, ob[i], fb[j]);
    }
  }
  return HomogeneousForm<F>(field, n, rb.degree(), std::move(out), f.alphabet());
}

template <Field F>
Matrix<F> catalecticant(const HomogeneousForm<F>& f, std::size_t k) {
  if (k > f.degree()) {
    throw PreconditionError("catalecticant: k = " + std::to_string(k) + " exceeds degree " +
                            std::to_string(f.degree()));
  }
  const F& field = f.field();
  require_differentiation_characteristic(field, f.degree());
  const std::size_t n = f.num_vars();
  const MonomialBasis& cols = MonomialBasis::get(n, k);
  const MonomialBasis& rows = MonomialBasis::get(n, f.degree() - k);
  Matrix<F> m(field, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Exponent sum = add_exponents(cols[c], rows[r]);
      const auto& coeff = f.coefficient(sum);
      if (field.is_zero(coeff)) continue;
      m(r, c) = coeff * falling_factor(field, cols[c], sum);
    }
  }
  return m;
}

template <Field F>
Subspace<F> apolar_ideal_component(const HomogeneousForm<F>& f, std::size_t k) {
  return Subspace<F>::kernel(AmbientSpace{f.num_vars(), k, 1, 'y'}, catalecticant(f, k));
}

template <Field F>
Subspace<F> partial_space(const HomogeneousForm<F>& f) {
  if (f.degree() == 0) throw PreconditionError("partial_space: constant form");
  return Subspace<F>::span(AmbientSpace{f.num_vars(), f.degree() - 1, 1, f.alphabet()},
                           catalecticant(f, 1).transpose());
}

template <Field F>
Subspace<F> q_f(const HomogeneousForm<F>& f) {
  return apolar_ideal_component(f, 2);
}

template <Field F>
std::vector<std::size_t> apolar_hilbert_function(const HomogeneousForm<F>& f) {
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k <= f.degree(); ++k) h.push_back(rank(catalecticant(f, k)));
  return h;
}

template <Field F>
Matrix<F> evaluation_matrix(const PointSet<F>& points, std::size_t k) {
  const F& field = points.field();
  const MonomialBasis& basis = MonomialBasis::get(points.num_vars(), k);
  Matrix<F> m(field, points.size(), basis.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      m(i, j) = evaluate_monomial<F>(field, basis[j], points[i]);
    }
  }
  return m;
}

template <Field F>
Subspace<F> ideal_of_points_component(const PointSet<F>& points, std::size_t k) {
  if (points.empty()) throw PreconditionError("ideal of points: empty point set");
  if (!points.reduced()) throw PreconditionError("ideal of points: duplicate points");
  return Subspace<F>::kernel(AmbientSpace{points.num_vars(), k, 1, 'y'},
                             evaluation_matrix(points, k));
}

template <Field F>
bool imposes_independent_conditions(const PointSet<F>& points, std::size_t degree) {
  return rank(evaluation_matrix(points, degree)) == points.size();
}

template <Field F>
bool is_apolar_pointset(const PointSet<F>& points, const HomogeneousForm<F>& f) {
  if (points.num_vars() != f.num_vars()) throw PreconditionError("point/form dimension mismatch");
  const Subspace<F> ideal = ideal_of_points_component(points, f.degree());
  const F& field = f.field();
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    HomogeneousForm<F> op(field, f.num_vars(), f.degree(), ideal.basis().row_vector(r), 'y');
    if (!apolar_action(op, f).is_zero()) return false;
  }
  return true;
}

template <Field F>
bool in_span_of_powers(const PointSet<F>& points, const HomogeneousForm<F>& f) {
  if (points.num_vars() != f.num_vars()) throw PreconditionError("point/form dimension mismatch");
  const F& field = f.field();
  const std::size_t cols = f.basis().size();
  Matrix<F> powers(field, points.size(), cols);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto l = HomogeneousForm<F>::linear(field, points[i], f.alphabet());
    auto lp = power(l, f.degree());
    for (std::size_t c = 0; c < cols; ++c) powers(i, c) = lp.coefficient(c);
  }
  Matrix<F> target(field, 1, cols, {f.coefficients().begin(), f.coefficients().end()});
  return rank(powers.vstack(target)) == rank(powers);
}

template <Field F>
bool is_apolar_variety(const std::vector<HomogeneousForm<F>>& generators,
                       const HomogeneousForm<F>& f) {
  const F& field = f.field();
  for (const auto& g : generators) {
    check_same_space(g, f);
    if (g.degree() > f.degree()) continue;
    for (std::size_t e = 0; e + g.degree() <= f.degree(); ++e) {
      const MonomialBasis& mons = MonomialBasis::get(f.num_vars(), e);
      for (std::size_t m = 0; m < mons.size(); ++m) {
        auto shifted = multiply(
            HomogeneousForm<F>::monomial(field, f.num_vars(), mons[m], field.one(), 'y'), g);
        if (!apolar_action(shifted, f).is_zero()) return false;
      }
    }
  }
  return true;
}

std::size_t min_partial_rank_scan(const HomogeneousForm<PrimeField>& f) {
  const PrimeField& field = f.field();
  const std::uint32_t p = field.modulus();
  if (p < 5 || p > 11) {
    throw PreconditionError("partial-rank scan supports 5 <= p <= 11, got p = " +
                            std::to_string(p));
  }
  if (f.degree() != 3) throw PreconditionError("partial-rank scan needs a cubic");
  const std::size_t n = f.num_vars();
  // third[i] is the Hessian of d_i f, a constant symmetric matrix.
  std::vector<Matrix<PrimeField>> third;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<PrimeField> h(field, n, n);
    auto di = partial_derivative(f, i);
    for (std::size_t j = 0; j < n; ++j) {
      auto dij = partial_derivative(di, j);
      for (std::size_t k = 0; k < n; ++k) h(j, k) = partial_derivative(dij, k).coefficient(0);
    }
    third.push_back(std::move(h));
  }
  std::size_t best = n;
  std::vector<Fp> u(n, field.zero());
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::fill(u.begin(), u.end(), field.zero());
      u[lead] = field.one();
      std::uint64_t c = code;
      for (std::size_t i = lead + 1; i < n; ++i, c /= p) u[i] = field.element_at(c % p);
      Matrix<PrimeField> h(field, n, n);
      for (std::size_t i = lead; i < n; ++i) {
        if (u[i].value == 0) continue;
        h = h + u[i] * third[i];
      }
      best = std::min(best, rank(h));
    }
  }
  return best;
}

template <Field F>
std::size_t singular_forms_dimension(const PointSet<F>& points, std::size_t degree) {
  if (degree == 0) throw PreconditionError("singular forms: degree must be positive");
  const F& field = points.field();
  const std::size_t n = points.num_vars();
  const MonomialBasis& basis = MonomialBasis::get(n, degree);
  Matrix<F> conditions(field, points.size() * n, basis.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t m = 0; m < basis.size(); ++m) {
        if (basis[m][v] == 0) continue;
        Exponent e = basis[m];
        const auto mult = field.from_int(e[v]);
        --e[v];
        conditions(i * n + v, m) = mult * evaluate_monomial<F>(field, e, points[i]);
      }
    }
  }
  return basis.size() - rank(conditions);
}

template <Field F>
bool exists_cubic_singular_along(const PointSet<F>& points) {
  return singular_forms_dimension(points, 3) > 0;
}

#define APOLARKIT_INSTANTIATE_APOLARITY(F)                                                       \
  template class PointSet<F>;                                                                    \
  template bool proportional<F>(const F&, std::span<const Element<F>>,                           \
                                std::span<const Element<F>>);                                    \
  template void require_differentiation_characteristic<F>(const F&, std::size_t);               \
  template HomogeneousForm<F> apolar_action<F>(const HomogeneousForm<F>&,                        \
                                               const HomogeneousForm<F>&);                       \
  template Matrix<F> catalecticant<F>(const HomogeneousForm<F>&, std::size_t);                   \
  template Subspace<F> apolar_ideal_component<F>(const HomogeneousForm<F>&, std::size_t);        \
  template Subspace<F> partial_space<F>(const HomogeneousForm<F>&);                              \
  template Subspace<F> q_f<F>(const HomogeneousForm<F>&);                                        \
  template std::vector<std::size_t> apolar_hilbert_function<F>(const HomogeneousForm<F>&);       \
  template Matrix<F> evaluation_matrix<F>(const PointSet<F>&, std::size_t);                      \
  template Subspace<F> ideal_of_points_component<F>(const PointSet<F>&, std::size_t);            \
  template bool imposes_independent_conditions<F>(const PointSet<F>&, std::size_t);              \
  template bool is_apolar_pointset<F>(const PointSet<F>&, const HomogeneousForm<F>&);            \
  template bool in_span_of_powers<F>(const PointSet<F>&, const HomogeneousForm<F>&);             \
  template bool is_apolar_variety<F>(const std::vector<HomogeneousForm<F>>&,                     \
                                     const HomogeneousForm<F>&);                                 \
  template std::size_t singular_forms_dimension<F>(const PointSet<F>&, std::size_t);             \
  template bool exists_cubic_singular_along<F>(const PointSet<F>&);

APOLARKIT_INSTANTIATE_APOLARITY(RationalField)
APOLARKIT_INSTANTIATE_APOLARITY(PrimeField)
APOLARKIT_INSTANTIATE_APOLARITY(PrimeSquareField)

}  // namespace apolarkit
