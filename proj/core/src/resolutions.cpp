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

#include "apolarkit/resolutions.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "apolarkit/parallel.hpp"

namespace apolarkit {

// ---------------------------------------------------------------------------
// BettiTable

BettiTable BettiTable::from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  BettiTable t;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      t.set(static_cast<int>(i), static_cast<int>(i + r), rows[r][i]);
    }
  }
  return t;
}

std::uint64_t BettiTable::get(int i, int j) const {
  auto it = values_.find({i, j});
  return it == values_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::uint64_t value) {
  if (value == 0) {
    values_.erase({i, j});
  } else {
    values_[{i, j}] = value;
  }
}

std::vector<BettiTable::Entry> BettiTable::entries() const {
  std::vector<Entry> out;
  for (const auto& [key, v] : values_) out.push_back({key.first, key.second, v});
  return out;
}

int BettiTable::max_column() const {
  int m = 0;
  for (const auto& [key, v] : values_) m = std::max(m, key.first);
  return m;
}

int BettiTable::max_row() const {
  int m = 0;
  for (const auto& [key, v] : values_) m = std::max(m, key.second - key.first);
  return m;
}

std::string BettiTable::render() const {
  const int cols = max_column() + 1;
  const int rows = max_row() + 1;
  std::size_t width = 1;
  for (const auto& [key, v] : values_) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < cols; ++i) {
      const std::uint64_t v = get(i, i + r);
      std::string cell = v == 0 ? "-" : std::to_string(v);
      if (i > 0) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

BettiTable generic_cubic_fourfold_betti() {
  return BettiTable::from_rows({{1},
                                {0, 15, 35, 21},
                                {0, 0, 0, 21, 35, 15},
                                {0, 0, 0, 0, 0, 0, 1}});
}

// ---------------------------------------------------------------------------
// GradedModule

template <Field F>
GradedModule<F> GradedModule<F>::from_maps(const F& field, std::size_t num_vars,
                                           const std::vector<Matrix<F>>& maps,
                                           bool zero_above_top) {
  if (maps.empty()) throw PreconditionError("graded module needs at least degree 0");
  GradedModule m(field, num_vars);
  m.zero_above_top_ = zero_above_top;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].cols() != monomial_count(num_vars, k)) {
      throw PreconditionError("map in degree " + std::to_string(k) + " has the wrong width");
    }
    Rref<F> red = rref(maps[k]);
    m.standard_.push_back(red.pivots);
    m.normal_forms_.push_back(std::move(red.reduced));
  }
  return m;
}

template <Field F>
GradedModule<F> GradedModule<F>::from_ideal(const F& field, std::size_t num_vars,
                                            const std::vector<Subspace<F>>& pieces,
                                            bool zero_above_top) {
  if (pieces.empty()) throw PreconditionError("graded module needs at least degree 0");
  GradedModule m(field, num_vars);
  m.zero_above_top_ = zero_above_top;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::size_t width = monomial_count(num_vars, k);
    if (pieces[k].ambient().dimension() != width) {
      throw PreconditionError("ideal piece " + std::to_string(k) + " has the wrong ambient");
    }
    Rref<F> red = rref(pieces[k].basis());
    std::vector<bool> is_pivot(width, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<std::size_t> standard;
    for (std::size_t c = 0; c < width; ++c) {
      if (!is_pivot[c]) standard.push_back(c);
    }
    Matrix<F> nf(field, standard.size(), width);
    for (std::size_t t = 0; t < standard.size(); ++t) nf(t, standard[t]) = field.one();
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      for (std::size_t t = 0; t < standard.size(); ++t) {
        nf(t, red.pivots[r]) = -red.reduced(r, standard[t]);
      }
    }
    m.standard_.push_back(std::move(standard));
    m.normal_forms_.push_back(std::move(nf));
  }
  // y_l I_k must land in I_{k+1}.
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
    const MonomialBasis& src = MonomialBasis::get(num_vars, k);
    const MonomialBasis& dst = MonomialBasis::get(num_vars, k + 1);
    const Matrix<F>& basis = pieces[k].basis();
    for (std::size_t l = 0; l < num_vars; ++l) {
      for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::vector<Element<F>> shifted(dst.size(), field.zero());
        for (std::size_t c = 0; c < src.size(); ++c) {
          shifted[dst.index_of(add_exponents(src[c], unit_exponent(l)))] += basis(r, c);
        }
        for (const auto& v : m.normal_forms_[k + 1].apply(shifted)) {
          if (!field.is_zero(v)) {
            throw PreconditionError("ideal pieces are not closed under multiplication in degree " +
                                    std::to_string(k));
          }
        }
      }
    }
  }
  return m;
}

template <Field F>
std::size_t GradedModule<F>::dimension(long k) const {
  if (k < 0) return 0;
  if (k <= static_cast<long>(top_degree())) return normal_forms_[k].rows();
  if (zero_above_top_) return 0;
  throw PreconditionError("graded piece of degree " + std::to_string(k) +
                          " is outside the computed window 0.." + std::to_string(top_degree()));
}

template <Field F>
Matrix<F> GradedModule<F>::multiplication(std::size_t var, std::size_t k) const {
  const std::size_t rows = dimension(static_cast<long>(k) + 1);
  const std::size_t cols = dimension(static_cast<long>(k));
  Matrix<F> m(field_, rows, cols);
  if (rows == 0 || cols == 0) return m;
  const MonomialBasis& src = MonomialBasis::get(num_vars_, k);
  const MonomialBasis& dst = MonomialBasis::get(num_vars_, k + 1);
  const Matrix<F>& nf = normal_forms_[k + 1];
  for (std::size_t t = 0; t < cols; ++t) {
    const std::size_t idx = dst.index_of(add_exponents(src[standard_[k][t]], unit_exponent(var)));
    for (std::size_t r = 0; r < rows; ++r) m(r, t) = nf(r, idx);
  }
  return m;
}

template <Field F>
GradedModule<F> apolar_algebra(const HomogeneousForm<F>& f) {
  std::vector<Matrix<F>> maps;
  for (std::size_t k = 0; k <= f.degree(); ++k) maps.push_back(catalecticant(f, k));
  return GradedModule<F>::from_maps(f.field(), f.num_vars(), maps, true);
}

template <Field F>
GradedModule<F> coordinate_ring(const PointSet<F>& points, std::size_t top) {
  if (points.empty()) throw PreconditionError("coordinate ring of an empty point set");
  if (!points.reduced()) throw PreconditionError("coordinate ring: duplicate points");
  std::vector<Matrix<F>> maps;
  for (std::size_t k = 0; k <= top; ++k) maps.push_back(evaluation_matrix(points, k));
  return GradedModule<F>::from_maps(points.field(), points.num_vars(), maps, false);
}

template <Field F>
GradedModule<F> quotient_by_generators(const F& field, std::size_t num_vars,
                                       const std::vector<HomogeneousForm<F>>& generators,
                                       std::size_t top) {
  std::vector<Subspace<F>> pieces;
  for (std::size_t k = 0; k <= top; ++k) {
    std::vector<std::vector<Element<F>>> rows;
    for (const auto& g : generators) {
      if (g.num_vars() != num_vars) throw PreconditionError("generator variable count mismatch");
      if (g.degree() > k) continue;
      const MonomialBasis& mons = MonomialBasis::get(num_vars, k - g.degree());
      for (std::size_t m = 0; m < mons.size(); ++m) {
        auto prod =
            multiply(HomogeneousForm<F>::monomial(field, num_vars, mons[m], field.one(), 'y'), g);
        rows.emplace_back(prod.coefficients().begin(), prod.coefficients().end());
      }
    }
    const std::size_t width = monomial_count(num_vars, k);
    pieces.push_back(Subspace<F>::span(AmbientSpace{num_vars, k, 1, 'y'},
                                       Matrix<F>::from_rows(field, width, rows)));
  }
  return GradedModule<F>::from_ideal(field, num_vars, pieces, false);
}

// ---------------------------------------------------------------------------
// Koszul complex

namespace {

struct Subsets {
  std::vector<unsigned> masks;     // index -> bitmask, lexicographic
  std::vector<std::size_t> index;  // bitmask -> index
};

Subsets subsets_of_size(std::size_t n, int size) {
  Subsets s;
  s.index.assign(std::size_t{1} << n, 0);
  if (size < 0 || static_cast<std::size_t>(size) > n) return s;
  std::vector<std::size_t> combo(static_cast<std::size_t>(size));
  for (std::size_t t = 0; t < combo.size(); ++t) combo[t] = t;
  for (;;) {
    unsigned mask = 0;
    for (auto c : combo) mask |= 1U << c;
    s.index[mask] = s.masks.size();
    s.masks.push_back(mask);
    // next combination in lexicographic order
    std::size_t t = combo.size();
    while (t > 0 && combo[t - 1] == n - combo.size() + t - 1) --t;
    if (t == 0) break;
    ++combo[t - 1];
    for (std::size_t u = t; u < combo.size(); ++u) combo[u] = combo[u - 1] + 1;
  }
  return s;
}

}  // namespace

template <Field F>
Matrix<F> koszul_differential(const GradedModule<F>& module, int i, int j) {
  const F& field = module.field();
  const std::size_t n = module.num_vars();
  const long k = static_cast<long>(j) - i;  // source module degree
  const Subsets src = subsets_of_size(n, i);
  const Subsets dst = subsets_of_size(n, i - 1);
  const std::size_t src_dim = module.dimension(k);
  const std::size_t dst_dim = module.dimension(k + 1);
  Matrix<F> d(field, dst.masks.size() * dst_dim, src.masks.size() * src_dim);
  if (i <= 0 || src_dim == 0 || dst_dim == 0) return d;
  std::vector<Matrix<F>> mult;
  for (std::size_t l = 0; l < n; ++l) mult.push_back(module.multiplication(l, k));
  for (std::size_t a = 0; a < src.masks.size(); ++a) {
    const unsigned mask = src.masks[a];
    int position = 0;
    for (std::size_t l = 0; l < n; ++l) {
      if (!(mask & (1U << l))) continue;
      const std::size_t b = dst.index[mask & ~(1U << l)];
      const bool negative = (position % 2) == 1;
      for (std::size_t t = 0; t < src_dim; ++t) {
        for (std::size_t r = 0; r < dst_dim; ++r) {
          const auto& v = mult[l](r, t);
          if (field.is_zero(v)) continue;
          if (negative) {
            d(b * dst_dim + r, a * src_dim + t) -= v;
          } else {
            d(b * dst_dim + r, a * src_dim + t) += v;
          }
        }
      }
      ++position;
    }
  }
  return d;
}

namespace {

template <Field F>
std::size_t differential_rank(const GradedModule<F>& module, int i, int j,
                              const RankPolicy& policy) {
  if (i <= 0 || j < i) return 0;
  Matrix<F> d = koszul_differential(module, i, j);
  if (d.rows() == 0 || d.cols() == 0) return 0;
  RankPolicy cell = policy;
  cell.seed = policy.seed ^ (static_cast<std::uint64_t>(i) << 32U) ^ static_cast<std::uint64_t>(j);
  return certified_rank(d, cell);
}

}  // namespace

template <Field F>
std::uint64_t betti_number(const GradedModule<F>& module, int i, int j,
                           const RankPolicy& policy) {
  if (i < 0) return 0;
  const std::size_t chain_dim =
      binomial(module.num_vars(), static_cast<std::uint64_t>(i)) * module.dimension(j - i);
  // Both neighbouring differentials need M_{j-i-1} .. M_{j-i+1}.
  (void)module.dimension(j - i + 1);
  const std::size_t out_rank = differential_rank(module, i, j, policy);
  const std::size_t in_rank = differential_rank(module, i + 1, j, policy);
  return chain_dim - out_rank - in_rank;
}

template <Field F>
BettiTable graded_betti(const GradedModule<F>& module, int max_i, int max_j,
                        const RankPolicy& policy) {
  if (max_i < 0 || max_j < 0) throw PreconditionError("graded_betti: negative window");
  if (!module.has_degree(max_j + 1)) {
    throw PreconditionError("graded_betti: window needs graded pieces up to degree " +
                            std::to_string(max_j + 1) + ", module stops at " +
                            std::to_string(module.top_degree()));
  }
  // rank of d(i, j) for 1 <= i <= max_i + 1, i <= j <= max_j
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= max_i + 1; ++i) {
    for (int j = i; j <= max_j; ++j) cells.emplace_back(i, j);
  }
  std::vector<std::size_t> ranks(cells.size(), 0);
  parallel_for(cells.size(), [&](std::size_t c) {
    ranks[c] = differential_rank(module, cells[c].first, cells[c].second, policy);
  });
  auto rank_of = [&](int i, int j) -> std::size_t {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].first == i && cells[c].second == j) return ranks[c];
    }
    return 0;
  };
  BettiTable table;
  for (int i = 0; i <= max_i; ++i) {
    for (int j = i; j <= max_j; ++j) {
      const std::size_t chain_dim =
          binomial(module.num_vars(), static_cast<std::uint64_t>(i)) * module.dimension(j - i);
      table.set(i, j, chain_dim - rank_of(i, j) - rank_of(i + 1, j));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// LinearFormMatrix

template <Field F>
LinearFormMatrix<F>::LinearFormMatrix(F field, std::size_t rows, std::size_t cols,
                                      std::size_t num_vars, char alphabet)
    : alphabet_(alphabet) {
  if (num_vars == 0) throw PreconditionError("linear form matrix needs at least one variable");
  for (std::size_t l = 0; l < num_vars; ++l) slices_.emplace_back(field, rows, cols);
}

template <Field F>
LinearFormMatrix<F>::LinearFormMatrix(std::vector<Matrix<F>> slices, char alphabet)
    : slices_(std::move(slices)), alphabet_(alphabet) {
  if (slices_.empty()) throw PreconditionError("linear form matrix needs at least one variable");
  for (const auto& s : slices_) {
    if (s.rows() != slices_[0].rows() || s.cols() != slices_[0].cols()) {
      throw PreconditionError("coefficient slices differ in shape");
    }
    if (!(s.field() == slices_[0].field())) throw FieldMismatch("slices over different fields");
  }
}

template <Field F>
LinearFormMatrix<F> LinearFormMatrix<F>::from_entries(
    const F& field, std::size_t rows, std::size_t cols,
    const std::vector<HomogeneousForm<F>>& entries) {
  if (entries.size() != rows * cols) throw PreconditionError("entry count mismatch");
  if (entries.empty()) throw PreconditionError("empty matrix");
  const std::size_t n = entries[0].num_vars();
  LinearFormMatrix m(field, rows, cols, n, entries[0].alphabet());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = entries[r * cols + c];
      if (e.num_vars() != n) throw PreconditionError("entries use different variable counts");
      if (e.degree() == 0 && e.is_zero()) continue;
      if (e.degree() != 1) throw PreconditionError("entry is not a linear form");
      for (std::size_t l = 0; l < n; ++l) m.slices_[l](r, c) = e.coefficient(l);
    }
  }
  return m;
}

template <Field F>
HomogeneousForm<F> LinearFormMatrix<F>::entry(std::size_t r, std::size_t c) const {
  std::vector<Element<F>> coeffs;
  for (const auto& s : slices_) coeffs.push_back(s(r, c));
  return HomogeneousForm<F>::linear(field(), std::move(coeffs), alphabet_);
}

template <Field F>
Matrix<F> LinearFormMatrix<F>::evaluate(std::span<const Element<F>> point) const {
  if (point.size() != num_vars()) throw PreconditionError("evaluate: point dimension mismatch");
  Matrix<F> m(field(), rows(), cols());
  for (std::size_t l = 0; l < num_vars(); ++l) {
    if (field().is_zero(point[l])) continue;
    m = m + point[l] * slices_[l];
  }
  return m;
}

template <Field F>
LinearFormMatrix<F> restrict_linear_matrix(const LinearFormMatrix<F>& m,
                                           const std::vector<HomogeneousForm<F>>& substitution) {
  if (substitution.size() != m.num_vars()) {
    throw PreconditionError("restriction needs one linear form per variable");
  }
  const std::size_t target = substitution[0].num_vars();
  for (const auto& s : substitution) {
    if (s.degree() != 1) throw PreconditionError("restriction: substituent is not linear");
    if (s.num_vars() != target) throw PreconditionError("restriction: mixed target rings");
  }
  std::vector<Matrix<F>> slices;
  for (std::size_t t = 0; t < target; ++t) {
    Matrix<F> acc(m.field(), m.rows(), m.cols());
    for (std::size_t l = 0; l < m.num_vars(); ++l) {
      const auto& c = substitution[l].coefficient(t);
      if (m.field().is_zero(c)) continue;
      acc = acc + c * m.slice(l);
    }
    slices.push_back(std::move(acc));
  }
  return LinearFormMatrix<F>(std::move(slices), substitution[0].alphabet());
}

template <Field F>
std::size_t rank_at_point(const LinearFormMatrix<F>& m, std::span<const Element<F>> point) {
  return rank(m.evaluate(point));
}

// ---------------------------------------------------------------------------
// Linear strand and M2

namespace {

template <Field F>
Matrix<F> normalize_basis(Matrix<F> basis) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return primitive_integer_rows(basis);
  } else {
    return basis;
  }
}

template <Field F>
Matrix<F> scramble(const Matrix<F>& basis, std::mt19937_64& rng) {
  if (basis.rows() == 0) return basis;
  return normalize_basis(random_invertible(basis.field(), basis.rows(), rng) * basis);
}

template <Field F>
Matrix<F> first_syzygy_map(const Matrix<F>& quadrics, std::size_t n) {
  const F& field = quadrics.field();
  const MonomialBasis& deg2 = MonomialBasis::get(n, 2);
  const MonomialBasis& deg3 = MonomialBasis::get(n, 3);
  Matrix<F> m(field, deg3.size(), quadrics.rows() * n);
  for (std::size_t i = 0; i < quadrics.rows(); ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t c = 0; c < deg2.size(); ++c) {
        const auto& v = quadrics(i, c);
        if (field.is_zero(v)) continue;
        m(deg3.index_of(add_exponents(deg2[c], unit_exponent(l))), i * n + l) += v;
      }
    }
  }
  return m;
}

template <Field F>
Matrix<F> second_syzygy_map(const Matrix<F>& first, std::size_t q, std::size_t n) {
  const F& field = first.field();
  const MonomialBasis& deg2 = MonomialBasis::get(n, 2);
  Matrix<F> m(field, q * deg2.size(), first.rows() * n);
  for (std::size_t j = 0; j < first.rows(); ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto& v = first(j, i * n + k);
          if (field.is_zero(v)) continue;
          const std::size_t mono = deg2.index_of(add_exponents(unit_exponent(k), unit_exponent(l)));
          m(i * deg2.size() + mono, j * n + l) += v;
        }
      }
    }
  }
  return m;
}

template <Field F>
LinearStrand<F> compute_strand(const Subspace<F>& quadrics, int order,
                               const StrandOptions& options) {
  const AmbientSpace& amb = quadrics.ambient();
  if (amb.degree != 2 || amb.multiplicity != 1) {
    throw PreconditionError("linear syzygies need a space of quadrics");
  }
  const std::size_t n = amb.num_vars;
  const F& field = quadrics.field();
  std::mt19937_64 rng(options.basis_seed.value_or(0));

  Matrix<F> q_basis = normalize_basis(quadrics.basis());
  if (options.basis_seed) q_basis = scramble(q_basis, rng);
  const std::size_t q = q_basis.rows();

  GradedModule<F> ring = quotient_by_generators(
      field, n, basis_forms(Subspace<F>::from_basis(amb, q_basis)), 3);

  Matrix<F> first = normalize_basis(kernel_basis(first_syzygy_map(q_basis, n)));
  if (options.basis_seed) first = scramble(first, rng);
  const std::uint64_t b23 = betti_number(ring, 2, 3, options.rank_policy);
  if (first.rows() != b23) {
    throw ComputationError("first linear syzygies: kernel dimension " +
                           std::to_string(first.rows()) + " differs from b_{2,3} = " +
                           std::to_string(b23));
  }
  LinearStrand<F> strand{Subspace<F>::from_basis(amb, q_basis),
                         Subspace<F>::from_basis(AmbientSpace{n, 1, q, amb.alphabet}, first),
                         Subspace<F>::from_basis(AmbientSpace{n, 1, first.rows(), amb.alphabet},
                                                 Matrix<F>(field, 0, first.rows() * n))};
  if (order < 2) return strand;

  const std::uint64_t b24 = betti_number(ring, 2, 4, options.rank_policy);
  if (b24 != 0) {
    throw PreconditionError("second linear syzygies are not minimal: b_{2,4} = " +
                            std::to_string(b24));
  }
  Matrix<F> second = normalize_basis(kernel_basis(second_syzygy_map(first, q, n)));
  if (options.basis_seed) second = scramble(second, rng);
  const std::uint64_t b34 = betti_number(ring, 3, 4, options.rank_policy);
  if (second.rows() != b34) {
    throw ComputationError("second linear syzygies: kernel dimension " +
                           std::to_string(second.rows()) + " differs from b_{3,4} = " +
                           std::to_string(b34));
  }
  strand.second =
      Subspace<F>::from_basis(AmbientSpace{n, 1, first.rows(), amb.alphabet}, std::move(second));
  return strand;
}

}  // namespace

template <Field F>
std::vector<HomogeneousForm<F>> basis_forms(const Subspace<F>& space) {
  const AmbientSpace& amb = space.ambient();
  if (amb.multiplicity != 1) throw PreconditionError("basis_forms: not a single graded piece");
  std::vector<HomogeneousForm<F>> out;
  for (std::size_t r = 0; r < space.dim(); ++r) {
    out.emplace_back(space.field(), amb.num_vars, amb.degree, space.basis().row_vector(r),
                     amb.alphabet);
  }
  return out;
}

template <Field F>
Subspace<F> linear_syzygies(const Subspace<F>& quadrics, int order, const StrandOptions& options) {
  if (order != 1 && order != 2) throw PreconditionError("syzygy order must be 1 or 2");
  LinearStrand<F> strand = compute_strand(quadrics, order, options);
  return order == 1 ? strand.first : strand.second;
}

template <Field F>
LinearStrand<F> linear_strand(const Subspace<F>& quadrics, const StrandOptions& options) {
  return compute_strand(quadrics, 2, options);
}

template <Field F>
M2Result<F> m2_matrix(const HomogeneousForm<F>& f, const StrandOptions& options) {
  if (f.num_vars() != 6 || f.degree() != 3) {
    throw PreconditionError("M2 is defined for cubics in six variables");
  }
  BettiTable betti = graded_betti(apolar_algebra(f), 6, 9, options.rank_policy);
  if (!(betti == generic_cubic_fourfold_betti())) {
    throw PreconditionError("apolar ideal does not have the generic Betti table:\n" +
                            betti.render());
  }
  LinearStrand<F> strand = linear_strand(q_f(f), options);
  const std::size_t n = f.num_vars();
  const std::size_t s1 = strand.first.dim();
  const std::size_t s2 = strand.second.dim();
  std::vector<Matrix<F>> slices;
  for (std::size_t l = 0; l < n; ++l) {
    Matrix<F> s(f.field(), s1, s2);
    for (std::size_t j = 0; j < s1; ++j) {
      for (std::size_t c = 0; c < s2; ++c) s(j, c) = strand.second.basis()(c, j * n + l);
    }
    slices.push_back(std::move(s));
  }
  return {LinearFormMatrix<F>(std::move(slices), 'y'), basis_forms(strand.quadrics),
          std::move(betti)};
}

#define APOLARKIT_INSTANTIATE_RESOLUTIONS(F)                                                     \
  template class GradedModule<F>;                                                                \
  template class LinearFormMatrix<F>;                                                            \
  template GradedModule<F> apolar_algebra<F>(const HomogeneousForm<F>&);                         \
  template GradedModule<F> coordinate_ring<F>(const PointSet<F>&, std::size_t);                  \
  template GradedModule<F> quotient_by_generators<F>(                                            \
      const F&, std::size_t, const std::vector<HomogeneousForm<F>>&, std::size_t);              \
  template Matrix<F> koszul_differential<F>(const GradedModule<F>&, int, int);                   \
  template std::uint64_t betti_number<F>(const GradedModule<F>&, int, int, const RankPolicy&);   \
  template BettiTable graded_betti<F>(const GradedModule<F>&, int, int, const RankPolicy&);      \
  template LinearFormMatrix<F> restrict_linear_matrix<F>(const LinearFormMatrix<F>&,             \
                                                         const std::vector<HomogeneousForm<F>>&); \
  template std::size_t rank_at_point<F>(const LinearFormMatrix<F>&,                              \
                                        std::span<const Element<F>>);                            \
  template std::vector<HomogeneousForm<F>> basis_forms<F>(const Subspace<F>&);                   \
  template Subspace<F> linear_syzygies<F>(const Subspace<F>&, int, const StrandOptions&);        \
  template LinearStrand<F> linear_strand<F>(const Subspace<F>&, const StrandOptions&);           \
  template M2Result<F> m2_matrix<F>(const HomogeneousForm<F>&, const StrandOptions&);

APOLARKIT_INSTANTIATE_RESOLUTIONS(RationalField)
APOLARKIT_INSTANTIATE_RESOLUTIONS(PrimeField)
APOLARKIT_INSTANTIATE_RESOLUTIONS(PrimeSquareField)

}  // namespace apolarkit
