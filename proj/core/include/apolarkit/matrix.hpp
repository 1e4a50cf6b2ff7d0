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

#include <algorithm>
#include <cstddef>
#include <random>
#include <type_traits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apolarkit/error.hpp"
#include "apolarkit/field.hpp"
#include "apolarkit/monomial.hpp"

namespace apolarkit {

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Element> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw PreconditionError("matrix data size mismatch");
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const F& field, std::size_t cols,
                          const std::vector<std::vector<Element>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw PreconditionError("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix random(const F& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(field, rows, cols);
    for (auto& e : m.data_) e = random_element(field, rng);
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Element> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  std::vector<Element> column_vector(std::size_t c) const {
    std::vector<Element> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  const std::vector<Element>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix m(field_, count, cols_);
    for (std::size_t r = 0; r < count; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
    }
    return m;
  }

  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix m(field_, row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
      for (std::size_t c = 0; c < col_idx.size(); ++c) m(r, c) = (*this)(row_idx[r], col_idx[c]);
    }
    return m;
  }

  /// Stack `other` below this matrix.
  Matrix vstack(const Matrix& other) const {
    if (other.cols_ != cols_) throw PreconditionError("vstack: column mismatch");
    check_field(other);
    Matrix m(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + data_.size());
    return m;
  }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product: inner dimension mismatch");
    a.check_field(b);
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(i, k);
        if (a.field_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum: shape");
    a.check_field(b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
  }

  friend Matrix operator*(const Element& s, const Matrix& a) {
    Matrix m = a;
    for (auto& e : m.data_) e *= s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<Element> apply(std::span<const Element> v) const {
    if (v.size() != cols_) throw PreconditionError("matrix-vector: length mismatch");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

 private:
  void check_field(const Matrix& other) const {
    if (!(field_ == other.field_)) throw FieldMismatch("matrices over different fields");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Which nonzero entry below the current row becomes the pivot.
enum class PivotRule { first_nonzero, last_nonzero };

template <Field F>
struct Rref {
  Matrix<F> reduced;  // only the nonzero rows, each with a leading 1
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <Field F>
Rref<F> rref(Matrix<F> m, PivotRule rule = PivotRule::first_nonzero) {
  const F& field = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!field.is_zero(m(i, c))) {
        pivot = i;
        if (rule == PivotRule::first_nonzero) break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    }
    const Element<F> inv = field.inverse(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      const Element<F> factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.row_block(0, r), std::move(pivots)};
}

namespace detail {

/// Rank of a matrix over Q by fraction-free (Bareiss) elimination on the
/// integer matrix obtained by clearing each row's denominators.
inline std::size_t bareiss_rank(const Matrix<RationalField>& q, PivotRule rule) {
  const std::size_t rows = q.rows();
  const std::size_t cols = q.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      a[i * cols + j] = q(i, j).get_num() * (lcm / q(i, j).get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  mpz_class previous = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = k; i < rows; ++i) {
      if (sgn(at(i, c)) != 0) {
        pivot = i;
        if (rule == PivotRule::first_nonzero) break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(k, j), at(pivot, j));
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = at(k, c) * at(i, j) - at(i, c) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      at(i, c) = 0;
    }
    previous = at(k, c);
    ++k;
  }
  return k;
}

}  // namespace detail

/// Exact rank. Over QQ this runs fraction-free elimination.
template <Field F>
std::size_t rank(const Matrix<F>& m, PivotRule rule = PivotRule::first_nonzero) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return detail::bareiss_rank(m, rule);
  } else {
    // Row echelon form only; no back substitution needed.
    Matrix<F> w = m;
    const F& field = w.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
      std::size_t pivot = w.rows();
      for (std::size_t i = r; i < w.rows(); ++i) {
        if (!field.is_zero(w(i, c))) {
          pivot = i;
          if (rule == PivotRule::first_nonzero) break;
        }
      }
      if (pivot == w.rows()) continue;
      if (pivot != r) {
        for (std::size_t j = c; j < w.cols(); ++j) std::swap(w(r, j), w(pivot, j));
      }
      const Element<F> inv = field.inverse(w(r, c));
      for (std::size_t i = r + 1; i < w.rows(); ++i) {
        if (field.is_zero(w(i, c))) continue;
        const Element<F> factor = w(i, c) * inv;
        for (std::size_t j = c; j < w.cols(); ++j) w(i, j) -= factor * w(r, j);
      }
      ++r;
    }
    return r;
  }
}

/// Reduce a rational matrix modulo p. Throws if a denominator vanishes mod p.
inline Matrix<PrimeField> reduce_mod_p(const Matrix<RationalField>& m, const PrimeField& fp) {
  Matrix<PrimeField> out(fp, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = fp.from_rational(m(r, c));
  }
  return out;
}

/// Rank over QQ certified by two random primes above 2^15: the ranks modulo
/// both primes must agree. Rank mod p never exceeds the rational rank, so a
/// disagreement triggers a retry with fresh primes; agreement is accepted as
/// the answer (a probabilistic certificate).
inline std::size_t rank_two_prime(const Matrix<RationalField>& m, std::uint64_t seed,
                                  int max_attempts = 8) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::size_t ranks[2] = {0, 0};
    bool usable = true;
    for (auto& r : ranks) {
      PrimeField fp(random_prime(rng, 1U << 15, 1U << 30));
      try {
        r = rank(reduce_mod_p(m, fp));
      } catch (const PreconditionError&) {
        usable = false;  // a denominator vanished mod p
      }
    }
    if (usable && ranks[0] == ranks[1]) return ranks[0];
  }
  throw ComputationError("two-prime rank certificate did not agree");
}

/// Basis of the right kernel {v : M v = 0}, one row per free column, with
/// v[free] = 1 and zeros at the other free columns.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& field = m.field();
  Rref<F> red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix<F> basis(field, free.size(), m.cols());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(k, free[k]) = field.one();
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      basis(k, red.pivots[i]) = -red.reduced(i, free[k]);
    }
  }
  return basis;
}

/// Scale every row of a rational matrix to a primitive integer vector with
/// a positive leading entry. The row space is unchanged.
inline Matrix<RationalField> primitive_integer_rows(const Matrix<RationalField>& m) {
  Matrix<RationalField> out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    mpz_class gcd = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_class v = m(r, c).get_num() * (lcm / m(r, c).get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    }
    if (gcd == 0) continue;
    Rational scale(lcm, gcd);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0) {
        if (sgn(m(r, c)) < 0) scale = -scale;
        break;
      }
    }
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * scale;
  }
  return out;
}

/// Random invertible n x n matrix (rejection sampling).
template <Field F>
Matrix<F> random_invertible(const F& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<F> m = Matrix<F>::random(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

// ---------------------------------------------------------------------------

/// Identifies the coordinate system of a graded piece S^d in n variables,
/// possibly taken `multiplicity` times (a direct sum).
struct AmbientSpace {
  std::size_t num_vars = 0;
  std::size_t degree = 0;
  std::size_t multiplicity = 1;
  char alphabet = 'y';

  std::size_t block_size() const { return monomial_count(num_vars, degree); }
  std::size_t dimension() const { return block_size() * multiplicity; }
  bool operator==(const AmbientSpace&) const = default;
};

/// A linear subspace given by a basis of row vectors in ambient coordinates.
/// The rows are kept linearly independent.
template <Field F>
class Subspace {
 public:
  /// Row space of `rows` (dependent rows are removed; basis is the RREF).
  static Subspace span(AmbientSpace ambient, const Matrix<F>& rows) {
    check_cols(ambient, rows);
    return Subspace(ambient, rref(rows).reduced);
  }

  /// Uses `rows` verbatim as the basis; they must be independent.
  static Subspace from_basis(AmbientSpace ambient, Matrix<F> rows) {
    check_cols(ambient, rows);
    if (rank(rows) != rows.rows()) throw PreconditionError("basis rows are dependent");
    return Subspace(ambient, std::move(rows));
  }

  /// Kernel of a map given by a matrix whose columns index the ambient.
  static Subspace kernel(AmbientSpace ambient, const Matrix<F>& map) {
    check_cols(ambient, map);
    return Subspace(ambient, kernel_basis(map));
  }

  const AmbientSpace& ambient() const { return ambient_; }
  const Matrix<F>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  const F& field() const { return basis_.field(); }

  bool contains(std::span<const Element<F>> v) const {
    if (v.size() != ambient_.dimension()) throw PreconditionError("vector length mismatch");
    Matrix<F> one(basis_.field(), 1, v.size(), {v.begin(), v.end()});
    return rank(basis_.vstack(one)) == dim();
  }

  bool contains(const Subspace& other) const {
    if (!(other.ambient_ == ambient_)) throw PreconditionError("ambient mismatch");
    return rank(basis_.vstack(other.basis_)) == dim();
  }

  /// U cap W, from the kernel of (c, d) -> c U - d W.
  Subspace intersect(const Subspace& other) const {
    if (!(other.ambient_ == ambient_)) throw PreconditionError("ambient mismatch");
    const F& field = basis_.field();
    const std::size_t a = dim();
    Matrix<F> stacked = basis_.vstack(other.basis_);
    for (std::size_t r = a; r < stacked.rows(); ++r) {
      for (std::size_t c = 0; c < stacked.cols(); ++c) stacked(r, c) = -stacked(r, c);
    }
    const Matrix<F> coeffs = kernel_basis(stacked.transpose());
    std::vector<std::vector<Element<F>>> rows;
    for (std::size_t k = 0; k < coeffs.rows(); ++k) {
      std::vector<Element<F>> head(coeffs.row(k).begin(), coeffs.row(k).begin() + a);
      Matrix<F> c(field, 1, a, std::move(head));
      const Matrix<F> v = c * basis_;
      rows.push_back(v.row_vector(0));
    }
    return span(ambient_, Matrix<F>::from_rows(field, ambient_.dimension(), rows));
  }

 private:
  Subspace(AmbientSpace ambient, Matrix<F> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  static void check_cols(const AmbientSpace& ambient, const Matrix<F>& m) {
    if (m.cols() != ambient.dimension()) {
      throw PreconditionError("subspace rows have length " + std::to_string(m.cols()) +
                              ", ambient dimension is " + std::to_string(ambient.dimension()));
    }
  }

  AmbientSpace ambient_;
  Matrix<F> basis_;
};

}  // namespace apolarkit
