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
 * Graded Betti numbers through Koszul homology, and the linear strand of
 * a system of quadrics.
 *
 * For a graded quotient M = S/I of the dual ring S, b_{i,j} is the
 * dimension of the homology at Lambda^i V* (x) M_{j-i} of
 *
 *   Lambda^{i+1} (x) M_{j-i-1} -> Lambda^i (x) M_{j-i} -> Lambda^{i-1} (x) M_{j-i+1},
 *   e_A (x) m  ->  sum_s (-1)^s e_{A \ a_s} (x) y_{a_s} m.
 *
 * Tables print with row r = j - i and column i, the layout of Macaulay2's
 * betti display.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolarkit/apolarity.hpp"
#include "apolarkit/form.hpp"
#include "apolarkit/matrix.hpp"

namespace apolarkit {

// ---------------------------------------------------------------------------
// Rank certificates

struct RankPolicy {
  enum class Mode {
    exact,                // fraction-free elimination over QQ
    two_prime,            // agreement modulo two random primes > 2^15
    two_prime_confirmed,  // two primes, then an exact pass that must agree
  };
  Mode mode = Mode::exact;
  std::uint64_t seed = 0x5eedULL;
};

/// Rank under the policy; finite fields always compute exactly.
template <Field F>
std::size_t certified_rank(const Matrix<F>& m, const RankPolicy& policy) {
  if constexpr (std::is_same_v<F, RationalField>) {
    switch (policy.mode) {
      case RankPolicy::Mode::exact:
        return rank(m);
      case RankPolicy::Mode::two_prime:
        return rank_two_prime(m, policy.seed);
      case RankPolicy::Mode::two_prime_confirmed: {
        const std::size_t modular = rank_two_prime(m, policy.seed);
        const std::size_t exact = rank(m);
        if (modular != exact) {
          throw ComputationError("two-prime rank " + std::to_string(modular) +
                                 " disagrees with exact rank " + std::to_string(exact));
        }
        return exact;
      }
    }
  }
  return rank(m);
}

// ---------------------------------------------------------------------------

class BettiTable {
 public:
  struct Entry {
    int i;
    int j;
    std::uint64_t value;
    bool operator==(const Entry&) const = default;
  };

  BettiTable() = default;

  /// rows[r][i] = b_{i, i + r}; mirrors the printed layout.
  static BettiTable from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

  std::uint64_t get(int i, int j) const;
  void set(int i, int j, std::uint64_t value);

  /// Nonzero entries ordered by (i, j).
  std::vector<Entry> entries() const;
  int max_column() const;
  int max_row() const;

  /// Text layout: one line per row r = j - i, '-' for zero.
  std::string render() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries() == b.entries();
  }

 private:
  std::map<std::pair<int, int>, std::uint64_t> values_;
};

/// Betti table of S/I_f for a general cubic in six variables:
/// (1 | 15,35,21 | 21,35,15 | 1).
BettiTable generic_cubic_fourfold_betti();

// ---------------------------------------------------------------------------

/// A graded quotient S/I of the dual polynomial ring, known in degrees
/// 0..top. Degree k is stored as a normal-form matrix NF_k (dim M_k by the
/// number of degree-k monomials) sending a monomial to coordinates in the
/// basis of standard monomials.
template <Field F>
class GradedModule {
 public:
  /// From maps phi_k on S^k whose kernels are I_k (catalecticants,
  /// evaluation maps). Entry k of `maps` has one column per degree-k monomial.
  static GradedModule from_maps(const F& field, std::size_t num_vars,
                                const std::vector<Matrix<F>>& maps, bool zero_above_top);

  /// From the ideal pieces I_0..I_top. Checks y_l I_k inside I_{k+1}.
  static GradedModule from_ideal(const F& field, std::size_t num_vars,
                                 const std::vector<Subspace<F>>& pieces, bool zero_above_top);

  const F& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t top_degree() const { return normal_forms_.size() - 1; }
  bool zero_above_top() const { return zero_above_top_; }

  bool has_degree(long k) const {
    return k < 0 || k <= static_cast<long>(top_degree()) || zero_above_top_;
  }
  std::size_t dimension(long k) const;
  const Matrix<F>& normal_form(std::size_t k) const { return normal_forms_.at(k); }
  const std::vector<std::size_t>& standard_monomials(std::size_t k) const {
    return standard_.at(k);
  }

  /// Matrix of multiplication by y_var from M_k to M_{k+1}.
  Matrix<F> multiplication(std::size_t var, std::size_t k) const;

 private:
  GradedModule(F field, std::size_t num_vars) : field_(std::move(field)), num_vars_(num_vars) {}

  F field_;
  std::size_t num_vars_;
  bool zero_above_top_ = false;
  std::vector<Matrix<F>> normal_forms_;
  std::vector<std::vector<std::size_t>> standard_;
};

/// S/I_f; zero above deg f.
template <Field F>
GradedModule<F> apolar_algebra(const HomogeneousForm<F>& f);

/// S/I_Z in degrees 0..top.
template <Field F>
GradedModule<F> coordinate_ring(const PointSet<F>& points, std::size_t top);

/// S/(generators) in degrees 0..top.
template <Field F>
GradedModule<F> quotient_by_generators(const F& field, std::size_t num_vars,
                                       const std::vector<HomogeneousForm<F>>& generators,
                                       std::size_t top);

/// Koszul differential Lambda^i (x) M_{j-i} -> Lambda^{i-1} (x) M_{j-i+1}.
template <Field F>
Matrix<F> koszul_differential(const GradedModule<F>& module, int i, int j);

/// One Betti number b_{i,j}.
template <Field F>
std::uint64_t betti_number(const GradedModule<F>& module, int i, int j,
                           const RankPolicy& policy = {});

/// All b_{i,j} with 0 <= i <= max_i and i <= j <= max_j. Throws
/// PreconditionError if a needed graded piece is missing.
template <Field F>
BettiTable graded_betti(const GradedModule<F>& module, int max_i, int max_j,
                        const RankPolicy& policy = {});

// ---------------------------------------------------------------------------

/// R x C matrix of linear forms, stored as one coefficient matrix per
/// variable: M = sum_l y_l A_l.
template <Field F>
class LinearFormMatrix {
 public:
  LinearFormMatrix(F field, std::size_t rows, std::size_t cols, std::size_t num_vars,
                   char alphabet = 'y');
  LinearFormMatrix(std::vector<Matrix<F>> slices, char alphabet = 'y');

  static LinearFormMatrix from_entries(const F& field, std::size_t rows, std::size_t cols,
                                       const std::vector<HomogeneousForm<F>>& entries);

  const F& field() const { return slices_.front().field(); }
  std::size_t rows() const { return slices_.front().rows(); }
  std::size_t cols() const { return slices_.front().cols(); }
  std::size_t num_vars() const { return slices_.size(); }
  char alphabet() const { return alphabet_; }
  const Matrix<F>& slice(std::size_t var) const { return slices_.at(var); }
  const std::vector<Matrix<F>>& slices() const { return slices_; }

  HomogeneousForm<F> entry(std::size_t r, std::size_t c) const;
  Matrix<F> evaluate(std::span<const Element<F>> point) const;

  friend bool operator==(const LinearFormMatrix& a, const LinearFormMatrix& b) {
    return a.slices_ == b.slices_;
  }

 private:
  std::vector<Matrix<F>> slices_;
  char alphabet_;
};

/// Entrywise substitution of linear forms for the variables.
template <Field F>
LinearFormMatrix<F> restrict_linear_matrix(const LinearFormMatrix<F>& m,
                                           const std::vector<HomogeneousForm<F>>& substitution);

template <Field F>
std::size_t rank_at_point(const LinearFormMatrix<F>& m, std::span<const Element<F>> point);

/// Coefficientwise image of a matrix of linear forms in another field.
template <Field Target, Field Source, class Map>
LinearFormMatrix<Target> map_coefficients(const LinearFormMatrix<Source>& m, const Target& target,
                                          Map&& map) {
  std::vector<Matrix<Target>> slices;
  for (const auto& s : m.slices()) {
    std::vector<Element<Target>> data;
    data.reserve(s.data().size());
    for (const auto& e : s.data()) data.push_back(map(e));
    slices.emplace_back(target, s.rows(), s.cols(), std::move(data));
  }
  return LinearFormMatrix<Target>(std::move(slices), m.alphabet());
}

inline LinearFormMatrix<PrimeField> reduce_mod_p(const LinearFormMatrix<RationalField>& m,
                                                 const PrimeField& fp) {
  return map_coefficients(m, fp, [&](const Rational& q) { return fp.from_rational(q); });
}

inline LinearFormMatrix<PrimeSquareField> embed(const LinearFormMatrix<PrimeField>& m,
                                                const PrimeSquareField& ext) {
  return map_coefficients(m, ext, [&](const Fp& a) { return ext.embed(a); });
}

// ---------------------------------------------------------------------------

/// Linear strand of the ideal generated by a space of quadrics:
/// `first` is the kernel of (V*)^q -> S^3 V*, (l_i) -> sum l_i Q_i, with
/// vectors laid out as q blocks of n coefficients; `second` is the kernel
/// of (V*)^{s1} -> (S^2 V*)^q, (m_j) -> sum m_j S_j, laid out likewise.
/// Over QQ all bases are primitive integer vectors.
template <Field F>
struct LinearStrand {
  Subspace<F> quadrics;
  Subspace<F> first;
  Subspace<F> second;
};

struct StrandOptions {
  /// When set, each basis is replaced by a random invertible recombination
  /// before the next kernel is taken.
  std::optional<std::uint64_t> basis_seed;
  RankPolicy rank_policy;
};

/// Order 1 or 2 linear syzygies of the ideal generated by `quadrics`.
/// Order 2 throws PreconditionError when b_{2,4} != 0 (the kernel would
/// not count minimal second syzygies).
template <Field F>
Subspace<F> linear_syzygies(const Subspace<F>& quadrics, int order,
                            const StrandOptions& options = {});

template <Field F>
LinearStrand<F> linear_strand(const Subspace<F>& quadrics, const StrandOptions& options = {});

template <Field F>
struct M2Result {
  LinearFormMatrix<F> matrix;  // s1 x s2, entries in the dual alphabet
  std::vector<HomogeneousForm<F>> quadric_basis;
  BettiTable betti;
};

/// The matrix of linear second-order syzygies of I_f(2) for a cubic in six
/// variables whose apolar ideal has the generic Betti table; rows index
/// the first syzygies, columns the second. Throws PreconditionError for a
/// non-generic table.
template <Field F>
M2Result<F> m2_matrix(const HomogeneousForm<F>& f, const StrandOptions& options = {});

/// The basis rows of a subspace of S^d as forms in the dual alphabet.
template <Field F>
std::vector<HomogeneousForm<F>> basis_forms(const Subspace<F>& space);

}  // namespace apolarkit
