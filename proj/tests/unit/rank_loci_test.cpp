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

#include <doctest.h>

#include <random>
#include <set>

#include "apolarkit/rank_loci.hpp"
#include "apolarkit/text.hpp"

using namespace apolarkit;

namespace {

template <Field F>
LinearFormMatrix<F> matrix_of(const F& field, std::size_t rows, std::size_t cols,
                              const std::vector<std::string>& entries) {
  std::vector<HomogeneousForm<F>> forms;
  for (const auto& e : entries) forms.push_back(parse_form(e, field, 3, 1, 'z'));
  return LinearFormMatrix<F>::from_entries(field, rows, cols, forms);
}

template <FiniteField F>
std::vector<Element<F>> point(const F& field, std::int64_t a, std::int64_t b, std::int64_t c) {
  return {field.from_int(a), field.from_int(b), field.from_int(c)};
}

}  // namespace

TEST_CASE("univariate gcd, square-free part and interpolation") {
  PrimeField fp(101);
  auto lin = [&](std::int64_t root) { return Univariate<PrimeField>(fp, {fp.from_int(-root), fp.one()}); };
  CHECK(gcd(lin(1) * lin(2), lin(2) * lin(3)) == lin(2));
  CHECK(squarefree_part(lin(1) * lin(1) * lin(2)) == lin(1) * lin(2));
  const auto f = lin(4) * lin(5) * lin(6) * lin(7);
  std::vector<Fp> xs, ys;
  for (int i = 0; i < 5; ++i) {
    xs.push_back(fp.from_int(10 + i));
    ys.push_back(f(xs.back()));
  }
  CHECK(lagrange_interpolate(fp, std::span<const Fp>(xs), std::span<const Fp>(ys)) == f);
}

TEST_CASE("projective points are enumerated once each") {
  CHECK(projective_point_count(5, 3) == 31);
  CHECK(projective_point_count(5, 6) == 3906);
  PrimeSquareField f25(5);
  std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
  for (std::uint64_t i = 0; i < projective_point_count(25, 3); ++i) {
    const auto p = projective_point(f25, 3, i);
    CHECK(normalize_point(f25, p) == p);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> key;
    for (const auto& c : p) key.emplace_back(c.re, c.im);
    seen.insert(key);
  }
  CHECK(seen.size() == 651);
}

TEST_CASE("determinant of a diagonal matrix gives degree 3 on lines") {
  PrimeField fp(101);
  const auto m = matrix_of(fp, 3, 3, {"z0", "0", "0", "0", "z1", "0", "0", "0", "z2"});
  std::mt19937_64 rng(41);
  for (int i = 0; i < 5; ++i) {
    const auto p = point(fp, rng() % 101, rng() % 101, 1 + rng() % 100);
    const auto q = point(fp, 1 + rng() % 100, rng() % 101, rng() % 101);
    const auto d = drop_degree_on_line(m, std::span<const Fp>(p), std::span<const Fp>(q), 2, rng());
    CHECK(d.full_degree == 3);
  }
  // Through a coordinate point z0 = z1 = 0 the gcd still counts the root at infinity.
  const auto p = point(fp, 1, 2, 3);
  const auto q = point(fp, 0, 0, 1);
  CHECK(drop_degree_on_line(m, std::span<const Fp>(p), std::span<const Fp>(q), 2, 7).full_degree == 3);
}

TEST_CASE("a locus of codimension two misses general lines") {
  PrimeField fp(101);
  // 2-minors are z0 z1, z0 z2, z1 z2: rank <= 1 only at the coordinate points.
  const auto m = matrix_of(fp, 3, 2, {"z0", "0", "0", "z1", "z2", "z2"});
  const auto p = point(fp, 3, 5, 7);
  const auto q = point(fp, 11, 13, 2);
  CHECK(drop_degree_on_line(m, std::span<const Fp>(p), std::span<const Fp>(q), 1, 3).full_degree == 0);
}

TEST_CASE("line degrees need characteristic above fifty") {
  PrimeField fp(7);
  const auto m = matrix_of(fp, 2, 2, {"z0", "0", "0", "z1"});
  const auto p = point(fp, 1, 2, 3);
  const auto q = point(fp, 0, 1, 1);
  CHECK_THROWS_AS(drop_degree_on_line(m, std::span<const Fp>(p), std::span<const Fp>(q), 1, 1),
                  PreconditionError);
}

TEST_CASE("interpolation recovers a determinantal cubic") {
  PrimeSquareField f49(7);
  const auto m = matrix_of(f49, 3, 3, {"z0", "z1", "0", "z1", "z2", "z0", "0", "z0", "z1"});
  // det = z0 z1 z2 - z0^3 - z1^3, expanded by hand.
  const auto curve = interpolate_drop_curve(m, 2, {3, 0, 5});
  CHECK(format_form(descend_to_prime_field(curve.form)) == "z0^3-z0*z1*z2+z1^3");
  for (const auto& p : curve.profile.drop_points()) {
    CHECK(f49.is_zero(evaluate(curve.form, std::span<const Fp2>(p))));
  }
}

TEST_CASE("interpolation fails loudly without enough conditions") {
  PrimeSquareField f9(3);
  const auto m = matrix_of(f9, 3, 3, {"z0", "z1", "0", "z1", "z2", "z0", "0", "z0", "z1"});
  CHECK_THROWS_AS(interpolate_drop_curve(m, 2, {9, 0, 1}), ComputationError);
}

TEST_CASE("singular points and their types") {
  PrimeSquareField f25(5);
  SUBCASE("triangle: three nodes") {
    const auto f = parse_form("z0*z1*z2", f25);
    const auto s = singular_points_plane_curve(f);
    CHECK(s.size() == 3);
    for (const auto& p : s) CHECK(classify_singularity(f, std::span<const Fp2>(p)) == Singularity::node);
  }
  SUBCASE("nodal cubic") {
    const auto f = parse_form("z0^3+z0^2*z2-z1^2*z2", f25);
    const auto s = singular_points_plane_curve(f);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == point(f25, 0, 0, 1));
    CHECK(classify_singularity(f, std::span<const Fp2>(s[0])) == Singularity::node);
  }
  SUBCASE("cuspidal cubic") {
    const auto f = parse_form("z0^3-z1^2*z2", f25);
    const auto s = singular_points_plane_curve(f);
    REQUIRE(s.size() == 1);
    CHECK(classify_singularity(f, std::span<const Fp2>(s[0])) == Singularity::worse);
  }
  SUBCASE("smooth conic") {
    const auto f = parse_form("z0^2+z1^2+z2^2", f25);
    CHECK(singular_points_plane_curve(f).empty());
    const auto on = point(f25, 0, 1, 2);  // 1 + 4 = 0 mod 5
    CHECK(classify_singularity(f, std::span<const Fp2>(on)) == Singularity::smooth);
    const auto off = point(f25, 1, 0, 0);
    CHECK_THROWS_AS(classify_singularity(f, std::span<const Fp2>(off)), PreconditionError);
  }
}

TEST_CASE("every non-reported point fails a singularity condition") {
  PrimeSquareField f25(5);
  const auto f = parse_form("z0^3+z0^2*z2-z1^2*z2", f25);
  const auto s = singular_points_plane_curve(f);
  std::vector<HomogeneousForm<PrimeSquareField>> conditions = {f};
  for (std::size_t v = 0; v < 3; ++v) conditions.push_back(partial_derivative(f, v));
  for (std::uint64_t i = 0; i < projective_point_count(25, 3); ++i) {
    const auto p = projective_point(f25, 3, i);
    bool all = true;
    for (const auto& c : conditions) all = all && f25.is_zero(evaluate(c, std::span<const Fp2>(p)));
    CHECK(all == (std::find(s.begin(), s.end(), p) != s.end()));
  }
}

TEST_CASE("rank profile counts drop points") {
  PrimeField f5(5);
  const auto m = matrix_of(f5, 2, 2, {"z0", "0", "0", "z1"});
  const auto profile = scan_ranks(m, 1);
  CHECK(profile.points.size() == 31);
  // z0 z1 = 0: two lines of 6 points meeting once.
  CHECK(profile.drop_points().size() == 11);
}
