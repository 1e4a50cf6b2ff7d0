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
#include <regex>

#include "apolarkit/constructions.hpp"
#include "apolarkit/rank_loci.hpp"
#include "bridge.hpp"

using namespace apolarkit;
using Q = RationalField;

namespace {

/// Typeset polynomial (subscripted variables, implicit products, line
/// breaks and alignment marks) to grammar text in `alphabet`.
std::string from_typeset(std::string s, char alphabet) {
  s = std::regex_replace(s, std::regex(R"(\\\\|&|\s)"), "");
  s = std::regex_replace(s, std::regex(R"([xyz]_(\d)\^(\d))"), std::string("*") + alphabet + "$1^$2");
  s = std::regex_replace(s, std::regex(R"([xyz]_(\d))"), std::string("*") + alphabet + "$1");
  s = std::regex_replace(s, std::regex(R"((^|[+\-])\*)"), "$1");
  return s;
}

const char* const kTypesetCurve = R"(
&z_0^9-2z_0^8z_1+2z_0^7z_1^2-z_0^6z_1^3-z_0^5z_1^4-z_0^3z_1^6-2z_0^2z_1^7+2z_0^7z_1z_2-2z_0^6z_1^2z_2\\
&+z_0^5z_1^3z_2+z_0^3z_1^5z_2-z_0z_1^7z_2+2z_0^7z_2^2-z_0^6z_1z_2^2+2z_0^5z_1^2z_2^2-z_0^4z_1^3z_2^2\\
&-z_0^3z_1^4z_2^2+2z_0^2z_1^5z_2^2-z_0z_1^6z_2^2+z_1^7z_2^2-2z_0^5z_1z_2^3+z_0^4z_1^2z_2^3\\
&+ z_0^3z_1^3z_2^3+2z_0^2z_1^4z_2^3-z_0z_1^5z_2^3-2z_1^6z_2^3+z_0^5z_2^4+z_0^4z_1z_2^4\\
&+z_0^3z_1^2z_2^4+2z_0^2z_1^3z_2^4-z_0z_1^4z_2^4+2z_1^5z_2^4+z_0^4z_2^5-z_0^3z_1z_2^5+2z_0^2z_1^2z_2^5\\
&-z_0z_1^3z_2^5-2z_1^4z_2^5-2z_0^3z_2^6-2z_0^2z_1z_2^6-z_0z_1^2z_2^6-z_1^3z_2^6+z_0^2z_2^7+z_0z_1z_2^7\\
&+2z_1^2z_2^7+2z_0z_2^8-z_2^9
)";

const char* const kTypesetIr = R"(
2x_1^2x_2-2x_0x_2^2-2x_1^2x_3-2x_3^2x_4-x_0x_1x_5+2x_1x_2x_5\\
&+x_2^2x_5+x_2x_3x_5+3x_1x_4x_5+x_4^2x_5+3x_0x_5^2+x_3x_5^2
)";

const char* const kTypesetFamily[] = {
    "2y_2y_4y_5+y_1y_5^2", "y_2y_3^2+2y_1y_3y_4", "2y_1y_2y_3+y_1^2y_4+2y_0y_3y_4",
    "y_2^3+6y_0y_2y_5",    "y_1y_2^2+2y_0y_2y_4+2y_0y_1y_5",
};

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n) {
  Q q;
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(q.random(rng));
  return v;
}

}  // namespace

TEST_CASE("catalog strings are canonical") {
  Q q;
  for (const auto& e : catalog::entries()) {
    for (const auto& s : e.polynomials) CHECK(format_form(parse_form(s, q)) == s);
  }
  PrimeField f5(5);
  CHECK(format_form(parse_form(catalog::drop_curve_mod5(), f5)) == catalog::drop_curve_mod5());
}

TEST_CASE("golden: typeset forms convert to the catalog text") {
  PrimeField f5(5);
  Q q;
  CHECK(parse_form(from_typeset(kTypesetCurve, 'z'), f5) == parse_form(catalog::drop_curve_mod5(), f5));
  CHECK(parse_form(from_typeset(kTypesetIr, 'x'), q) == ir_cubic(q));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(parse_form(from_typeset(kTypesetFamily[i], 'x'), q) ==
          parse_form(catalog::family_components()[i], q));
  }
}

TEST_CASE("Veronese minors vanish on the Veronese surface and cut out rank-one matrices") {
  Q q;
  std::mt19937_64 rng(51);
  const auto minors = veronese_ideal_quadrics(q);
  CHECK(minors.size() == 6);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_vector(rng, 3);
    const auto nu = veronese_point(q, a[0], a[1], a[2]);
    for (const auto& m : minors) CHECK(evaluate(m, std::span<const Rational>(nu)) == 0);
    CHECK(evaluate(discriminant_cubic(q), std::span<const Rational>(nu)) == 0);
  }
  // The discriminant is the determinant of the symmetric matrix.
  const auto y = random_vector(rng, 6);
  const Rational det = y[0] * (y[3] * y[5] - y[4] * y[4]) - y[1] * (y[1] * y[5] - y[4] * y[2]) +
                       y[2] * (y[1] * y[4] - y[3] * y[2]);
  CHECK(evaluate(discriminant_cubic(q), std::span<const Rational>(y)) == det);
}

TEST_CASE("every member of the family is annihilated by the Veronese minors") {
  Q q;
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_vector(rng, 5);
    const auto f = family_f(q, p[0], p[1], p[2], p[3], p[4]);
    for (const auto& m : veronese_ideal_quadrics(q)) {
      CHECK(oracle::act(oracle::from_form(m), oracle::from_form(f)).empty());
    }
  }
}

TEST_CASE("s and m* invert each other with the frozen normalization") {
  Q q;
  std::mt19937_64 rng(53);
  // Re-derive c from s(a^6) = (a^2)^3 on a = z0: the pairing of x0^3 with
  // y0^3 is 3! while m(y0^3) paired with z0^6 is 6!.
  CHECK(s_map_normalization() == Rational(6) / Rational(720));
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_vector(rng, 3);
    const auto lin = HomogeneousForm<Q>::linear(q, a, 'z');
    const auto nu = veronese_point(q, a[0], a[1], a[2]);
    CHECK(s_map(power(lin, 6)) == power(HomogeneousForm<Q>::linear(q, nu, 'x'), 3));
  }
  const auto g = HomogeneousForm<Q>(q, 3, 6, random_vector(rng, 28), 'z');
  CHECK(m_star(s_map(g)) == g);
  // m* agrees with the oracle substitution.
  const auto f = reference_cubic(q);
  std::vector<oracle::Poly> sub;
  const int weights[] = {1, 2, 2, 1, 2, 1};
  const auto quad = oracle::monomials(3, 2);
  for (std::size_t i = 0; i < 6; ++i) {
    oracle::Poly t;
    t[quad[i]] = weights[i];
    sub.push_back(t);
  }
  CHECK(oracle::same(m_star(f), oracle::substitute(oracle::from_form(f), sub, 3)));
}

TEST_CASE("s_map and m_star check their inputs") {
  Q q;
  CHECK_THROWS_AS(s_map(parse_form("z0^5", q)), PreconditionError);
  CHECK_THROWS_AS(m_star(parse_form("x0^2", q)), PreconditionError);
  CHECK_THROWS_AS(s_map(parse_form("z0^6", PrimeField(5))), PreconditionError);
}

TEST_CASE("s(g) is apolar to the Veronese surface") {
  Q q;
  std::mt19937_64 rng(54);
  const auto g = HomogeneousForm<Q>(q, 3, 6, random_vector(rng, 28), 'z');
  const auto f = s_map(g);
  for (const auto& m : veronese_ideal_quadrics(q)) CHECK(apolar_action(m, f).is_zero());
  CHECK(is_apolar_variety(veronese_ideal_quadrics(q), f));
}

TEST_CASE("scroll and point configuration generators") {
  Q q;
  const auto scroll = scroll_minors(q);
  CHECK(scroll.size() == 6);
  std::mt19937_64 rng(55);
  for (int i = 0; i < 5; ++i) {
    const auto v = random_vector(rng, 4);
    const Rational s = v[0];
    const Rational t = v[1];
    const Rational u = v[2];
    const Rational w = v[3];
    // every column of the 2 x 4 matrix proportional to (s, t)
    const std::vector<Rational> p = {u * s * s, u * s * t, u * t * t, w * s * s, w * s * t, w * t * t};
    for (const auto& m : scroll) CHECK(evaluate(m, std::span<const Rational>(p)) == 0);
  }
  const auto config = conic_points_config(q);
  CHECK(config.point_minors.size() == 15);
  CHECK(config.conic.size() == 4);
  // The conic lies on the scroll.
  const std::vector<Rational> on_conic = {1, 2, 4, 0, 0, 0};
  for (const auto& m : scroll) CHECK(evaluate(m, std::span<const Rational>(on_conic)) == 0);
}

TEST_CASE("the typeset mod-5 form has a unique node at (0:1:0)") {
  PrimeField f5(5);
  PrimeSquareField f25(5);
  const auto curve = embed(parse_form(catalog::drop_curve_mod5(), f5), f25);
  const auto sing = singular_points_plane_curve(curve);
  REQUIRE(sing.size() == 1);
  CHECK(f25.is_zero(sing[0][0]));
  CHECK(sing[0][1] == f25.one());
  CHECK(f25.is_zero(sing[0][2]));
  CHECK(classify_singularity(curve, std::span<const Fp2>(sing[0])) == Singularity::node);
}

TEST_CASE("random power sums") {
  Q q;
  const auto ps = random_power_sum(q, 10, 56);
  CHECK(ps.forms.size() == 10);
  CHECK(in_span_of_powers(ps.points, ps.f));
  HomogeneousForm<Q> sum(q, 6, 3);
  for (std::size_t i = 0; i < 10; ++i) sum = sum + ps.weights[i] * power(ps.forms[i], 3);
  CHECK(sum == ps.f);
  const auto coplanar = random_power_sum(q, 10, 57, true);
  std::vector<std::vector<Rational>> first(coplanar.points.points().begin(),
                                           coplanar.points.points().begin() + 4);
  CHECK(rank(Matrix<Q>::from_rows(q, 6, first)) == 3);
  CHECK(random_power_sum(q, 10, 56).f == ps.f);
}
