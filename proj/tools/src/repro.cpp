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

#include "apolarkit/io/repro.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "apolarkit/constructions.hpp"
#include "apolarkit/rank_loci.hpp"

namespace apolarkit::repro {

namespace {

using Q = RationalField;

const M2Result<Q>& reference_m2() {
  static const M2Result<Q> m = m2_matrix(reference_cubic(Q{}));
  return m;
}

std::vector<Rational> random_rational_point(std::mt19937_64& rng, std::size_t n) {
  Q q;
  for (;;) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(q.random(rng));
    if (std::any_of(p.begin(), p.end(), [](const Rational& c) { return sgn(c) != 0; })) return p;
  }
}

template <Field F>
std::string point_text(const F& field, std::span<const Element<F>> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + field.format(p[i]);
  return s + ")";
}

std::string ranks_text(const std::vector<std::size_t>& ranks) {
  std::string s;
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? " " : "") + std::to_string(ranks[i]);
  return s;
}

CaseResult betti_generic(std::uint64_t) {
  CaseResult r{"betti-generic", {}};
  RankPolicy policy;
  policy.mode = RankPolicy::Mode::two_prime_confirmed;
  const BettiTable t = graded_betti(apolar_algebra(reference_cubic(Q{})), 6, 9, policy);
  r.checks.push_back({"generic Betti table", t == catalog::generic_cubic_table(), t.render()});
  r.data["betti"] = io::to_json(t);
  return r;
}

CaseResult points(std::size_t count, const BettiTable& expected, std::uint64_t seed) {
  CaseResult r{"points" + std::to_string(count), {}};
  Q q;
  r.data["tables"] = io::Json::array();
  for (std::uint64_t k = 0; k < 5; ++k) {
    std::mt19937_64 rng(seed + k);
    const auto z = PointSet<Q>::random(q, 6, count, rng);
    RankPolicy policy;
    policy.mode = RankPolicy::Mode::two_prime;
    policy.seed = seed + k;
    const BettiTable t = graded_betti(coordinate_ring(z, 8), 5, 7, policy);
    r.checks.push_back({"seed " + std::to_string(seed + k), t == expected, t.render()});
    r.data["tables"].push_back(io::to_json(t));
  }
  return r;
}

CaseResult lefiniteveronese(std::uint64_t seed) {
  CaseResult r{"lefiniteveronese", {}};
  Q q;
  const auto f = reference_cubic(q);
  bool annihilated = true;
  for (const auto& m : veronese_ideal_quadrics(q)) annihilated = annihilated && apolar_action(m, f).is_zero();
  r.checks.push_back({"Veronese minors annihilate f", annihilated, ""});

  const auto& m2 = reference_m2();
  r.checks.push_back({"generic Betti table", m2.betti == catalog::generic_cubic_table(), ""});
  const bool shape = m2.matrix.rows() == 35 && m2.matrix.cols() == 21;
  r.checks.push_back({"M2 is 35 x 21", shape,
                      std::to_string(m2.matrix.rows()) + " x " + std::to_string(m2.matrix.cols())});
  std::mt19937_64 rng(seed);
  const auto p = random_rational_point(rng, 6);
  const std::size_t generic_rank = rank_at_point(m2.matrix, std::span<const Rational>(p));
  r.checks.push_back({"M2 rank 21 at a random point", generic_rank == 21, std::to_string(generic_rank)});

  PrimeField f5(5);
  PrimeSquareField f25(5);
  const auto plane = restrict_linear_matrix(m2.matrix, reference_plane_substitution(q));
  const auto m25 = embed(reduce_mod_p(plane, f5), f25);
  const auto curve = interpolate_drop_curve(m25, 20, {9, 12, seed});
  const auto c5 = descend_to_prime_field(curve.form);
  const auto reference = parse_form(catalog::drop_curve_mod5(), f5);
  r.data["curve"] = format_form(c5);
  r.checks.push_back({"curve proportional to the reference form", c5 == normalize_leading(reference),
                      "computed " + format_form(c5)});

  const auto c25 = embed(c5, f25);
  const auto sing = singular_points_plane_curve(c25);
  std::string where;
  for (const auto& s : sing) where += point_text(f25, std::span<const Fp2>(s)) + " ";
  const bool at_010 = sing.size() == 1 && f25.is_zero(sing[0][0]) && f25.is_zero(sing[0][2]);
  r.checks.push_back({"unique singular point (0:1:0)", at_010, "found " + where});
  const bool node = sing.size() == 1 &&
                    classify_singularity(c25, std::span<const Fp2>(sing[0])) == Singularity::node;
  r.checks.push_back({"singular point is a node", node,
                      sing.size() == 1 ? to_string(classify_singularity(c25, std::span<const Fp2>(sing[0])))
                                       : std::to_string(sing.size()) + " singular points"});
  return r;
}

CaseResult ir_example(std::uint64_t seed) {
  CaseResult r{"ir-example", {}};
  Q q;
  const auto f = ir_cubic(q);
  r.checks.push_back({"apolar to the quartic scroll", is_apolar_variety(scroll_minors(q), f), ""});
  const auto m2 = m2_matrix(f);
  r.checks.push_back({"generic Betti table", m2.betti == catalog::generic_cubic_table(), ""});
  const auto plane = restrict_linear_matrix(m2.matrix, plane_restriction_forms(q, 0, 1, 2));
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> ranks;
  for (int i = 0; i < 5; ++i) {
    const auto p = random_rational_point(rng, 3);
    ranks.push_back(rank_at_point(plane, std::span<const Rational>(p)));
  }
  const bool full = std::all_of(ranks.begin(), ranks.end(), [](std::size_t k) { return k == 21; });
  r.checks.push_back({"rank 21 on V(x3,x4,x5) at 5 points", full, ranks_text(ranks)});
  return r;
}

CaseResult veronese_rank_drop(std::uint64_t seed) {
  CaseResult r{"veronese-rank-drop", {}};
  Q q;
  const auto& m2 = reference_m2();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> ranks;
  for (int i = 0; i < 20; ++i) {
    const auto a = random_rational_point(rng, 3);
    const auto nu = veronese_point(q, a[0], a[1], a[2]);
    ranks.push_back(rank_at_point(m2.matrix, std::span<const Rational>(nu)));
  }
  const bool bounded = std::all_of(ranks.begin(), ranks.end(), [](std::size_t k) { return k <= 20; });
  const auto exact = std::count(ranks.begin(), ranks.end(), std::size_t{20});
  r.checks.push_back({"rank <= 20 at 20 Veronese points", bounded, ranks_text(ranks)});
  r.checks.push_back({"rank exactly 20 at a majority", exact > 10, std::to_string(exact) + " of 20"});
  return r;
}

CaseResult thom_porteous(std::uint64_t seed) {
  CaseResult r{"thom-porteous", {}};
  PrimeField f101(101);
  const auto m = reduce_mod_p(reference_m2().matrix, f101);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> degrees;
  while (degrees.size() < 5) {
    std::vector<Fp> p, d;
    for (int i = 0; i < 6; ++i) {
      p.push_back(f101.random(rng));
      d.push_back(f101.random(rng));
    }
    try {
      const auto ld = drop_degree_on_line(m, std::span<const Fp>(p), std::span<const Fp>(d), 20, rng());
      degrees.push_back(ld.full_degree);
    } catch (const PreconditionError&) {
      // degenerate line
    }
  }
  const bool nine = std::all_of(degrees.begin(), degrees.end(), [](std::size_t k) { return k == 9; });
  r.checks.push_back({"degree 9 on 5 random lines over F_101", nine, ranks_text(degrees)});
  return r;
}

CaseResult drk3_scan(std::uint64_t) {
  CaseResult r{"drk3-scan", {}};
  PrimeField f5(5);
  const std::size_t m = min_partial_rank_scan(reduce_mod_p(reference_cubic(Q{}), f5));
  r.checks.push_back({"no partial of rank <= 3 over P^5(F_5)", m >= 4, "minimum " + std::to_string(m)});
  r.data["min_partial_rank"] = m;
  return r;
}

}  // namespace

bool CaseResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = {
      "betti-generic", "points9",       "points10",      "lefiniteveronese",
      "ir-example",    "veronese-rank-drop", "thom-porteous", "drk3-scan",
  };
  return names;
}

bool is_case(const std::string& name) {
  const auto& n = case_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

CaseResult run_case(const std::string& name, std::uint64_t seed) {
  if (name == "betti-generic") return betti_generic(seed);
  if (name == "points9") return points(9, catalog::points9_table(), seed);
  if (name == "points10") return points(10, catalog::points10_table(), seed);
  if (name == "lefiniteveronese") return lefiniteveronese(seed);
  if (name == "ir-example") return ir_example(seed);
  if (name == "veronese-rank-drop") return veronese_rank_drop(seed);
  if (name == "thom-porteous") return thom_porteous(seed);
  if (name == "drk3-scan") return drk3_scan(seed);
  throw PreconditionError("unknown repro case '" + name + "'");
}

io::Json to_json(const CaseResult& result) {
  io::Json out = io::Json::object();
  out["case"] = result.name;
  out["status"] = result.passed() ? "PASS" : "FAIL";
  io::Json checks = io::Json::array();
  for (const auto& c : result.checks) {
    io::Json j = io::Json::object();
    j["check"] = c.name;
    j["status"] = c.pass ? "PASS" : "FAIL";
    j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["data"] = result.data;
  return out;
}

std::string render_text(const CaseResult& result) {
  std::ostringstream out;
  for (const auto& c : result.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.detail.find('\n') != std::string::npos) {
      out << ":\n" << c.detail;
      if (c.detail.back() != '\n') out << "\n";
    } else {
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  out << (result.passed() ? "PASS " : "FAIL ") << result.name << "\n";
  return out.str();
}

}  // namespace apolarkit::repro
