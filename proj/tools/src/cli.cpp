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

#include "apolarkit/io/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "apolarkit/constructions.hpp"
#include "apolarkit/io/json.hpp"
#include "apolarkit/io/repro.hpp"
#include "apolarkit/io/report.hpp"
#include "apolarkit/rank_loci.hpp"

namespace apolarkit::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string field;  // empty: command default
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

/// Output of one command: the report, an optional text body replacing the
/// generic renderer, and the exit code.
struct Outcome {
  Outcome() = default;
  explicit Outcome(Json r) : report(std::move(r)) {}

  Json report;
  std::string text;
  int code = ok;
};

std::string read_input(const std::string& arg) {
  if (!arg.starts_with("@")) return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw PreconditionError("cannot read input file '" + arg.substr(1) + "'");
  std::ostringstream s;
  s << in.rdbuf();
  std::string text = s.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

Json begin_report(const std::string& command, const Json& canonical_input, const std::string& field,
                  std::uint64_t seed) {
  return io::report_header(command, canonical_input.dump(), field, seed);
}

template <class Visitor>
auto with_field(const io::AnyField& field, Visitor&& v) {
  return std::visit(std::forward<Visitor>(v), field);
}

RankPolicy parse_policy(const std::string& name, std::uint64_t seed) {
  RankPolicy p;
  p.seed = seed ^ 0x5eedULL;
  if (name == "exact") {
    p.mode = RankPolicy::Mode::exact;
  } else if (name == "two-prime") {
    p.mode = RankPolicy::Mode::two_prime;
  } else if (name == "confirmed") {
    p.mode = RankPolicy::Mode::two_prime_confirmed;
  } else {
    throw ParseError("unknown rank policy '" + name + "' (want exact, two-prime, confirmed)", 0);
  }
  return p;
}

template <Field F>
std::vector<Element<F>> random_point(const F& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Element<F>> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(random_element(field, rng));
    if (std::any_of(p.begin(), p.end(), [&](const auto& c) { return !field.is_zero(c); })) return p;
  }
}

// --------------------------------------------------------------------------- apolar

struct ApolarArgs {
  std::string input;
};

Outcome run_apolar(const Common& c, const ApolarArgs& a) {
  const std::string text = read_input(a.input);
  const auto field = io::parse_field(c.field.empty() ? "q" : c.field);
  return with_field(field, [&](const auto& fld) {
    const auto f = parse_form(text, fld);
    Json input = Json::object();
    input["form"] = format_form(f);
    Outcome o(begin_report("apolar", input, fld.descriptor(), c.seed));
    Json& r = o.report;
    r["form"] = format_form(f);
    r["num_vars"] = f.num_vars();
    r["degree"] = f.degree();
    const auto h = apolar_hilbert_function(f);
    r["hilbert_function"] = h;
    std::vector<std::size_t> ideal_dims;
    for (std::size_t k = 0; k < h.size(); ++k) ideal_dims.push_back(monomial_count(f.num_vars(), k) - h[k]);
    r["apolar_ideal_dims"] = ideal_dims;
    if (f.degree() >= 2) r["q_f"] = io::to_json(basis_forms(q_f(f)));
    if (f.degree() >= 1) r["partials"] = io::to_json(basis_forms(partial_space(f)));
    return o;
  });
}

// --------------------------------------------------------------------------- betti

struct BettiArgs {
  std::string cubic;
  std::string points;
  std::size_t random_points = 0;
  std::size_t num_vars = 6;
  std::optional<int> max_i;
  std::optional<int> max_j;
  std::string rank;
};

Outcome run_betti(const Common& c, const BettiArgs& a) {
  const int sources = !a.cubic.empty() + !a.points.empty() + (a.random_points > 0);
  if (sources != 1) {
    throw PreconditionError("betti needs exactly one of --cubic, --points, --random-points");
  }
  const auto field = io::parse_field(c.field.empty() ? "q" : c.field);
  return with_field(field, [&](const auto& fld) -> Outcome {
    using F = std::decay_t<decltype(fld)>;
    Json input = Json::object();
    Json source = Json::object();
    std::optional<GradedModule<F>> module;
    int need_i = 0;
    int need_j = 0;
    int max_i = 0;
    int max_j = 0;
    if (!a.cubic.empty()) {
      const auto f = parse_form(read_input(a.cubic), fld);
      input["form"] = format_form(f);
      source["kind"] = "apolar_algebra";
      source["form"] = format_form(f);
      need_i = static_cast<int>(f.num_vars());
      need_j = static_cast<int>(f.num_vars() + f.degree());
      max_i = a.max_i.value_or(need_i);
      max_j = a.max_j.value_or(need_j);
      if (max_i < need_i || max_j < need_j) {
        throw PreconditionError("undersized degree window: the apolar algebra of this form needs max_i >= " +
                                std::to_string(need_i) + " and max_j >= " + std::to_string(need_j));
      }
      module = apolar_algebra(f);
    } else {
      std::optional<PointSet<F>> z;
      if (!a.points.empty()) {
        z = io::point_set_from_json(fld, io::parse_json(read_input(a.points)));
      } else {
        std::mt19937_64 rng(c.seed);
        z = PointSet<F>::random(fld, a.num_vars, a.random_points, rng);
      }
      input["points"] = io::to_json(*z);
      source["kind"] = "points";
      source["points"] = io::to_json(*z);
      std::size_t h = 0;
      while (rank(evaluation_matrix(*z, h)) < z->size()) ++h;
      need_i = static_cast<int>(z->num_vars()) - 1;
      need_j = need_i + static_cast<int>(h);
      max_i = a.max_i.value_or(need_i);
      max_j = a.max_j.value_or(need_j);
      if (max_i < need_i || max_j < need_j) {
        throw PreconditionError("undersized degree window: these points need max_i >= " +
                                std::to_string(need_i) + " and max_j >= " + std::to_string(need_j));
      }
      module = coordinate_ring(*z, static_cast<std::size_t>(max_j) + 1);
    }
    const std::string policy_name =
        !a.rank.empty() ? a.rank : (!a.cubic.empty() ? "confirmed" : "two-prime");
    const RankPolicy policy = parse_policy(policy_name, c.seed);
    input["window"] = Json::array({max_i, max_j});
    input["rank"] = policy_name;
    const BettiTable t = graded_betti(*module, max_i, max_j, policy);
    Outcome o(begin_report("betti", input, fld.descriptor(), c.seed));
    o.report["source"] = source;
    o.report["window"] = Json::array({max_i, max_j});
    o.report["rank_policy"] = policy_name;
    o.report["betti"] = io::to_json(t);
    o.text = t.render();
    return o;
  });
}

// --------------------------------------------------------------------------- m2

struct M2Args {
  std::string input;
  std::size_t points = 3;
};

Outcome run_m2(const Common& c, const M2Args& a) {
  const auto field = io::parse_field(c.field.empty() ? "q" : c.field);
  return with_field(field, [&](const auto& fld) {
    const auto f = parse_form(read_input(a.input), fld);
    Json input = Json::object();
    input["form"] = format_form(f);
    input["points"] = a.points;
    const auto m2 = m2_matrix(f);
    Outcome o(begin_report("m2", input, fld.descriptor(), c.seed));
    Json& r = o.report;
    r["form"] = format_form(f);
    r["shape"] = Json::array({m2.matrix.rows(), m2.matrix.cols()});
    r["betti"] = io::to_json(m2.betti);
    r["quadric_basis"] = io::to_json(m2.quadric_basis);
    std::mt19937_64 rng(c.seed);
    Json ranks = Json::array();
    for (std::size_t i = 0; i < a.points; ++i) {
      const auto p = random_point(fld, m2.matrix.num_vars(), rng);
      Json e = Json::object();
      e["point"] = io::point_to_json(fld, std::span<const Element<std::decay_t<decltype(fld)>>>(p));
      e["rank"] = rank_at_point(m2.matrix, std::span<const Element<std::decay_t<decltype(fld)>>>(p));
      ranks.push_back(std::move(e));
    }
    r["ranks"] = std::move(ranks);
    r["matrix"] = io::to_json(m2.matrix);
    return o;
  });
}

// --------------------------------------------------------------------------- ranklocus

struct RankLocusArgs {
  std::string input;
  std::size_t threshold = 20;
  std::size_t lines = 5;
  std::uint32_t line_prime = 101;
  std::string plane = "reference";
  std::size_t curve_lines = 12;
};

std::vector<HomogeneousForm<RationalField>> parse_plane(const std::string& text) {
  RationalField q;
  if (text == "reference") return reference_plane_substitution(q);
  std::vector<HomogeneousForm<RationalField>> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(parse_form(item, q, 3, 1, 'z'));
  if (out.size() != 6) throw ParseError("--plane needs six comma-separated linear forms in z", 0);
  return out;
}

Outcome run_ranklocus(const Common& c, const RankLocusArgs& a) {
  const auto field = io::parse_field(c.field.empty() ? "fp:5" : c.field);
  std::uint32_t p = 0;
  if (const auto* fp = std::get_if<PrimeField>(&field)) p = fp->modulus();
  if (const auto* fp2 = std::get_if<PrimeSquareField>(&field)) p = static_cast<std::uint32_t>(fp2->characteristic());
  if (p == 0) throw PreconditionError("ranklocus needs --field fp:<p> or fp2:<p>");
  RationalField q;
  const auto f = a.input.empty() ? reference_cubic(q) : parse_form(read_input(a.input), q);
  Json input = Json::object();
  input["form"] = format_form(f);
  input["threshold"] = a.threshold;
  input["lines"] = a.lines;
  input["line_prime"] = a.line_prime;
  input["plane"] = a.plane;
  input["curve_lines"] = a.curve_lines;
  Outcome o(begin_report("ranklocus", input, io::descriptor(field), c.seed));
  Json& r = o.report;

  const auto m2 = m2_matrix(f);
  Json matrix = Json::object();
  matrix["rows"] = m2.matrix.rows();
  matrix["cols"] = m2.matrix.cols();
  matrix["num_vars"] = m2.matrix.num_vars();
  matrix["built_over"] = "q";
  matrix["form"] = format_form(f);
  r["matrix"] = matrix;
  r["threshold"] = a.threshold;

  PrimeField fl(a.line_prime);
  const auto ml = reduce_mod_p(m2.matrix, fl);
  std::mt19937_64 rng(c.seed);
  Json lines = Json::array();
  std::size_t attempts = 0;
  while (lines.size() < a.lines) {
    if (++attempts > 20 * a.lines + 20) throw ComputationError("could not find nondegenerate lines");
    const auto pt = random_point(fl, ml.num_vars(), rng);
    const auto dir = random_point(fl, ml.num_vars(), rng);
    try {
      const auto ld = drop_degree_on_line(ml, std::span<const Fp>(pt), std::span<const Fp>(dir),
                                          a.threshold, rng());
      Json e = Json::object();
      e["field"] = fl.descriptor();
      e["point"] = io::point_to_json(fl, std::span<const Fp>(pt));
      e["direction"] = io::point_to_json(fl, std::span<const Fp>(dir));
      e["degree"] = ld.full_degree;
      if (ld.squarefree_degree) e["squarefree_degree"] = *ld.squarefree_degree;
      e["infinity_multiplicity"] = ld.infinity_multiplicity;
      lines.push_back(std::move(e));
    } catch (const PreconditionError&) {
      // degenerate line or a line inside the locus
    }
  }
  r["line_degrees"] = std::move(lines);

  if (a.plane == "none") {
    r["curve"] = nullptr;
    r["singular_points"] = Json::array();
    r["classification"] = Json::array();
    return o;
  }
  PrimeField fp(p);
  PrimeSquareField fp2(p);
  const auto plane = restrict_linear_matrix(m2.matrix, parse_plane(a.plane));
  const auto sampled = embed(reduce_mod_p(plane, fp), fp2);
  const auto curve = interpolate_drop_curve(sampled, a.threshold, {9, a.curve_lines, c.seed});
  const auto form = descend_to_prime_field(curve.form);
  Json cj = Json::object();
  cj["form"] = format_form(form);
  cj["degree"] = form.degree();
  cj["coefficient_field"] = fp.descriptor();
  cj["sample_field"] = fp2.descriptor();
  cj["drop_points"] = curve.point_conditions;
  cj["line_conditions"] = curve.lines_used;
  r["curve"] = std::move(cj);
  const auto lifted = embed(form, fp2);
  Json sing = Json::array();
  Json kinds = Json::array();
  for (const auto& s : singular_points_plane_curve(lifted)) {
    const auto pt = io::point_to_json(fp2, std::span<const Fp2>(s));
    sing.push_back(pt);
    Json k = Json::object();
    k["point"] = pt;
    k["type"] = to_string(classify_singularity(lifted, std::span<const Fp2>(s)));
    kinds.push_back(std::move(k));
  }
  r["singular_points"] = std::move(sing);
  r["classification"] = std::move(kinds);
  return o;
}

// --------------------------------------------------------------------------- catalog

Outcome run_catalog(const Common& c, const std::string& name) {
  Json input = Json::object();
  input["name"] = name;
  Outcome o(begin_report("catalog", input, "q", c.seed));
  Json entries = Json::array();
  for (const auto& e : catalog::entries()) {
    if (!name.empty() && e.name != name) continue;
    Json j = Json::object();
    j["name"] = e.name;
    j["kind"] = e.kind;
    if (e.kind == "betti") {
      j["betti"] = io::to_json(e.betti);
    } else {
      j["polynomials"] = e.polynomials;
    }
    entries.push_back(std::move(j));
  }
  if (entries.empty()) throw PreconditionError("no catalog entry named '" + name + "'");
  o.report["entries"] = std::move(entries);
  return o;
}

// --------------------------------------------------------------------------- powersum

struct PowerSumArgs {
  std::size_t k = 10;
  bool coplanar = false;
  std::string cubic;
  std::string points;
};

Outcome run_powersum(const Common& c, const PowerSumArgs& a) {
  const auto field = io::parse_field(c.field.empty() ? "q" : c.field);
  return with_field(field, [&](const auto& fld) {
    using F = std::decay_t<decltype(fld)>;
    Json input = Json::object();
    std::optional<PointSet<F>> z;
    std::optional<HomogeneousForm<F>> f;
    Json generated = nullptr;
    if (!a.cubic.empty() || !a.points.empty()) {
      if (a.cubic.empty() || a.points.empty()) {
        throw PreconditionError("powersum certification needs both --cubic and --points");
      }
      f = parse_form(read_input(a.cubic), fld);
      z = io::point_set_from_json(fld, io::parse_json(read_input(a.points)), f->num_vars());
      input["form"] = format_form(*f);
      input["points"] = io::to_json(*z);
    } else {
      const auto ps = random_power_sum(fld, a.k, c.seed, a.coplanar);
      input["k"] = a.k;
      input["coplanar"] = a.coplanar;
      generated = Json::object();
      generated["forms"] = io::to_json(ps.forms);
      Json w = Json::array();
      for (const auto& x : ps.weights) w.push_back(io::to_json(fld, x));
      generated["weights"] = std::move(w);
      f = ps.f;
      z = ps.points;
    }
    Outcome o(begin_report("powersum", input, fld.descriptor(), c.seed));
    Json& r = o.report;
    if (!generated.is_null()) r["generated"] = std::move(generated);
    r["form"] = format_form(*f);
    r["points"] = io::to_json(*z);
    r["is_apolar_pointset"] = is_apolar_pointset(*z, *f);
    r["in_span_of_powers"] = in_span_of_powers(*z, *f);
    r["independent_conditions_on_cubics"] = imposes_independent_conditions(*z, 3);
    r["cubic_singular_along_points"] = exists_cubic_singular_along(*z);
    return o;
  });
}

// --------------------------------------------------------------------------- repro

Outcome run_repro(const Common& c, const std::string& name) {
  if (name != "all" && !repro::is_case(name)) {
    std::string known;
    for (const auto& n : repro::case_names()) known += " " + n;
    throw UsageError("unknown repro case '" + name + "'; known cases:" + known + " all");
  }
  Json input = Json::object();
  input["case"] = name;
  Outcome o(begin_report("repro", input, "q", c.seed));
  std::vector<std::string> names = name == "all" ? repro::case_names() : std::vector<std::string>{name};
  Json cases = Json::array();
  std::string text;
  bool all_pass = true;
  for (const auto& n : names) {
    const auto result = repro::run_case(n, c.seed);
    all_pass = all_pass && result.passed();
    cases.push_back(repro::to_json(result));
    text += repro::render_text(result);
  }
  o.report["status"] = all_pass ? "PASS" : "FAIL";
  o.report["cases"] = std::move(cases);
  o.text = text;
  o.code = all_pass ? ok : mismatch;
  return o;
}

// ---------------------------------------------------------------------------

void emit(const Common& c, const Outcome& o, std::ostream& out) {
  std::string body;
  if (c.format == "json") {
    body = o.report.dump(2) + "\n";
  } else if (o.text.empty()) {
    body = io::render_text(o.report);
  } else {
    Json head = Json::object();
    for (const char* key : {"command", "version", "input_hash", "field", "seed"}) head[key] = o.report[key];
    body = io::render_text(head) + o.text;
  }
  if (c.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw PreconditionError("cannot write '" + c.out + "'");
  file << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Apolarity, Betti tables and rank loci for cubic fourfolds", "apolarkit"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--field", common.field, "q | fp:<p> | fp2:<p>");
  app.add_option("--seed", common.seed, "seed for every randomized step");
  app.add_option("--out", common.out, "write the report here instead of stdout");
  app.add_option("--format", common.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.set_version_flag("--version", std::string(version_string));

  ApolarArgs apolar;
  auto* c_apolar = app.add_subcommand("apolar", "apolar ideal dimensions, Q_f and partials of a form");
  c_apolar->add_option("form", apolar.input, "polynomial text or @file")->required();

  BettiArgs betti;
  auto* c_betti = app.add_subcommand("betti", "graded Betti table of an apolar algebra or point set");
  c_betti->add_option("--cubic", betti.cubic, "form (text or @file)");
  c_betti->add_option("--points", betti.points, "point set JSON (text or @file)");
  c_betti->add_option("--random-points", betti.random_points, "number of random points");
  c_betti->add_option("--num-vars", betti.num_vars, "ambient variables for random points");
  c_betti->add_option("--max-i", betti.max_i);
  c_betti->add_option("--max-j", betti.max_j);
  c_betti->add_option("--rank", betti.rank, "exact | two-prime | confirmed");

  M2Args m2;
  auto* c_m2 = app.add_subcommand("m2", "matrix of linear second syzygies of a cubic");
  c_m2->add_option("form", m2.input, "cubic (text or @file)")->required();
  c_m2->add_option("--points", m2.points, "random points to rank at");

  RankLocusArgs rl;
  auto* c_rl = app.add_subcommand("ranklocus", "rank-drop locus of M2: line degrees and plane curve");
  c_rl->add_option("form", rl.input, "cubic (text or @file); default f(1,-1,1,-1,1)");
  c_rl->add_option("--threshold", rl.threshold);
  c_rl->add_option("--lines", rl.lines, "random lines for degree checks");
  c_rl->add_option("--line-prime", rl.line_prime, "prime for the line checks (> 50)");
  c_rl->add_option("--plane", rl.plane, "reference | none | six comma-separated z-forms");
  c_rl->add_option("--curve-lines", rl.curve_lines, "lines imposed during interpolation");

  std::string catalog_name;
  auto* c_catalog = app.add_subcommand("catalog", "named constants as polynomial text");
  c_catalog->add_option("name", catalog_name);

  PowerSumArgs ps;
  auto* c_ps = app.add_subcommand("powersum", "random power sum or certification of a given one");
  c_ps->add_option("--k", ps.k, "number of linear forms");
  c_ps->add_flag("--coplanar", ps.coplanar, "first four forms in a 3-dimensional space");
  c_ps->add_option("--cubic", ps.cubic);
  c_ps->add_option("--points", ps.points);

  std::string repro_case;
  auto* c_repro = app.add_subcommand("repro", "reproduce a reference computation");
  c_repro->add_option("case", repro_case)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << version_string << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return parse_error;
  }

  try {
    Outcome o;
    if (c_apolar->parsed()) o = run_apolar(common, apolar);
    else if (c_betti->parsed()) o = run_betti(common, betti);
    else if (c_m2->parsed()) o = run_m2(common, m2);
    else if (c_rl->parsed()) o = run_ranklocus(common, rl);
    else if (c_catalog->parsed()) o = run_catalog(common, catalog_name);
    else if (c_ps->parsed()) o = run_powersum(common, ps);
    else o = run_repro(common, repro_case);
    emit(common, o, out);
    return o.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return parse_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return precondition;
  } catch (const Error& e) {
    err << "computation failed: " << e.what() << "\n";
    return failure;
  }
}

}  // namespace apolarkit::cli
