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
 * JSON forms of the toolkit's values.
 *
 *   scalar      QQ: "p/q" string; F_p: integer in [0, p); F_{p^2}: [re, im]
 *   PointSet    [[c, ...], ...]
 *   form        polynomial text
 *   BettiTable  {"entries": [[i, j, b], ...]}, nonzero entries, sorted
 *   matrix      {"rows", "cols", "num_vars", "alphabet", "entries": [[text]]}
 *
 * Objects use insertion order, so equal values always print identically.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "apolarkit/apolarity.hpp"
#include "apolarkit/error.hpp"
#include "apolarkit/field.hpp"
#include "apolarkit/form.hpp"
#include "apolarkit/resolutions.hpp"
#include "apolarkit/text.hpp"

namespace apolarkit::io {

using Json = nlohmann::ordered_json;

inline ParseError json_error(const std::string& what) { return ParseError(what, 0); }

/// Parses text as JSON; syntax errors become ParseError with the byte offset.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

inline Json to_json(const RationalField&, const Rational& q) { return q.get_str(); }
inline Json to_json(const PrimeField&, const Fp& a) { return a.value; }
inline Json to_json(const PrimeSquareField&, const Fp2& a) { return Json::array({a.re, a.im}); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw json_error("expected a rational as string or integer");
  const std::string s = j.get<std::string>();
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw json_error("malformed rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

template <Field F>
Element<F> scalar_from_json(const F& field, const Json& j) {
  if constexpr (std::is_same_v<F, PrimeSquareField>) {
    if (j.is_array()) {
      if (j.size() != 2) throw json_error("F_{p^2} scalar needs two components");
      return field.from_rational(rational_from_json(j[0])) +
             field.from_rational(rational_from_json(j[1])) * field.generator();
    }
  }
  return field.from_rational(rational_from_json(j));
}

template <Field F>
Json point_to_json(const F& field, std::span<const Element<F>> p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_json(field, c));
  return out;
}

template <Field F>
Json to_json(const PointSet<F>& points) {
  Json out = Json::array();
  for (const auto& p : points.points()) {
    out.push_back(point_to_json(points.field(), std::span<const Element<F>>(p)));
  }
  return out;
}

/// Points of a common length; `num_vars` is inferred when zero.
template <Field F>
PointSet<F> point_set_from_json(const F& field, const Json& j, std::size_t num_vars = 0) {
  if (!j.is_array() || j.empty()) throw json_error("point set must be a nonempty array");
  std::vector<std::vector<Element<F>>> pts;
  for (const auto& row : j) {
    if (!row.is_array()) throw json_error("each point must be an array of coordinates");
    std::vector<Element<F>> p;
    for (const auto& c : row) p.push_back(scalar_from_json(field, c));
    if (num_vars == 0) num_vars = p.size();
    if (p.size() != num_vars) throw json_error("points have different lengths");
    pts.push_back(std::move(p));
  }
  return PointSet<F>(field, num_vars, std::move(pts));
}

template <Field F>
Json to_json(const HomogeneousForm<F>& f) {
  return format_form(f);
}

template <Field F>
Json to_json(const std::vector<HomogeneousForm<F>>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(format_form(f));
  return out;
}

inline Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries()) entries.push_back(Json::array({e.i, e.j, e.value}));
  Json out = Json::object();
  out["entries"] = std::move(entries);
  return out;
}

inline BettiTable betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw json_error("Betti table needs an \"entries\" array");
  }
  BettiTable t;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3) throw json_error("Betti entry must be [i, j, b]");
    const long b = e[2].get<long>();
    if (b < 0) throw json_error("negative Betti number");
    t.set(e[0].get<int>(), e[1].get<int>(), static_cast<std::uint64_t>(b));
  }
  return t;
}

template <Field F>
Json to_json(const LinearFormMatrix<F>& m) {
  Json out = Json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["num_vars"] = m.num_vars();
  out["alphabet"] = std::string(1, m.alphabet());
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_form(m.entry(r, c)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

template <Field F>
LinearFormMatrix<F> linear_matrix_from_json(const F& field, const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw json_error("matrix needs \"entries\"");
  const auto& rows_json = j["entries"];
  if (!rows_json.is_array() || rows_json.empty()) throw json_error("matrix has no rows");
  const std::size_t rows = rows_json.size();
  const std::size_t cols = rows_json[0].size();
  const std::size_t n = j.value("num_vars", std::size_t{6});
  const std::string alpha = j.value("alphabet", std::string("y"));
  if (alpha.size() != 1) throw json_error("alphabet must be one letter");
  std::vector<HomogeneousForm<F>> entries;
  for (const auto& row : rows_json) {
    if (!row.is_array() || row.size() != cols) throw json_error("ragged matrix");
    for (const auto& e : row) {
      entries.push_back(parse_form(e.get<std::string>(), field, n, 1, alpha[0]));
    }
  }
  auto m = LinearFormMatrix<F>::from_entries(field, rows, cols, entries);
  if (m.alphabet() != alpha[0]) m = LinearFormMatrix<F>(m.slices(), alpha[0]);
  return m;
}

}  // namespace apolarkit::io
