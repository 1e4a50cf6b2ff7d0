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
 * Polynomial text grammar.
 *
 *   poly   := ['+'|'-'] term (('+'|'-') term)*  |  '0'
 *   term   := coeff | [coeff '*'] factor ('*' factor)*
 *   coeff  := digits ['/' digits]
 *   factor := letter digits ['^' digits]        letter in {x, y, z, w}
 *
 * Whitespace is ignored. Printing emits terms in graded-lex descending
 * order, drops unit coefficients, and writes signs as '+'/'-' between
 * terms, so print(parse(s)) == s for every printed s.
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apolarkit/form.hpp"

namespace apolarkit {

struct ParsedTerm {
  Exponent exponent{};
  Rational coefficient;
};

struct ParsedPolynomial {
  char alphabet = 0;            // 0 when no variable occurs
  std::size_t max_index = 0;    // largest variable index seen
  std::optional<std::size_t> degree;  // empty for the literal 0
  std::vector<ParsedTerm> terms;      // like terms already combined
};

/// Parses text into rational terms. Throws ParseError with the byte offset
/// of the offending character; rejects inhomogeneous input.
ParsedPolynomial parse_polynomial(std::string_view text);

/// Parses into a form over `field`. Variable count defaults from the
/// alphabet; `degree` is required only to parse the literal 0.
template <Field F>
HomogeneousForm<F> parse_form(std::string_view text, const F& field,
                              std::optional<std::size_t> num_vars = std::nullopt,
                              std::optional<std::size_t> degree = std::nullopt,
                              char default_alphabet = 'x') {
  ParsedPolynomial parsed = parse_polynomial(text);
  const char alphabet = parsed.alphabet != 0 ? parsed.alphabet : default_alphabet;
  const std::size_t n = num_vars.value_or(default_num_vars(alphabet));
  if (parsed.alphabet != 0 && parsed.max_index >= n) {
    throw ParseError("variable index " + std::to_string(parsed.max_index) + " exceeds " +
                         std::to_string(n) + " variables",
                     0);
  }
  std::size_t d = 0;
  if (parsed.degree) {
    d = *parsed.degree;
    if (degree && *degree != d) {
      throw ParseError("expected degree " + std::to_string(*degree) + ", found " +
                           std::to_string(d),
                       0);
    }
  } else if (degree) {
    d = *degree;
  } else if (!parsed.terms.empty()) {
    d = 0;
  }
  HomogeneousForm<F> f(field, n, d, alphabet);
  std::vector<Element<F>> coeffs(f.coefficients().begin(), f.coefficients().end());
  for (const auto& t : parsed.terms) {
    coeffs[f.basis().index_of(t.exponent)] += field.from_rational(t.coefficient);
  }
  return HomogeneousForm<F>(field, n, d, std::move(coeffs), alphabet);
}

namespace detail {
std::string format_terms(char alphabet, std::size_t num_vars,
                         const std::vector<std::pair<Exponent, std::string>>& terms);
std::string format_monomial(char alphabet, std::size_t num_vars, const Exponent& e);
}  // namespace detail

/// Canonical text of a form. Coefficients print as integers or p/q; over
/// finite fields as symmetric representatives; F_{p^2} elements outside
/// the prime field print as (a+b*t) and do not parse back.
template <Field F>
std::string format_form(const HomogeneousForm<F>& f) {
  const F& field = f.field();
  std::vector<std::pair<Exponent, std::string>> terms;
  for (std::size_t i = 0; i < f.basis().size(); ++i) {
    const auto& c = f.coefficient(i);
    if (field.is_zero(c)) continue;
    auto q = field.as_rational(c);
    terms.emplace_back(f.basis()[i], q ? q->get_str() : "+" + field.format(c));
  }
  return detail::format_terms(f.alphabet(), f.num_vars(), terms);
}

}  // namespace apolarkit
