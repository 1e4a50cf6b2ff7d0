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

#include "apolarkit/text.hpp"

#include <cctype>
#include <map>

namespace apolarkit {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPolynomial run() {
    ParsedPolynomial out;
    std::map<Exponent, Rational> combined;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      const std::size_t term_start = pos_;
      ParsedTerm term = parse_term(out);
      term.coefficient *= sign;
      const std::size_t deg = exponent_degree(term.exponent);
      if (out.degree && *out.degree != deg && sgn(term.coefficient) != 0) {
        throw ParseError("inhomogeneous term of degree " + std::to_string(deg) +
                             " (expected " + std::to_string(*out.degree) + ")",
                         term_start);
      }
      if (sgn(term.coefficient) != 0 || !out.degree) {
        if (sgn(term.coefficient) != 0) out.degree = deg;
        combined[term.exponent] += term.coefficient;
      }
      first = false;
      skip_space();
    }
    for (auto& [e, c] : combined) {
      if (sgn(c) != 0) out.terms.push_back({e, c});
    }
    if (out.terms.empty()) out.degree.reset();
    return out;
  }

 private:
  ParsedTerm parse_term(ParsedPolynomial& out) {
    ParsedTerm term;
    term.coefficient = 1;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coefficient = parse_coefficient();
      skip_space();
      if (peek() != '*') return term;
      advance();
      skip_space();
    }
    for (;;) {
      parse_factor(term.exponent, out);
      have_factor = true;
      skip_space();
      if (peek() != '*') break;
      advance();
      skip_space();
    }
    (void)have_factor;
    return term;
  }

  Rational parse_coefficient() {
    mpz_class num(parse_digits());
    skip_space();
    if (peek() == '/') {
      advance();
      skip_space();
      const std::size_t at = pos_;
      mpz_class den(parse_digits());
      if (den == 0) throw ParseError("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  void parse_factor(Exponent& exponent, ParsedPolynomial& out) {
    const std::size_t at = pos_;
    const char letter = peek();
    if (letter != 'x' && letter != 'y' && letter != 'z' && letter != 'w') {
      fail("expected a variable");
    }
    if (out.alphabet != 0 && out.alphabet != letter) {
      throw ParseError("mixed variable alphabets", at);
    }
    out.alphabet = letter;
    advance();
    const std::size_t index_at = pos_;
    std::string digits = parse_digits();
    std::size_t index = std::stoul(digits);
    if (index >= kMaxVariables) throw ParseError("variable index too large", index_at);
    if (index > out.max_index) out.max_index = index;
    std::size_t power = 1;
    skip_space();
    if (peek() == '^') {
      advance();
      skip_space();
      const std::size_t exp_at = pos_;
      std::string e = parse_digits();
      if (e.size() > 3) throw ParseError("exponent too large", exp_at);
      power = std::stoul(e);
    }
    if (exponent[index] + power > 255) throw ParseError("exponent too large", at);
    exponent[index] = static_cast<std::uint8_t>(exponent[index] + power);
  }

  std::string parse_digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    return s;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = at_end() ? std::string("end of input") : "'" + std::string(1, peek()) + "'";
    throw ParseError(what + ", found " + found, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text) { return Parser(text).run(); }

namespace detail {

std::string format_monomial(char alphabet, std::size_t num_vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += alphabet;
    s += std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string format_terms(char alphabet, std::size_t num_vars,
                         const std::vector<std::pair<Exponent, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, coeff] : terms) {
    std::string magnitude = coeff;
    bool negative = false;
    if (!magnitude.empty() && (magnitude[0] == '-' || magnitude[0] == '+')) {
      negative = magnitude[0] == '-';
      magnitude.erase(0, 1);
    }
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const std::string mono = format_monomial(alphabet, num_vars, e);
    if (mono.empty()) {
      out += magnitude;
    } else {
      if (magnitude != "1") out += magnitude + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace detail

}  // namespace apolarkit
