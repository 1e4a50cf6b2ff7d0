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
 * Independent reference arithmetic for the tests: sparse polynomials as
 * exponent -> rational maps, naive differentiation and substitution, and
 * plain Gauss-Jordan rank. Shares nothing with the library beyond gmpxx.
 */

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace oracle {

using Exp = std::vector<int>;
using Poly = std::map<Exp, mpq_class>;

inline void add_term(Poly& p, const Exp& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline Poly add(const Poly& a, const Poly& b, const mpq_class& scale = 1) {
  Poly r = a;
  for (const auto& [e, c] : b) add_term(r, e, scale * c);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exp e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(r, e, ca * cb);
    }
  }
  return r;
}

inline Poly pow(const Poly& a, int k, std::size_t n) {
  Poly r;
  r[Exp(n, 0)] = 1;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

inline Poly linear(const std::vector<mpq_class>& coeffs) {
  Poly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exp e(coeffs.size(), 0);
    e[i] = 1;
    add_term(r, e, coeffs[i]);
  }
  return r;
}

inline Poly derivative(const Poly& p, std::size_t var) {
  Poly r;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    Exp d = e;
    d[var] -= 1;
    add_term(r, d, c * e[var]);
  }
  return r;
}

/// The operator D (in dual variables) applied to f by repeated partials.
inline Poly act(const Poly& op, const Poly& f) {
  Poly r;
  for (const auto& [e, c] : op) {
    Poly t = f;
    for (std::size_t v = 0; v < e.size(); ++v) {
      for (int k = 0; k < e[v]; ++k) t = derivative(t, v);
    }
    r = add(r, t, c);
  }
  return r;
}

/// x_i -> subs[i]; subs share one variable count.
inline Poly substitute(const Poly& p, const std::vector<Poly>& subs, std::size_t target_vars) {
  Poly r;
  for (const auto& [e, c] : p) {
    Poly t;
    t[Exp(target_vars, 0)] = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      for (int k = 0; k < e[v]; ++k) t = mul(t, subs[v]);
    }
    r = add(r, t);
  }
  return r;
}

inline mpq_class evaluate(const Poly& p, const std::vector<mpq_class>& x) {
  mpq_class s = 0;
  for (const auto& [e, c] : p) {
    mpq_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    s += t;
  }
  return s;
}

/// All exponents of total degree d in n variables.
inline std::vector<Exp> monomials(std::size_t n, int d) {
  std::vector<Exp> out;
  Exp e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline Poly monomial(const Exp& e) {
  Poly r;
  r[e] = 1;
  return r;
}

/// Plain Gauss-Jordan rank over QQ.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Coefficient vector of p against a monomial list.
inline std::vector<mpq_class> coefficients(const Poly& p, const std::vector<Exp>& basis) {
  std::vector<mpq_class> v;
  for (const auto& e : basis) {
    auto it = p.find(e);
    v.push_back(it == p.end() ? mpq_class(0) : it->second);
  }
  return v;
}

/// Rank of D -> D o f on degree-k operators.
inline std::size_t catalecticant_rank(const Poly& f, std::size_t n, int d, int k) {
  const auto ops = monomials(n, k);
  const auto target = monomials(n, d - k);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& e : ops) rows.push_back(coefficients(act(monomial(e), f), target));
  return rank(rows);
}

/// Whether f lies in the span of the given forms of the same degree.
inline bool in_span(const std::vector<Poly>& forms, const Poly& f, std::size_t n, int d) {
  const auto basis = monomials(n, d);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : forms) rows.push_back(coefficients(g, basis));
  const std::size_t r = rank(rows);
  rows.push_back(coefficients(f, basis));
  return rank(rows) == r;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
