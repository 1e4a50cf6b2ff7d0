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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace apolarkit {

inline constexpr std::size_t kMaxVariables = 8;

using Exponent = std::array<std::uint8_t, kMaxVariables>;

/// Binomial coefficient; exact for the small arguments used here.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of monomials of degree d in n variables, C(n + d - 1, d).
std::size_t monomial_count(std::size_t num_vars, std::size_t degree);

/// The monomials of one graded piece, in graded-lex descending order:
/// x0^d first, x_{n-1}^d last. Instances are cached and shared.
class MonomialBasis {
 public:
  static const MonomialBasis& get(std::size_t num_vars, std::size_t degree);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return exponents_.size(); }
  const Exponent& operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<Exponent>& exponents() const { return exponents_; }

  /// Position of an exponent vector of this degree; O(num_vars).
  std::size_t index_of(const Exponent& e) const;

 private:
  MonomialBasis(std::size_t num_vars, std::size_t degree);

  std::size_t num_vars_;
  std::size_t degree_;
  std::vector<Exponent> exponents_;
};

inline std::size_t exponent_degree(const Exponent& e) {
  std::size_t d = 0;
  for (auto v : e) d += v;
  return d;
}

inline Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return r;
}

/// True when b - a has no negative entry.
inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exponent unit_exponent(std::size_t var) {
  Exponent e{};
  e[var] = 1;
  return e;
}

}  // namespace apolarkit
