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

#include "apolarkit/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "apolarkit/error.hpp"

namespace apolarkit {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t monomial_count(std::size_t num_vars, std::size_t degree) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  return binomial(num_vars + degree - 1, degree);
}

namespace {

void enumerate(std::size_t var, std::size_t n, std::size_t remaining, Exponent& current,
               std::vector<Exponent>& out) {
  if (var + 1 == n) {
    current[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (std::size_t v = remaining + 1; v-- > 0;) {
    current[var] = static_cast<std::uint8_t>(v);
    enumerate(var + 1, n, remaining - v, current, out);
  }
  current[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t num_vars, std::size_t degree)
    : num_vars_(num_vars), degree_(degree) {
  exponents_.reserve(monomial_count(num_vars, degree));
  Exponent current{};
  enumerate(0, num_vars, degree, current, exponents_);
}

const MonomialBasis& MonomialBasis::get(std::size_t num_vars, std::size_t degree) {
  if (num_vars == 0 || num_vars > kMaxVariables) {
    throw PreconditionError("variable count must be in 1.." + std::to_string(kMaxVariables));
  }
  if (degree > 255) throw PreconditionError("degree too large");
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{num_vars, degree}];
  if (!slot) slot.reset(new MonomialBasis(num_vars, degree));
  return *slot;
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  // Count monomials that precede e: for each leading position, those with a
  // larger exponent there and the same prefix before it.
  std::size_t index = 0;
  std::size_t remaining = degree_;
  for (std::size_t i = 0; i + 1 < num_vars_; ++i) {
    const std::size_t tail_vars = num_vars_ - i - 1;
    for (std::size_t v = remaining; v > e[i]; --v) {
      index += monomial_count(tail_vars, remaining - v);
    }
    remaining -= e[i];
  }
  return index;
}

}  // namespace apolarkit
