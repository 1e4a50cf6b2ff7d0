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

#include <random>

#include <benchmark/benchmark.h>

#include "apolarkit/constructions.hpp"
#include "apolarkit/rank_loci.hpp"

using namespace apolarkit;

namespace {

void BM_RankRationalDense(benchmark::State& state) {
  RationalField q;
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> data;
  for (std::size_t i = 0; i < n * n; ++i) data.push_back(q.random(rng));
  const Matrix<RationalField> m(q, n, n, data);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRationalDense)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RankTwoPrime(benchmark::State& state) {
  RationalField q;
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> data;
  for (std::size_t i = 0; i < n * n; ++i) data.push_back(q.random(rng));
  const Matrix<RationalField> m(q, n, n, data);
  for (auto _ : state) benchmark::DoNotOptimize(rank_two_prime(m, 7));
}
BENCHMARK(BM_RankTwoPrime)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_BettiReferenceTwoPrime(benchmark::State& state) {
  const auto algebra = apolar_algebra(reference_cubic(RationalField{}));
  RankPolicy policy;
  policy.mode = RankPolicy::Mode::two_prime;
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(algebra, 6, 9, policy));
}
BENCHMARK(BM_BettiReferenceTwoPrime)->Unit(benchmark::kMillisecond);

void BM_BettiTenPoints(benchmark::State& state) {
  RationalField q;
  std::mt19937_64 rng(3);
  const auto ring = coordinate_ring(PointSet<RationalField>::random(q, 6, 10, rng), 8);
  RankPolicy policy;
  policy.mode = RankPolicy::Mode::two_prime;
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(ring, 5, 7, policy));
}
BENCHMARK(BM_BettiTenPoints)->Unit(benchmark::kMillisecond);

void BM_M2ModP(benchmark::State& state) {
  PrimeField fp(101);
  const auto f = reduce_mod_p(reference_cubic(RationalField{}), fp);
  for (auto _ : state) benchmark::DoNotOptimize(m2_matrix(f));
}
BENCHMARK(BM_M2ModP)->Unit(benchmark::kMillisecond);

void BM_DropDegreeOnLine(benchmark::State& state) {
  PrimeField fp(101);
  const auto m = reduce_mod_p(m2_matrix(reference_cubic(RationalField{})).matrix, fp);
  std::mt19937_64 rng(4);
  std::vector<Fp> p, d;
  for (int i = 0; i < 6; ++i) {
    p.push_back(fp.random(rng));
    d.push_back(fp.random(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        drop_degree_on_line(m, std::span<const Fp>(p), std::span<const Fp>(d), 20, 5));
  }
}
BENCHMARK(BM_DropDegreeOnLine)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
