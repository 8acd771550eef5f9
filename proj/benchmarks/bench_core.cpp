// Copyright 2026 The tfps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tfps/cumulants.hpp"
#include "tfps/generators.hpp"
#include "tfps/limits.hpp"
#include "tfps/special.hpp"
#include "tfps/tconv.hpp"

namespace {

using namespace tfps;

TruncatedSeries random_unit(int order, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c{Rational(1)};
    for (int k = 1; k <= order; ++k) c.emplace_back(num(rng), den(rng));
    return TruncatedSeries(std::move(c), order);
}

void BM_Mul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TruncatedSeries a = random_unit(n, 1);
    const TruncatedSeries b = random_unit(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->Arg(32)->Arg(64)->Arg(128);

void BM_FormalLog(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TruncatedSeries a = random_unit(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(formal_log(a));
}
BENCHMARK(BM_FormalLog)->Arg(32)->Arg(128);

void BM_Tconv(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TParam t = TParam::generic(Rational(7, 3));
    const TruncatedSeries a = random_unit(n, 4);
    const TruncatedSeries b = random_unit(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(tconv(a, b, t));
}
BENCHMARK(BM_Tconv)->Arg(32)->Arg(64);

void BM_ConvPower(benchmark::State& state) {
    const TParam t = TParam::generic(Rational(-1));
    const TruncatedSeries a = random_unit(8, 6);
    const long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(conv_power(a, m, t));
}
BENCHMARK(BM_ConvPower)->Arg(64)->Arg(1024);

void BM_CumulantTransform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TParam t = TParam::generic(Rational(1, 2));
    const TruncatedSeries a = random_unit(n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(c_transform(a, t));
}
BENCHMARK(BM_CumulantTransform)->Arg(16)->Arg(32);

void BM_Evolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TParam t = TParam::generic(Rational(-1));
    const TruncatedSeries a = random_unit(n, 8);
    const EtaSeries eta = eta_closed_form(
        SeriesSemigroup::levy(LevyTriplet{Rational(0), Rational(1), {{Rational(1), Rational(1, 2)}}},
                              t),
        n);
    const Rational s(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(evolve(a, eta, s, t));
}
BENCHMARK(BM_Evolve)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
