/*
   Copyright 2026 The rbops Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <benchmark/benchmark.h>

#include "rbops/aybe.hpp"
#include "rbops/classify.hpp"

namespace {

using namespace rbops;

void BM_EnumerateWeightOne(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const FieldSpec q = FieldSpec::rationals();
    for (auto _ : state) {
        auto rep = enumerate_monomial_rb(AlgebraSpec::univariate(q, false), FieldElement::one(q), d);
        benchmark::DoNotOptimize(rep.solutions.size());
    }
}
BENCHMARK(BM_EnumerateWeightOne)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateWeightZero(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const FieldSpec q = FieldSpec::rationals();
    for (auto _ : state) {
        auto rep = enumerate_monomial_rb(AlgebraSpec::univariate(q, false), FieldElement::zero(q), d);
        benchmark::DoNotOptimize(rep.solutions.size());
    }
}
BENCHMARK(BM_EnumerateWeightZero)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MatchFamily(benchmark::State& state)
{
    const FieldSpec q = FieldSpec::rationals();
    WeightZeroFamilyParams params{4, {{1, FieldElement(q, 2)}, {3, FieldElement(q, 1)}, {2, FieldElement(q, -3)},
        {1, FieldElement::make(q, 1, 2)}}};
    auto r = construct_weight_zero(params, AlgebraSpec::univariate(q, false), 24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(match_family(r));
    }
}
BENCHMARK(BM_MatchFamily);

void BM_AybeGridSearch(benchmark::State& state)
{
    const FieldSpec q = FieldSpec::rationals();
    AybeSearchOptions opts;
    opts.grid = {FieldElement::zero(q), FieldElement::one(q), FieldElement(q, -1)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(aybe_grid_search(AlgebraSpec::univariate(q, true), 2, FieldElement::one(q), opts));
    }
}
BENCHMARK(BM_AybeGridSearch)->Unit(benchmark::kMillisecond);

} // namespace
