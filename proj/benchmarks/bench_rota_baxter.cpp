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

#include "rbops/rota_baxter.hpp"

namespace {

using namespace rbops;

void BM_RbCheckWeightOne(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const FieldSpec q = FieldSpec::rationals();
    auto r = construct_weight_one_univariate(FieldElement::make(q, 3, 5), AlgebraSpec::univariate(q, false), d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rb_check(r, FieldElement::one(q), d));
    }
}
BENCHMARK(BM_RbCheckWeightOne)->Arg(8)->Arg(16)->Arg(32);

void BM_RbCheckWeightZero(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const FieldSpec q = FieldSpec::rationals();
    WeightZeroFamilyParams params{3, {{1, FieldElement(q, 2)}, {2, FieldElement::make(q, -1, 3)}, {3, FieldElement(q, 5)}}};
    auto r = construct_weight_zero(params, AlgebraSpec::univariate(q, true), 2 * d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rb_check(r, FieldElement::zero(q), d));
    }
}
BENCHMARK(BM_RbCheckWeightZero)->Arg(8)->Arg(16);

void BM_RbCheckMultivariate(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const FieldSpec q = FieldSpec::rationals();
    AlgebraSpec alg{q, 3, false, std::nullopt};
    auto r = construct_multivariate(MultivariateKind::WeightOne,
        {FieldElement(q, 1), FieldElement(q, 2), FieldElement::make(q, 1, 3)}, alg, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rb_check(r, FieldElement::one(q), d));
    }
}
BENCHMARK(BM_RbCheckMultivariate)->Arg(6)->Arg(10);

void BM_ShiftConjugate(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const FieldSpec q = FieldSpec::rationals();
    auto alg = AlgebraSpec::univariate(q, true);
    MonomialOperatorTable ones(alg, FieldElement(q, -1), d);
    for (int n = 0; n <= d; ++n) {
        ones.set(Monomial::power(n), FieldElement::one(q), Monomial::power(0));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(op_conjugate(ones, AutomorphismSpec::shift()));
    }
}
BENCHMARK(BM_ShiftConjugate)->Arg(6)->Arg(16);

} // namespace
