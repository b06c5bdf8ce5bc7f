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

#include "rbops/grading.hpp"
#include "rbops/rota_baxter.hpp"

namespace {

using namespace rbops;

void BM_GradingDiagonal(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const FieldSpec q = FieldSpec::rationals();
    auto r = construct_weight_one_univariate(FieldElement(q, 2), AlgebraSpec::univariate(q, false), n);
    auto red = reduce_mod_p(r, 10007, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grading_decompose(red, red.weight()));
    }
}
BENCHMARK(BM_GradingDiagonal)->Arg(8)->Arg(16)->Arg(32);

void BM_GradingDense(benchmark::State& state)
{
    // Upper triangular perturbation of a diagonal operator forces the
    // characteristic-polynomial path.
    const int n = static_cast<int>(state.range(0));
    const FieldSpec f = FieldSpec::prime_field(10007);
    const auto alg = AlgebraSpec::univariate(f, false, n);
    DenseOperator d(alg, FieldElement::one(f), n);
    for (int k = 1; k <= n; ++k) {
        Polynomial img = Polynomial::term(alg, Monomial::power(k), FieldElement(f, 1 + k % 3));
        if (k < n) {
            img.add_term(Monomial::power(k + 1), FieldElement::one(f));
        }
        d.set(Monomial::power(k), img);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(grading_decompose(d, FieldElement::one(f)));
    }
}
BENCHMARK(BM_GradingDense)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SemigroupIso(benchmark::State& state)
{
    const FieldSpec q = FieldSpec::rationals();
    std::vector<FieldElement> sample;
    for (int i = 1; i <= static_cast<int>(state.range(0)); ++i) {
        sample.push_back(FieldElement::make(q, i, i % 7 + 1));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(semigroup_iso_check(PartialProductKind::Circ, sample));
    }
}
BENCHMARK(BM_SemigroupIso)->Arg(8)->Arg(16);

} // namespace
