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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rbops/field.hpp"
#include "rbops/linalg.hpp"

namespace {

using rbops::FieldElement;
using rbops::FieldSpec;

std::vector<FieldElement> random_elements(FieldSpec f, std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    std::vector<FieldElement> out;
    while (out.size() < n) {
        long a = num(rng);
        long b = den(rng);
        if (a != 0 && (f.is_rational() || b % static_cast<long>(f.modulus()) != 0)) {
            out.push_back(FieldElement::make(f, a, b));
        }
    }
    return out;
}

void BM_FieldMulAdd(benchmark::State& state, FieldSpec f)
{
    auto xs = random_elements(f, 1024, 1);
    for (auto _ : state) {
        FieldElement acc(f);
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            acc += xs[i] * xs[i + 1];
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * 1023);
}

void BM_FieldInverse(benchmark::State& state, FieldSpec f)
{
    auto xs = random_elements(f, 1024, 2);
    for (auto _ : state) {
        for (const auto& x : xs) {
            benchmark::DoNotOptimize(x.inverse());
        }
    }
    state.SetItemsProcessed(state.iterations() * 1024);
}

void BM_RowReduce(benchmark::State& state, FieldSpec f)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    auto xs = random_elements(f, n * n, 3);
    rbops::linalg::Matrix m(f, n, n);
    for (std::size_t i = 0; i < n * n; ++i) {
        m(i / n, i % n) = xs[i];
    }
    for (auto _ : state) {
        auto copy = m;
        benchmark::DoNotOptimize(rbops::linalg::row_reduce(copy));
    }
}

BENCHMARK_CAPTURE(BM_FieldMulAdd, rationals, FieldSpec::rationals());
BENCHMARK_CAPTURE(BM_FieldMulAdd, gf_2_31_minus_1, FieldSpec::prime_field(2147483647u));
BENCHMARK_CAPTURE(BM_FieldInverse, rationals, FieldSpec::rationals());
BENCHMARK_CAPTURE(BM_FieldInverse, gf_2_31_minus_1, FieldSpec::prime_field(2147483647u));
BENCHMARK_CAPTURE(BM_RowReduce, rationals, FieldSpec::rationals())->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_RowReduce, gf_13, FieldSpec::prime_field(13))->Arg(8)->Arg(16)->Arg(32);

} // namespace
