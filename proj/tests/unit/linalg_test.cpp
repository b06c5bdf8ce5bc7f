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

#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "../test_util.hpp"
#include "rbops/linalg.hpp"

using namespace rbops;
using namespace rbops::linalg;
using namespace testutil;

namespace {

Matrix from_ints(FieldSpec f, const std::vector<std::vector<long>>& rows)
{
    Matrix m(f, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m(r, c) = FieldElement(f, rows[r][c]);
        }
    }
    return m;
}

} // namespace

TEST(Linalg, RankAndKernel)
{
    Matrix m = from_ints(QQ(), {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EXPECT_EQ(rank(m), 2u);
    auto ker = kernel(m);
    ASSERT_EQ(ker.size(), 1u);
    auto image = m * ker[0];
    for (const auto& v : image) {
        EXPECT_TRUE(v.is_zero());
    }
}

TEST(Linalg, RankDropsModP)
{
    Matrix m = from_ints(Fp(5), {{1, 2}, {3, 1}});
    EXPECT_EQ(rank(m), 1u);
    EXPECT_EQ(rank(from_ints(QQ(), {{1, 2}, {3, 1}})), 2u);
}

TEST(Linalg, InSpan)
{
    std::vector<std::vector<FieldElement>> basis{{q(1), q(0), q(1)}, {q(0), q(1), q(1)}};
    EXPECT_TRUE(in_span(basis, {q(2), q(3), q(5)}, QQ()));
    EXPECT_FALSE(in_span(basis, {q(1), q(1), q(1)}, QQ()));
}

TEST(Linalg, RootsOfSplitPolynomials)
{
    // (x - 1)(x + 2)(x - 1/3) = x^3 + 2/3 x^2 - 7/3 x + 2/3
    UPoly f{q(2, 3), q(-7, 3), q(2, 3), q(1)};
    bool complete = false;
    auto r = roots(f, &complete);
    EXPECT_TRUE(complete);
    EXPECT_EQ(r, (std::vector<FieldElement>{q(-2), q(1, 3), q(1)}));

    UPoly g{fp(7, 1), fp(7, 0), fp(7, 1)}; // x^2 + 1 irreducible mod 7
    EXPECT_TRUE(roots(g).empty());
    UPoly h{fp(5, 1), fp(5, 0), fp(5, 1)}; // x^2 + 1 = (x-2)(x-3) mod 5
    EXPECT_EQ(roots(h), (std::vector<FieldElement>{fp(5, 2), fp(5, 3)}));
}

TEST(Linalg, RootsInLargePrimeField)
{
    const std::uint32_t p = 2147483647u;
    // (x - 5)(x - 123456789)
    FieldElement a(Fp(p), 5), b(Fp(p), 123456789);
    UPoly f{a * b, -(a + b), FieldElement::one(Fp(p))};
    EXPECT_EQ(roots(f), (std::vector<FieldElement>{a, b}));
}

TEST(LinalgProperty, CharacteristicPolynomialMatchesDeterminant)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 1 + static_cast<std::size_t>(it % 5);
        Matrix m(QQ(), n, n);
        std::vector<std::vector<mpq_class>> raw(n, std::vector<mpq_class>(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                long v = d(rng);
                raw[r][c] = v;
                m(r, c) = q(v);
            }
        }
        UPoly cp = characteristic_polynomial(m);
        ASSERT_EQ(cp.size(), n + 1);
        EXPECT_EQ(cp.back(), q(1));
        for (long t = -3; t <= 3; ++t) {
            auto a = raw;
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    a[r][c] = (r == c ? mpq_class(t) : mpq_class(0)) - raw[r][c];
                }
            }
            EXPECT_EQ(evaluate(cp, q(t)), from_mpq(oracle::det(a)));
        }
    }
}

TEST(LinalgProperty, KernelVectorsAreIndependentSolutions)
{
    std::mt19937 rng(32);
    std::uniform_int_distribution<long> d(0, 3);
    for (int it = 0; it < 50; ++it) {
        Matrix m(Fp(7), 3, 5);
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 5; ++c) {
                m(r, c) = fp(7, d(rng));
            }
        }
        auto ker = kernel(m);
        EXPECT_EQ(ker.size() + rank(m), 5u);
        for (const auto& v : ker) {
            for (const auto& e : m * v) {
                EXPECT_TRUE(e.is_zero());
            }
        }
        Matrix k(Fp(7), 5, ker.size());
        for (std::size_t c = 0; c < ker.size(); ++c) {
            for (std::size_t r = 0; r < 5; ++r) {
                k(r, c) = ker[c][r];
            }
        }
        EXPECT_EQ(ker.empty() ? 0u : rank(k), ker.size());
    }
}
