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
#include "rbops/error.hpp"
#include "rbops/polynomial.hpp"

using namespace rbops;
using namespace testutil;

TEST(Monomial, OrderByDegreeThenLex)
{
    EXPECT_LT(xy(2, 0), xy(0, 3));
    EXPECT_LT(xy(0, 2), xy(1, 1));
    EXPECT_LT(Monomial::one(2), xy(0, 1));
    EXPECT_EQ(xy(1, 2) * xy(2, 0), xy(3, 2));
    EXPECT_TRUE(xy(1, 0).divides(xy(1, 1)));
    EXPECT_FALSE(xy(0, 2).divides(xy(1, 1)));
    EXPECT_EQ(xy(2, 1).to_string(), "x1^2*x2");
    EXPECT_EQ(Monomial::one(1).to_string(), "1");
    EXPECT_THROW_KIND(Monomial(std::vector<int>{-1}), InvalidMonomial);
}

TEST(Algebra, BasisRespectsUnitAndTruncation)
{
    EXPECT_EQ(univariate(false).basis(3), (std::vector<Monomial>{x(1), x(2), x(3)}));
    EXPECT_EQ(univariate(true, 2).basis(5), (std::vector<Monomial>{x(0), x(1), x(2)}));
    AlgebraSpec two{QQ(), 2, true, std::nullopt};
    EXPECT_EQ(two.basis(2).size(), 6u);
    AlgebraSpec two0{QQ(), 2, false, std::nullopt};
    EXPECT_EQ(two0.basis(3).size(), 9u);
    EXPECT_FALSE(univariate(false).contains(x(0)));
    EXPECT_FALSE(univariate(true, 3).contains(x(4)));
    EXPECT_THROW_KIND((AlgebraSpec{QQ(), 0, true, std::nullopt}.validate()), InvalidParams);
}

TEST(Polynomial, TruncationAndUnit)
{
    const auto alg = univariate(false, 3);
    Polynomial f = Polynomial::term(alg, x(2), q(1)) + Polynomial::term(alg, x(1), q(2));
    Polynomial sq = f * f;
    EXPECT_EQ(sq.coefficient(x(2)), q(4));
    EXPECT_EQ(sq.coefficient(x(3)), q(4));
    EXPECT_EQ(sq.size(), 2u);
    EXPECT_THROW_KIND(Polynomial::term(alg, x(0), q(1)), InvalidMonomial);
    EXPECT_TRUE(Polynomial::term(alg, x(4), q(1)).is_zero());
}

TEST(Polynomial, MixedAlgebrasRejected)
{
    Polynomial a = Polynomial::term(univariate(false), x(1));
    Polynomial b = Polynomial::term(univariate(true), x(1));
    EXPECT_THROW_KIND(a + b, MixedAlgebras);
}

TEST(Polynomial, ParseRoundTrip)
{
    AlgebraSpec alg{QQ(), 2, true, std::nullopt};
    Polynomial f(alg);
    f.add_term(xy(2, 1), q(3, 7));
    f.add_term(xy(0, 1), q(-1));
    f.add_term(Monomial::one(2), q(5));
    EXPECT_EQ(Polynomial::parse(alg, f.to_string()), f);
    EXPECT_EQ(Polynomial::parse(alg, "0"), Polynomial(alg));
}

TEST(PolynomialProperty, ProductMatchesOracle)
{
    std::mt19937 rng(21);
    const auto alg = univariate(true);
    std::uniform_int_distribution<int> e(0, 6);
    for (int it = 0; it < 100; ++it) {
        oracle::UniPoly fa, fb;
        Polynomial pa(alg), pb(alg);
        for (int k = 0; k < 4; ++k) {
            int ea = e(rng), eb = e(rng);
            mpq_class ca = oracle::random_nonzero_rational(rng), cb = oracle::random_nonzero_rational(rng);
            oracle::add_to(fa, ea, ca);
            oracle::add_to(fb, eb, cb);
            pa.add_term(x(ea), from_mpq(ca));
            pb.add_term(x(eb), from_mpq(cb));
        }
        Polynomial prod = poly_mul(pa, pb);
        oracle::UniPoly expect = oracle::mul(fa, fb);
        ASSERT_EQ(prod.size(), expect.size());
        for (const auto& [ex, c] : expect) {
            EXPECT_EQ(prod.coefficient(x(ex)), from_mpq(c));
        }
        EXPECT_EQ(poly_mul(pa, pb), poly_mul(pb, pa));
        EXPECT_EQ(poly_linear(pa, pb, q(2), q(-1)), pa * q(2) - pb);
    }
}
