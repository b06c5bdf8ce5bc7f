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
#include <unordered_set>

#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "../test_util.hpp"
#include "rbops/error.hpp"
#include "rbops/field.hpp"

using namespace rbops;
using namespace testutil;

TEST(Field, RationalsAreCanonical)
{
    EXPECT_EQ(q(2, 4), q(1, 2));
    EXPECT_EQ(q(3, -6).to_string(), "-1/2");
    EXPECT_EQ(q(4, 2).to_string(), "2");
    EXPECT_EQ(q(0, 5), FieldElement::zero(QQ()));
    EXPECT_EQ(q(2, 4).hash(), q(1, 2).hash());
}

TEST(Field, RationalArithmetic)
{
    EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
    EXPECT_EQ(q(1, 2) - q(1, 3), q(1, 6));
    EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
    EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
    EXPECT_EQ(q(2, 3).pow(-2), q(9, 4));
    EXPECT_EQ(field_arith(q(1), q(2), ArithOp::Div), q(1, 2));
}

TEST(Field, PrimeFieldArithmetic)
{
    EXPECT_EQ(fp(5, 2).inverse(), fp(5, 3));
    EXPECT_EQ(fp(5, -1), fp(5, 4));
    EXPECT_EQ(fp(5, 3).to_string(), "3 mod 5");
    EXPECT_EQ(fp(5, 3).coefficient_string(), "3");
    EXPECT_EQ(FieldElement::make(Fp(5), 1, 2), fp(5, 3));
}

TEST(Field, ParseForms)
{
    EXPECT_EQ(FieldElement::parse(QQ(), "-3/9"), q(-1, 3));
    EXPECT_EQ(FieldElement::parse(Fp(7), "3 mod 7"), fp(7, 3));
    EXPECT_EQ(FieldElement::parse(Fp(7), "1/2"), fp(7, 4));
    EXPECT_EQ(FieldSpec::parse("Fp:13"), Fp(13));
    EXPECT_EQ(FieldSpec::parse("Q"), QQ());
}

TEST(Field, Errors)
{
    EXPECT_THROW_KIND(FieldElement::make(QQ(), 1, 0), ZeroDenominator);
    EXPECT_THROW_KIND(FieldElement::make(Fp(5), 1, 10), NonInvertibleModP);
    EXPECT_THROW_KIND(q(0).inverse(), DivisionByZero);
    EXPECT_THROW_KIND(q(1) + fp(5, 1), MixedFieldSpecs);
    EXPECT_THROW_KIND(FieldElement::parse(Fp(7), "3 mod 5"), MixedFieldSpecs);
    EXPECT_THROW_KIND(FieldSpec::prime_field(9), InvalidParams);
    EXPECT_THROW_KIND(FieldSpec::parse("R"), ParseError);
    EXPECT_THROW_KIND(FieldElement::parse(QQ(), "abc"), ParseError);
}

TEST(FieldProperty, RationalFieldAxiomsAgainstMpq)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        mpq_class a = oracle::random_nonzero_rational(rng, 40);
        mpq_class b = oracle::random_nonzero_rational(rng, 40);
        const auto fa = from_mpq(a);
        const auto fb = from_mpq(b);
        mpq_class s = a + b, d = a - b, m = a * b, v = a / b;
        EXPECT_EQ(fa + fb, from_mpq(s));
        EXPECT_EQ(fa - fb, from_mpq(d));
        EXPECT_EQ(fa * fb, from_mpq(m));
        EXPECT_EQ(fa / fb, from_mpq(v));
        EXPECT_EQ(fa * fa.inverse(), q(1));
        EXPECT_EQ(FieldElement::parse(QQ(), fa.to_string()), fa);
    }
}

TEST(FieldProperty, PrimeFieldAgainstModularOracle)
{
    std::mt19937 rng(12);
    for (std::uint32_t p : {5u, 7u, 13u, 65537u, 2147483647u}) {
        std::uniform_int_distribution<std::int64_t> d(1, static_cast<std::int64_t>(p) - 1);
        for (int i = 0; i < 100; ++i) {
            const std::int64_t a = d(rng), b = d(rng);
            const FieldElement fa(Fp(p), static_cast<long>(a));
            const FieldElement fb(Fp(p), static_cast<long>(b));
            EXPECT_EQ((fa * fb).residue(), static_cast<std::uint32_t>(a * b % p));
            EXPECT_EQ((fa + fb).residue(), static_cast<std::uint32_t>((a + b) % p));
            EXPECT_EQ(fa.inverse().residue(), static_cast<std::uint32_t>(oracle::mod_inv(a, p)));
            EXPECT_EQ(fa.pow(5).residue(), static_cast<std::uint32_t>(oracle::mod_pow(a, 5, p)));
        }
    }
}

TEST(FieldProperty, RationalImageInPrimeField)
{
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        mpq_class a = oracle::random_nonzero_rational(rng, 50);
        if (a.get_den() % 7 == 0) {
            continue;
        }
        EXPECT_EQ(FieldElement::from_rational(Fp(7), a).residue(), static_cast<std::uint32_t>(oracle::reduce(a, 7)));
    }
}

TEST(FieldProperty, OrderIsTotalAndConsistent)
{
    std::vector<FieldElement> xs{q(-3), q(-1, 2), q(0), q(1, 3), q(1, 2), q(5)};
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        EXPECT_LT(xs[i], xs[i + 1]);
    }
    std::unordered_set<FieldElement, FieldElementHash> set(xs.begin(), xs.end());
    EXPECT_EQ(set.size(), xs.size());
}
