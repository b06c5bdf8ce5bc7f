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
#include "rbops/rota_baxter.hpp"

using namespace rbops;
using namespace testutil;

namespace {

oracle::UniTable to_oracle(const MonomialOperatorTable& r)
{
    oracle::UniTable t;
    for (const auto& [src, img] : r.entries()) {
        t[src.degree()] = {img.coeff.rational(), img.target.degree()};
    }
    return t;
}

oracle::WZ random_wz(std::mt19937& rng)
{
    std::uniform_int_distribution<int> md(1, 4), pd(0, 3);
    oracle::WZ w{md(rng), {}, {}};
    for (int b = 0; b < w.m; ++b) {
        const int p = pd(rng);
        w.p.push_back(p);
        w.q.push_back(p == 0 ? mpq_class(0) : oracle::random_nonzero_rational(rng));
    }
    return w;
}

WeightZeroFamilyParams to_params(const oracle::WZ& w)
{
    WeightZeroFamilyParams params{w.m, {}};
    for (int b = 0; b < w.m; ++b) {
        params.residues.push_back({w.p[static_cast<std::size_t>(b)], from_mpq(w.q[static_cast<std::size_t>(b)])});
    }
    return params;
}

} // namespace

TEST(RbResidual, IdentityFailsAtWeightZero)
{
    Operator id = MonomialOperatorTable::identity(univariate(false), q(0), 4);
    Polynomial res = rb_residual(id, x(1), x(1), q(0));
    EXPECT_EQ(res, Polynomial::term(univariate(false), x(2), q(-1)));
    auto check = rb_check(id, q(0), 4);
    EXPECT_FALSE(check.passed);
    ASSERT_TRUE(check.violation);
    EXPECT_EQ(check.violation->u, x(1));
    EXPECT_EQ(check.violation->v, x(1));
}

TEST(RbResidual, TrivialOperatorsPass)
{
    for (long lambda : {0L, 1L, -3L}) {
        auto zero = MonomialOperatorTable(univariate(true), q(lambda), 6);
        EXPECT_TRUE(rb_check(zero, q(lambda), 6).passed);
        auto minus = MonomialOperatorTable::scalar(univariate(true), q(lambda), 6, q(-lambda));
        EXPECT_TRUE(rb_check(minus, q(lambda), 6).passed);
    }
}

TEST(RbCheck, SkipsPairsBeyondTheBound)
{
    // x^n -> x^{n+1}/(n+1) raises the degree, so R(u)v can leave the table.
    auto r = construct_weight_zero({1, {{2, q(1)}}}, univariate(false), 4);
    auto res = rb_check(r, q(0), 4);
    EXPECT_TRUE(res.passed);
    EXPECT_GT(res.skipped_pairs, 0u);
    auto wide = construct_weight_zero({1, {{2, q(1)}}}, univariate(false), 8);
    EXPECT_EQ(rb_check(wide, q(0), 4).skipped_pairs, 0u);
}

TEST(WeightOne, CoefficientsMatchOracle)
{
    for (auto [n, d] : {std::pair{1L, 1L}, {2L, 1L}, {-2L, 1L}, {1L, 2L}, {3L, 5L}}) {
        mpq_class alpha(n, d);
        auto r = construct_weight_one_univariate(q(n, d), univariate(false), 16);
        for (int k = 1; k <= 16; ++k) {
            auto img = r.image(x(k));
            ASSERT_TRUE(img);
            EXPECT_EQ(img->target, x(k));
            EXPECT_EQ(img->coeff, from_mpq(*oracle::weight_one_coeff(alpha, k)));
        }
    }
    EXPECT_EQ(construct_weight_one_univariate(q(1), univariate(false), 3).image(x(3))->coeff, q(1, 7));
}

TEST(WeightOne, UnitalFailsAtDegreeZero)
{
    try {
        construct_weight_one_univariate(q(1), univariate(true), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DenominatorVanishes);
        EXPECT_EQ(e.witness(), std::vector<int>{0});
    }
    // alpha = -1/2: (1/2)^n = (-1/2)^n for even n.
    try {
        construct_weight_one_univariate(q(-1, 2), univariate(false), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.witness(), std::vector<int>{2});
    }
}

TEST(WeightZero, ReciprocalDegree)
{
    auto r = construct_weight_zero({1, {{1, q(1)}}}, univariate(false), 10);
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(r.image(x(n))->coeff, q(1, n));
        EXPECT_EQ(r.image(x(n))->target, x(n));
    }
}

TEST(WeightZero, CharacteristicObstruction)
{
    const auto alg = univariate(false, std::nullopt, Fp(5));
    try {
        construct_weight_zero({1, {{1, fp(5, 1)}}}, alg, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CharacteristicObstruction);
        EXPECT_EQ(e.witness(), std::vector<int>{5});
    }
    EXPECT_NO_THROW(construct_weight_zero({1, {{1, fp(5, 1)}}}, univariate(false, 4, Fp(5)), 4));
}

TEST(WeightZero, InvalidParams)
{
    EXPECT_THROW_KIND(construct_weight_zero({2, {{1, q(1)}}}, univariate(false), 4), InvalidParams);
    EXPECT_THROW_KIND(construct_weight_zero({1, {{0, q(1)}}}, univariate(false), 4), InvalidParams);
    EXPECT_THROW_KIND(construct_weight_zero({1, {{1, q(0)}}}, univariate(false), 4), InvalidParams);
}

TEST(WeightZeroProperty, RandomParametersMatchOracleAndPass)
{
    std::mt19937 rng(51);
    for (int it = 0; it < 30; ++it) {
        const oracle::WZ w = random_wz(rng);
        for (bool unital : {false, true}) {
            auto r = construct_weight_zero(to_params(w), univariate(unital), 12);
            for (int n = unital ? 0 : 1; n <= 12; ++n) {
                auto expect = oracle::weight_zero_image(w, n, unital);
                auto got = r.image(x(n));
                ASSERT_EQ(expect.has_value(), got.has_value());
                if (expect) {
                    EXPECT_EQ(got->coeff, from_mpq(expect->first));
                    EXPECT_EQ(got->target, x(expect->second));
                }
            }
            EXPECT_TRUE(rb_check(r, q(0), 12).passed);
            EXPECT_TRUE(oracle::rb_identity_holds(to_oracle(r), 0, unital ? 0 : 1, 12));
        }
    }
}

TEST(RbCheckProperty, AgreesWithOracleOnRandomDiagonalTables)
{
    std::mt19937 rng(52);
    const std::vector<FieldElement> pool{q(0), q(1), q(-1), q(1, 3), q(1, 7), q(1, 2), q(2)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int passed = 0;
    for (int it = 0; it < 300; ++it) {
        MonomialOperatorTable r(univariate(false), q(1), 5);
        for (int n = 1; n <= 5; ++n) {
            // Bias towards the alpha = 1 family so that passes occur.
            const FieldElement c = (it % 3 == 0) ? pool[pick(rng)] : q(1, (1L << n) - 1);
            r.set(x(n), c, x(n));
        }
        if (it % 5 == 0) {
            r.set(x(1 + it % 5), pool[pick(rng)], x(1 + it % 5));
        }
        const bool ours = rb_check(r, q(1), 5).passed;
        EXPECT_EQ(ours, oracle::rb_identity_holds(to_oracle(r), 1, 1, 5));
        passed += ours;
    }
    EXPECT_GT(passed, 0);
}

TEST(Multivariate, Coefficients)
{
    AlgebraSpec alg{QQ(), 2, false, std::nullopt};
    auto one = construct_multivariate(MultivariateKind::WeightOne, {q(1), q(2)}, alg, 6);
    // x1 x2: 1*2 / (2*3 - 2)
    EXPECT_EQ(one.image(xy(1, 1))->coeff, q(1, 2));
    auto zero = construct_multivariate(MultivariateKind::WeightZero, {q(1), q(2)}, alg, 6);
    // x1 x2^2: 1 / (1 + 2/2)
    EXPECT_EQ(zero.image(xy(1, 2))->coeff, q(1, 2));
    EXPECT_TRUE(rb_check(one, q(1), 6).passed);
    EXPECT_TRUE(rb_check(zero, q(0), 6).passed);
}

TEST(Multivariate, Errors)
{
    AlgebraSpec alg{QQ(), 2, false, std::nullopt};
    try {
        construct_multivariate(MultivariateKind::WeightZero, {q(1), q(-1)}, alg, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DenominatorVanishes);
        EXPECT_EQ(e.witness(), (std::vector<int>{1, 1}));
    }
    EXPECT_THROW_KIND(construct_multivariate(MultivariateKind::WeightOne, {q(1)}, alg, 4), InvalidParams);
    EXPECT_THROW_KIND(construct_multivariate(MultivariateKind::WeightOne, {q(1), q(0)}, alg, 4), InvalidParams);
}

TEST(MultivariateProperty, RandomAlphasPass)
{
    std::mt19937 rng(53);
    for (int it = 0; it < 6; ++it) {
        const int n = 2 + it % 2;
        std::vector<FieldElement> alphas;
        std::vector<mpq_class> raw;
        for (int k = 0; k < n; ++k) {
            raw.push_back(oracle::random_positive_rational(rng, 5));
            alphas.push_back(from_mpq(raw.back()));
        }
        AlgebraSpec alg{QQ(), n, false, std::nullopt};
        auto one = construct_multivariate(MultivariateKind::WeightOne, alphas, alg, 5);
        auto zero = construct_multivariate(MultivariateKind::WeightZero, alphas, alg, 5);
        EXPECT_TRUE(rb_check(one, q(1), 5).passed);
        EXPECT_TRUE(rb_check(zero, q(0), 5).passed);
        for (const auto& m : alg.basis(5)) {
            mpq_class num = 1, shifted = 1, s = 0;
            for (int k = 0; k < n; ++k) {
                num *= oracle::qpow(raw[static_cast<std::size_t>(k)], m.exponent(k));
                shifted *= oracle::qpow(raw[static_cast<std::size_t>(k)] + 1, m.exponent(k));
                s += mpq_class(m.exponent(k)) / raw[static_cast<std::size_t>(k)];
            }
            mpq_class c1 = num / (shifted - num), c0 = 1 / s;
            EXPECT_EQ(one.image(m)->coeff, from_mpq(c1));
            EXPECT_EQ(zero.image(m)->coeff, from_mpq(c0));
        }
    }
}

TEST(Integral, IsWeightZero)
{
    Operator j0 = construct_integral(q(0), univariate(true), 8);
    ASSERT_TRUE(j0.is_table());
    EXPECT_EQ(j0.image(x(2)), Polynomial::term(univariate(true), x(3), q(1, 3)));
    EXPECT_TRUE(rb_check(j0, q(0), 8).passed);
    Operator j2 = construct_integral(q(2), univariate(true), 8);
    EXPECT_FALSE(j2.is_table());
    EXPECT_EQ(j2.image(x(0)).coefficient(x(0)), q(-2));
    EXPECT_TRUE(rb_check(j2, q(0), 8).passed);
    EXPECT_THROW_KIND(construct_integral(q(0), univariate(false), 4), InvalidParams);
    EXPECT_THROW_KIND(construct_integral(fp(5, 0), univariate(true, std::nullopt, Fp(5)), 6),
        CharacteristicObstruction);
}

TEST(Splitting, UnitAndAugmentation)
{
    const auto alg = univariate(true);
    for (int constants_part : {1, 2}) {
        SplittingSpec spec{alg, [constants_part](const Monomial& u) {
                               return u.is_constant() ? constants_part : 3 - constants_part;
                           }};
        auto r = construct_splitting(spec, q(2), 6);
        EXPECT_TRUE(rb_check(r, q(2), 6).passed);
    }
}

TEST(Splitting, RejectsNonSubalgebra)
{
    SplittingSpec spec{univariate(false), [](const Monomial& u) { return u.degree() % 2 == 1 ? 1 : 2; }};
    try {
        construct_splitting(spec, q(1), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotASubalgebra);
        EXPECT_EQ(e.witness(), (std::vector<int>{1, 1, 1}));
    }
}

TEST(MultiResidual, WeightZeroFamilyVanishes)
{
    auto r = construct_weight_zero({2, {{1, q(3)}, {2, q(-1, 2)}}}, univariate(false), 20);
    for (const auto& args : {std::vector<Monomial>{x(1), x(2), x(3)}, std::vector<Monomial>{x(2), x(2), x(1), x(1)}}) {
        EXPECT_TRUE(rb_multi_residual(r, args).is_zero());
    }
    for (int k = 2; k <= 4; ++k) {
        EXPECT_FALSE(rb_power_check(r, x(1), k));
    }
    auto weight_one = construct_weight_one_univariate(q(1), univariate(false), 6);
    EXPECT_THROW_KIND(rb_multi_residual(weight_one, {x(1), x(1)}), NonzeroWeight);
    EXPECT_THROW_KIND(rb_power_check(r, x(1), 1), InvalidParams);
    auto id = MonomialOperatorTable::identity(univariate(false), q(0), 6);
    EXPECT_TRUE(rb_power_check(id, x(1), 2));
}

TEST(KernelImage, CollisionDifferences)
{
    MonomialOperatorTable r(univariate(false), q(1), 4);
    r.set(x(1), q(1), x(2));
    r.set(x(3), q(2), x(2));
    r.set(x(4), q(1), x(4));
    auto ki = op_kernel_image(r, 4);
    EXPECT_EQ(ki.kernel.size(), 2u);
    for (const auto& k : ki.kernel) {
        EXPECT_TRUE(r.apply(k).is_zero());
        EXPECT_FALSE(k.is_zero());
    }
    ASSERT_EQ(ki.image.size(), 2u);
    EXPECT_EQ(ki.image[0].first, x(2));
}

TEST(UnitConstraint, Cases)
{
    const auto alg = univariate(true);
    MonomialOperatorTable zero(alg, q(2), 3);
    EXPECT_EQ(check_unit_constraint(zero, q(2)).kind, UnitConstraintKind::SplittingZero);
    auto minus = MonomialOperatorTable::scalar(alg, q(2), 3, q(-2));
    EXPECT_EQ(check_unit_constraint(minus, q(2)).kind, UnitConstraintKind::SplittingMinusLambda);
    MonomialOperatorTable bad(alg, q(2), 3);
    bad.set(x(0), q(1), x(1));
    auto uc = check_unit_constraint(bad, q(2));
    EXPECT_EQ(uc.kind, UnitConstraintKind::Violation);
    ASSERT_TRUE(uc.witness);
    EXPECT_EQ(uc.witness->coefficient(x(2)), q(1));
    EXPECT_EQ(uc.witness->coefficient(x(1)), q(-2));
    EXPECT_THROW_KIND(check_unit_constraint(MonomialOperatorTable(univariate(false), q(1), 2), q(1)),
        NonUnitalAlgebra);
    EXPECT_THROW_KIND(check_unit_constraint(zero, q(0)), ZeroWeight);
}

TEST(KernelObstruction, Cases)
{
    auto id = MonomialOperatorTable::identity(univariate(false), q(1), 4);
    EXPECT_TRUE(check_kernel_obstructions(id).passed);
    MonomialOperatorTable ki(univariate(false), q(1), 3);
    ki.set(x(1), q(1), x(2));
    auto res = check_kernel_obstructions(ki);
    EXPECT_FALSE(res.passed);
    EXPECT_EQ(res.reason, "kernel-image");
    MonomialOperatorTable col(univariate(false), q(1), 3);
    col.set(x(1), q(1), x(3));
    col.set(x(2), q(1), x(3));
    col.set(x(3), q(1), x(1));
    res = check_kernel_obstructions(col);
    EXPECT_EQ(res.reason, "collision");
    EXPECT_EQ(res.witness, (std::vector<Monomial>{x(1), x(2)}));
}
