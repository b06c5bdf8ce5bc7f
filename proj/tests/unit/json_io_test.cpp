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
#include "rbops/json_io.hpp"

using namespace rbops;
using namespace testutil;
using json_io::json;

TEST(Json, ScalarsAndMonomials)
{
    EXPECT_EQ(json_io::encode(q(-3, 4)), json("-3/4"));
    EXPECT_EQ(json_io::encode(fp(5, 3)), json("3"));
    EXPECT_EQ(json_io::decode_field_element(json(7), QQ()), q(7));
    EXPECT_EQ(json_io::decode_field_element(json("2/6"), QQ()), q(1, 3));
    EXPECT_EQ(json_io::encode(xy(1, 2)), json::parse("[1,2]"));
    EXPECT_EQ(json_io::decode_monomial(json::parse("[0,3]")), xy(0, 3));
}

TEST(Json, AlgebraRoundTrip)
{
    for (const auto& alg : {univariate(false), univariate(true, 3, Fp(5)), AlgebraSpec{QQ(), 3, true, 4}}) {
        EXPECT_EQ(json_io::decode_algebra(json_io::encode(alg)), alg);
    }
    EXPECT_EQ(json_io::encode(univariate(false, 3, Fp(5))).dump(),
        R"({"field":"Fp:5","nvars":1,"truncation":3,"unital":false})");
}

TEST(Json, OperatorRoundTrips)
{
    auto w = construct_weight_one_univariate(q(3, 5), univariate(false), 6);
    Operator back = json_io::decode_operator(json_io::encode(Operator(w)));
    ASSERT_TRUE(back.is_table());
    EXPECT_EQ(*back.as_table(), w);

    Operator j = construct_integral(q(2), univariate(true), 4);
    Operator jb = json_io::decode_operator(json_io::encode(j));
    EXPECT_TRUE(jb.agrees_with(j, 4));
    EXPECT_FALSE(jb.is_table());
}

TEST(Json, OperatorFallbackAlgebra)
{
    json j = json::parse(R"({"weight":"1","degree_bound":2,"kind":"monomial",
        "entries":[{"src":[1],"coeff":"1","dst":[1]}]})");
    EXPECT_THROW_KIND(json_io::decode_operator(j), ParseError);
    Operator r = json_io::decode_operator(j, univariate(false, 2, Fp(5)));
    EXPECT_EQ(r.algebra().field, Fp(5));
}

TEST(Json, Malformed)
{
    EXPECT_THROW_KIND(json_io::decode_monomial(json("x")), ParseError);
    EXPECT_THROW_KIND(json_io::decode_algebra(json::parse(R"({"nvars":1})")), ParseError);
    EXPECT_THROW_KIND(json_io::decode_operator(json::parse("[]")), ParseError);
    EXPECT_THROW_KIND(json_io::decode_tensor(json::parse(R"({"arity":2})"), univariate(true)), ParseError);
}

TEST(Json, TensorRoundTrip)
{
    TensorElement t(univariate(true), 2);
    t.add_term({x(0), x(1)}, q(2));
    t.add_term({x(1), x(0)}, q(-1, 2));
    EXPECT_EQ(json_io::decode_tensor(json_io::encode(t)), t);
}

TEST(Json, FamilyMatchLabels)
{
    FamilyMatch m;
    m.kind = FamilyKind::WeightZeroFamily;
    m.weight_zero = WeightZeroFamilyParams{2, {{1, q(1)}, {2, q(3)}}};
    json nonunital = json_io::encode(m, false);
    json unital = json_io::encode(m, true);
    EXPECT_EQ(nonunital["residues"][0]["b"], 1);
    EXPECT_EQ(unital["residues"][0]["b"], 0);
    EXPECT_EQ(nonunital["kind"], "WeightZeroFamily");
}

TEST(JsonProperty, RandomPolynomialsRoundTrip)
{
    std::mt19937 rng(81);
    AlgebraSpec alg{QQ(), 2, true, std::nullopt};
    std::uniform_int_distribution<int> e(0, 4);
    for (int it = 0; it < 100; ++it) {
        Polynomial f(alg);
        for (int k = 0; k < 5; ++k) {
            f.add_term(xy(e(rng), e(rng)), from_mpq(oracle::random_nonzero_rational(rng)));
        }
        EXPECT_EQ(json_io::decode_polynomial(json_io::encode(f), alg), f);
        EXPECT_EQ(json_io::encode(f).dump(), json_io::encode(json_io::decode_polynomial(json_io::encode(f), alg)).dump());
    }
}
