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


#ifndef RBOPS_TESTS_TEST_UTIL_HPP
#define RBOPS_TESTS_TEST_UTIL_HPP

#include <gmpxx.h>

#include "rbops/field.hpp"
#include "rbops/polynomial.hpp"

namespace testutil {

inline rbops::FieldSpec QQ() { return rbops::FieldSpec::rationals(); }
inline rbops::FieldSpec Fp(std::uint32_t p) { return rbops::FieldSpec::prime_field(p); }

inline rbops::FieldElement q(long n, long d = 1) { return rbops::FieldElement::make(QQ(), n, d); }
inline rbops::FieldElement fp(std::uint32_t p, long n) { return rbops::FieldElement(Fp(p), n); }
inline rbops::FieldElement from_mpq(const mpq_class& x) { return rbops::FieldElement::from_rational(QQ(), x); }

inline rbops::Monomial x(int n) { return rbops::Monomial::power(n); }
inline rbops::Monomial xy(int i, int j) { return rbops::Monomial(std::vector<int>{i, j}); }

inline rbops::AlgebraSpec univariate(bool unital, std::optional<int> trunc = std::nullopt,
    rbops::FieldSpec f = rbops::FieldSpec::rationals())
{
    return rbops::AlgebraSpec::univariate(f, unital, trunc);
}

} // namespace testutil

#define EXPECT_THROW_KIND(stmt, k)                                                                                     \
    do {                                                                                                               \
        try {                                                                                                          \
            stmt;                                                                                                      \
            ADD_FAILURE() << "expected " #k;                                                                           \
        } catch (const rbops::Error& e_) {                                                                             \
            EXPECT_EQ(e_.kind(), rbops::ErrorKind::k) << e_.what();                                                    \
        }                                                                                                              \
    } while (0)

#endif // RBOPS_TESTS_TEST_UTIL_HPP
