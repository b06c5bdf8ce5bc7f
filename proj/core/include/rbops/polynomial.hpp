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

#ifndef RBOPS_POLYNOMIAL_HPP
#define RBOPS_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbops/field.hpp"

namespace rbops {

/// Dense exponent vector x1^e1 * ... * xn^en.
///
/// Ordered by total degree first, then lexicographically by exponents; this
/// order drives every deterministic iteration in the library.
class Monomial {
public:
    Monomial() = default;
    /// Throws InvalidMonomial on a negative exponent.
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int nvars) { return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0)); }
    /// x^power in one variable.
    static Monomial power(int exponent) { return Monomial(std::vector<int>{exponent}); }
    /// x_{var+1}^exponent among `nvars` variables (var is 0-based).
    static Monomial variable(int nvars, int var, int exponent = 1);

    int nvars() const noexcept { return static_cast<int>(exponents_.size()); }
    int degree() const noexcept { return degree_; }
    int exponent(int var) const { return exponents_.at(static_cast<std::size_t>(var)); }
    const std::vector<int>& exponents() const noexcept { return exponents_; }
    bool is_constant() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& rhs) const;

    /// "x1^2*x3"; the constant monomial renders as "1".
    std::string to_string() const;

    friend bool operator==(const Monomial& lhs, const Monomial& rhs) noexcept
    {
        return lhs.exponents_ == rhs.exponents_;
    }
    friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) noexcept
    {
        if (auto c = lhs.degree_ <=> rhs.degree_; c != 0) {
            return c;
        }
        return lhs.exponents_ <=> rhs.exponents_;
    }

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

/// Free commutative algebra over `field` in `nvars` variables, unital or not,
/// optionally truncated: monomials of total degree above `truncation` are 0.
struct AlgebraSpec {
    FieldSpec field;
    int nvars = 1;
    bool unital = false;
    std::optional<int> truncation;

    static AlgebraSpec univariate(FieldSpec field, bool unital, std::optional<int> truncation = std::nullopt)
    {
        return AlgebraSpec{field, 1, unital, truncation};
    }

    /// Throws InvalidParams for nvars < 1 or truncation < 1.
    void validate() const;
    int min_degree() const noexcept { return unital ? 0 : 1; }
    /// Whether `m` is a (nonzero) basis element of the algebra.
    bool contains(const Monomial& m) const noexcept;
    /// Basis monomials up to total degree `max_degree`, clipped at the
    /// truncation, in canonical order.
    std::vector<Monomial> basis(int max_degree) const;

    std::string to_string() const;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

void require_same_algebra(const AlgebraSpec& a, const AlgebraSpec& b);

/// Sparse polynomial: no zero coefficients, no monomial past the truncation,
/// no constant term in a non-unital algebra.
class Polynomial {
public:
    using Terms = std::map<Monomial, FieldElement>;

    explicit Polynomial(AlgebraSpec algebra);

    static Polynomial term(const AlgebraSpec& algebra, const Monomial& m, const FieldElement& coeff);
    static Polynomial term(const AlgebraSpec& algebra, const Monomial& m);
    /// Parses the text form produced by to_string().
    static Polynomial parse(const AlgebraSpec& algebra, std::string_view text);

    const AlgebraSpec& algebra() const noexcept { return algebra_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Highest total degree, -1 for the zero polynomial.
    int degree() const noexcept;
    FieldElement coefficient(const Monomial& m) const;
    /// The single (monomial, coefficient) pair if the polynomial has exactly one term.
    std::optional<std::pair<Monomial, FieldElement>> single_term() const;

    /// Adds coeff*m. Monomials past the truncation vanish; a constant in a
    /// non-unital algebra throws InvalidMonomial.
    void add_term(const Monomial& m, const FieldElement& coeff);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const FieldElement& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
    friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// "3/7*x1^2*x3 + 1*x2"; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs)
    {
        return lhs.algebra_ == rhs.algebra_ && lhs.terms_ == rhs.terms_;
    }

private:
    AlgebraSpec algebra_;
    Terms terms_;
};

/// Product in the algebra; terms past the truncation are dropped eagerly.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// c1*a + c2*b.
Polynomial poly_linear(const Polynomial& a, const Polynomial& b, const FieldElement& c1, const FieldElement& c2);

} // namespace rbops

#endif // RBOPS_POLYNOMIAL_HPP
