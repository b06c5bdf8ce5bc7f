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

#ifndef RBOPS_FIELD_HPP
#define RBOPS_FIELD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rbops {

enum class FieldKind { Rationals, PrimeField };

/// The exact scalar domain: the rationals, or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
    FieldSpec() = default;

    static FieldSpec rationals() noexcept { return {}; }
    /// Throws InvalidParams unless p is a prime below 2^31.
    static FieldSpec prime_field(std::uint32_t p);
    /// Accepts "Q" or "Fp:<p>".
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == FieldKind::Rationals; }
    /// 0 for the rationals.
    std::uint32_t modulus() const noexcept { return p_; }
    /// 0 for the rationals, p otherwise.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldKind kind_ = FieldKind::Rationals;
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of a FieldSpec in canonical form. Rationals are kept in lowest
/// terms with a positive denominator, residues are reduced into [0, p), so
/// equality and hashing work on the representation directly.
class FieldElement {
public:
    /// Zero of the rationals.
    FieldElement() = default;
    /// Zero of `spec`.
    explicit FieldElement(FieldSpec spec) : spec_(spec) {}
    FieldElement(FieldSpec spec, long value);

    /// num/den in `spec`. Throws ZeroDenominator or NonInvertibleModP.
    static FieldElement make(FieldSpec spec, const mpz_class& num, const mpz_class& den);
    static FieldElement make(FieldSpec spec, long num, long den);
    /// Image of a rational number in `spec`.
    static FieldElement from_rational(FieldSpec spec, const mpq_class& value);
    /// Accepts "a", "a/b" and "k mod p" (the latter only when p matches `spec`).
    static FieldElement parse(FieldSpec spec, std::string_view text);

    static FieldElement zero(FieldSpec spec) { return FieldElement(spec); }
    static FieldElement one(FieldSpec spec) { return FieldElement(spec, 1); }

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Only valid over the rationals.
    const mpq_class& rational() const;
    /// Only valid over a prime field.
    std::uint32_t residue() const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);
    FieldElement operator-() const;

    /// Throws DivisionByZero on zero.
    FieldElement inverse() const;
    /// Negative exponents invert first.
    FieldElement pow(long exponent) const;

    /// "a/b" / "a" over the rationals, "k mod p" over GF(p).
    std::string to_string() const;
    /// Like to_string() but a bare residue over GF(p); used inside
    /// polynomials and JSON where the field is implied by context.
    std::string coefficient_string() const;

    std::size_t hash() const noexcept;

    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs) noexcept;
    /// Deterministic total order: by value over Q, by residue over GF(p).
    friend std::strong_ordering operator<=>(const FieldElement& lhs, const FieldElement& rhs) noexcept;

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

private:
    void require_same(const FieldElement& rhs) const;

    FieldSpec spec_;
    mpq_class q_;
    std::uint32_t residue_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

struct FieldElementHash {
    std::size_t operator()(const FieldElement& e) const noexcept { return e.hash(); }
};

} // namespace rbops

#endif // RBOPS_FIELD_HPP
