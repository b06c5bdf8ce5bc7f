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

#include "rbops/field.hpp"

#include <cctype>
#include <functional>

#include "rbops/error.hpp"

namespace rbops {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

mpz_class parse_integer(std::string_view text)
{
    text = trim(text);
    std::string digits(text);
    if (!digits.empty() && digits.front() == '+') {
        digits.erase(0, 1);
    }
    bool valid = !digits.empty();
    for (std::size_t i = 0; i < digits.size() && valid; ++i) {
        char c = digits[i];
        valid = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && digits.size() > 1);
    }
    if (!valid) {
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    return mpz_class(digits, 10);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1U) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p)
{
    if (p >= kMaxPrime || !is_prime(p)) {
        throw Error(ErrorKind::InvalidParams, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    FieldSpec spec;
    spec.kind_ = FieldKind::PrimeField;
    spec.p_ = p;
    return spec;
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    text = trim(text);
    if (text == "Q" || text == "q") {
        return rationals();
    }
    if (text.size() > 3 && (text.substr(0, 3) == "Fp:" || text.substr(0, 3) == "fp:")) {
        mpz_class p = parse_integer(text.substr(3));
        if (p <= 0 || p >= kMaxPrime) {
            throw Error(ErrorKind::InvalidParams, "modulus out of range: " + std::string(text));
        }
        return prime_field(static_cast<std::uint32_t>(p.get_ui()));
    }
    throw Error(ErrorKind::ParseError, "field must be 'Q' or 'Fp:<prime>', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const
{
    return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

FieldElement::FieldElement(FieldSpec spec, long value) : spec_(spec)
{
    if (spec_.is_rational()) {
        q_ = value;
    } else {
        residue_ = reduce(mpz_class(value), spec_.modulus());
    }
}

FieldElement FieldElement::make(FieldSpec spec, const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
    }
    FieldElement e(spec);
    if (spec.is_rational()) {
        e.q_ = mpq_class(num, den);
        e.q_.canonicalize();
        return e;
    }
    const std::uint32_t p = spec.modulus();
    const std::uint32_t d = reduce(den, p);
    if (d == 0) {
        throw Error(ErrorKind::NonInvertibleModP,
            "denominator " + den.get_str() + " is divisible by " + std::to_string(p));
    }
    const std::uint64_t n = reduce(num, p);
    e.residue_ = static_cast<std::uint32_t>(n * pow_mod(d, p - 2, p) % p);
    return e;
}

FieldElement FieldElement::make(FieldSpec spec, long num, long den)
{
    return make(spec, mpz_class(num), mpz_class(den));
}

FieldElement FieldElement::from_rational(FieldSpec spec, const mpq_class& value)
{
    return make(spec, value.get_num(), value.get_den());
}

FieldElement FieldElement::parse(FieldSpec spec, std::string_view text)
{
    text = trim(text);
    if (auto pos = text.find("mod"); pos != std::string_view::npos) {
        mpz_class k = parse_integer(text.substr(0, pos));
        mpz_class p = parse_integer(text.substr(pos + 3));
        if (spec.is_rational() || p != spec.modulus()) {
            throw Error(ErrorKind::MixedFieldSpecs,
                "'" + std::string(text) + "' does not belong to " + spec.to_string());
        }
        return make(spec, k, mpz_class(1));
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return make(spec, parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }
    return make(spec, parse_integer(text), mpz_class(1));
}

bool FieldElement::is_zero() const noexcept
{
    return spec_.is_rational() ? sgn(q_) == 0 : residue_ == 0;
}

bool FieldElement::is_one() const noexcept
{
    return spec_.is_rational() ? q_ == 1 : residue_ == 1 % spec_.modulus();
}

const mpq_class& FieldElement::rational() const
{
    if (!spec_.is_rational()) {
        throw Error(ErrorKind::MixedFieldSpecs, "rational() on a prime-field element");
    }
    return q_;
}

std::uint32_t FieldElement::residue() const
{
    if (spec_.is_rational()) {
        throw Error(ErrorKind::MixedFieldSpecs, "residue() on a rational element");
    }
    return residue_;
}

void FieldElement::require_same(const FieldElement& rhs) const
{
    if (!(spec_ == rhs.spec_)) {
        throw Error(ErrorKind::MixedFieldSpecs, spec_.to_string() + " vs " + rhs.spec_.to_string());
    }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs)
{
    require_same(rhs);
    if (spec_.is_rational()) {
        q_ += rhs.q_;
    } else {
        std::uint64_t s = std::uint64_t{residue_} + rhs.residue_;
        residue_ = static_cast<std::uint32_t>(s % spec_.modulus());
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs)
{
    require_same(rhs);
    if (spec_.is_rational()) {
        q_ -= rhs.q_;
    } else {
        std::uint64_t s = std::uint64_t{residue_} + spec_.modulus() - rhs.residue_;
        residue_ = static_cast<std::uint32_t>(s % spec_.modulus());
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs)
{
    require_same(rhs);
    if (spec_.is_rational()) {
        q_ *= rhs.q_;
    } else {
        residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * rhs.residue_ % spec_.modulus());
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs)
{
    require_same(rhs);
    return *this *= rhs.inverse();
}

FieldElement FieldElement::operator-() const
{
    FieldElement r(spec_);
    return r -= *this;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    FieldElement r(spec_);
    if (spec_.is_rational()) {
        r.q_ = 1 / q_;
        r.q_.canonicalize();
    } else {
        r.residue_ = pow_mod(residue_, spec_.modulus() - 2, spec_.modulus());
    }
    return r;
}

FieldElement FieldElement::pow(long exponent) const
{
    FieldElement base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    if (spec_.is_rational()) {
        FieldElement r(spec_);
        mpz_pow_ui(r.q_.get_num_mpz_t(), base.q_.get_num_mpz_t(), e);
        mpz_pow_ui(r.q_.get_den_mpz_t(), base.q_.get_den_mpz_t(), e);
        return r;
    }
    FieldElement r(spec_);
    r.residue_ = pow_mod(base.residue_, e, spec_.modulus());
    return r;
}

std::string FieldElement::coefficient_string() const
{
    if (spec_.is_rational()) {
        return q_.get_str(10);
    }
    return std::to_string(residue_);
}

std::string FieldElement::to_string() const
{
    if (spec_.is_rational()) {
        return q_.get_str(10);
    }
    return std::to_string(residue_) + " mod " + std::to_string(spec_.modulus());
}

std::size_t FieldElement::hash() const noexcept
{
    if (!spec_.is_rational()) {
        return std::hash<std::uint64_t>{}((std::uint64_t{spec_.modulus()} << 32U) | residue_);
    }
    std::size_t h = 0;
    auto mix = [&h](const mpz_class& z) {
        const std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) {
            h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL
                + (h << 6U) + (h >> 2U);
        }
        h ^= static_cast<std::size_t>(sgn(z) + 1);
    };
    mix(q_.get_num());
    mix(q_.get_den());
    return h;
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) noexcept
{
    if (!(lhs.spec_ == rhs.spec_)) {
        return false;
    }
    return lhs.spec_.is_rational() ? lhs.q_ == rhs.q_ : lhs.residue_ == rhs.residue_;
}

std::strong_ordering operator<=>(const FieldElement& lhs, const FieldElement& rhs) noexcept
{
    if (lhs.spec_.kind() != rhs.spec_.kind()) {
        return lhs.spec_.kind() <=> rhs.spec_.kind();
    }
    if (lhs.spec_.modulus() != rhs.spec_.modulus()) {
        return lhs.spec_.modulus() <=> rhs.spec_.modulus();
    }
    if (lhs.spec_.is_rational()) {
        return cmp(lhs.q_, rhs.q_) <=> 0;
    }
    return lhs.residue_ <=> rhs.residue_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    throw Error(ErrorKind::InvalidParams, "unknown arithmetic operation");
}

} // namespace rbops
