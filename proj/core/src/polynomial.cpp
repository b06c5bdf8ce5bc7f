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

#include "rbops/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rbops/error.hpp"

namespace rbops {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    for (int e : exponents_) {
        if (e < 0) {
            throw Error(ErrorKind::InvalidMonomial, "negative exponent");
        }
    }
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::variable(int nvars, int var, int exponent)
{
    if (var < 0 || var >= nvars) {
        throw Error(ErrorKind::InvalidMonomial, "variable index out of range");
    }
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = exponent;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    if (nvars() != rhs.nvars()) {
        throw Error(ErrorKind::MixedAlgebras, "monomials over different variable counts");
    }
    Monomial r = *this;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        r.exponents_[i] += rhs.exponents_[i];
    }
    r.degree_ += rhs.degree_;
    return r;
}

bool Monomial::divides(const Monomial& rhs) const
{
    if (nvars() != rhs.nvars()) {
        return false;
    }
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > rhs.exponents_[i]) {
            return false;
        }
    }
    return true;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += "x" + std::to_string(i + 1);
        if (exponents_[i] != 1) {
            out += "^" + std::to_string(exponents_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

void AlgebraSpec::validate() const
{
    if (nvars < 1) {
        throw Error(ErrorKind::InvalidParams, "algebra needs at least one variable");
    }
    if (truncation && *truncation < 1) {
        throw Error(ErrorKind::InvalidParams, "truncation bound must be >= 1");
    }
}

bool AlgebraSpec::contains(const Monomial& m) const noexcept
{
    if (m.nvars() != nvars) {
        return false;
    }
    if (!unital && m.is_constant()) {
        return false;
    }
    return !truncation || m.degree() <= *truncation;
}

namespace {

void compositions(int remaining, std::size_t index, std::vector<int>& current, std::vector<Monomial>& out)
{
    if (index + 1 == current.size()) {
        current[index] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[index] = e;
        compositions(remaining - e, index + 1, current, out);
    }
}

} // namespace

std::vector<Monomial> AlgebraSpec::basis(int max_degree) const
{
    int top = truncation ? std::min(max_degree, *truncation) : max_degree;
    std::vector<Monomial> out;
    std::vector<int> current(static_cast<std::size_t>(nvars), 0);
    for (int d = min_degree(); d <= top; ++d) {
        compositions(d, 0, current, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string AlgebraSpec::to_string() const
{
    std::string s = field.to_string() + (unital ? "[" : "_0[");
    for (int i = 1; i <= nvars; ++i) {
        s += (i > 1 ? ",x" : "x") + std::to_string(i);
    }
    s += "]";
    if (truncation) {
        s += "/(deg>" + std::to_string(*truncation) + ")";
    }
    return s;
}

void require_same_algebra(const AlgebraSpec& a, const AlgebraSpec& b)
{
    if (!(a == b)) {
        throw Error(ErrorKind::MixedAlgebras, a.to_string() + " vs " + b.to_string());
    }
}

Polynomial::Polynomial(AlgebraSpec algebra) : algebra_(std::move(algebra)) {}

Polynomial Polynomial::term(const AlgebraSpec& algebra, const Monomial& m, const FieldElement& coeff)
{
    Polynomial p(algebra);
    p.add_term(m, coeff);
    return p;
}

Polynomial Polynomial::term(const AlgebraSpec& algebra, const Monomial& m)
{
    return term(algebra, m, FieldElement::one(algebra.field));
}

int Polynomial::degree() const noexcept
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.degree());
    }
    return d;
}

FieldElement Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(algebra_.field) : it->second;
}

std::optional<std::pair<Monomial, FieldElement>> Polynomial::single_term() const
{
    if (terms_.size() != 1) {
        return std::nullopt;
    }
    return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const FieldElement& coeff)
{
    if (m.nvars() != algebra_.nvars) {
        throw Error(ErrorKind::InvalidMonomial, "monomial " + m.to_string() + " has the wrong variable count");
    }
    if (!algebra_.unital && m.is_constant()) {
        throw Error(ErrorKind::InvalidMonomial, "constant term in a non-unital algebra");
    }
    if (algebra_.truncation && m.degree() > *algebra_.truncation) {
        return;
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    require_same_algebra(algebra_, rhs.algebra_);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    require_same_algebra(algebra_, rhs.algebra_);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, coeff] : r.terms_) {
        coeff = -coeff;
    }
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    return poly_mul(a, b);
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b)
{
    require_same_algebra(a.algebra(), b.algebra());
    Polynomial r(a.algebra());
    const auto& trunc = a.algebra().truncation;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (trunc && ma.degree() + mb.degree() > *trunc) {
                continue;
            }
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Polynomial poly_linear(const Polynomial& a, const Polynomial& b, const FieldElement& c1, const FieldElement& c2)
{
    require_same_algebra(a.algebra(), b.algebra());
    Polynomial r = a * c1;
    r += b * c2;
    return r;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += c.coefficient_string();
        if (!m.is_constant()) {
            out += "*" + m.to_string();
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const AlgebraSpec& algebra, std::string_view text) : algebra_(algebra), text_(text) {}

    Polynomial run()
    {
        Polynomial result(algebra_);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '0' && rest_is_blank(pos_ + 1)) {
            return result;
        }
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) {
                if (first) {
                    fail("empty polynomial");
                }
                break;
            }
            bool negate = false;
            if (!first) {
                char op = text_[pos_];
                if (op != '+' && op != '-') {
                    fail("expected '+' or '-'");
                }
                negate = op == '-';
                ++pos_;
                skip_ws();
            }
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                negate = negate != (text_[pos_] == '-');
                ++pos_;
                skip_ws();
            }
            auto [m, c] = parse_term();
            result.add_term(m, negate ? -c : c);
            first = false;
        }
        return result;
    }

private:
    bool rest_is_blank(std::size_t from) const
    {
        for (std::size_t i = from; i < text_.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(text_[i]))) {
                return false;
            }
        }
        return true;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::pair<Monomial, FieldElement> parse_term()
    {
        FieldElement coeff = FieldElement::one(algebra_.field);
        std::vector<int> exps(static_cast<std::size_t>(algebra_.nvars), 0);
        bool have_factor = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::string num = read_digits();
            std::string den = "1";
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                den = read_digits();
            }
            coeff = FieldElement::make(algebra_.field, mpz_class(num), mpz_class(den));
            have_factor = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
            } else {
                return {Monomial(exps), coeff};
            }
        }
        while (true) {
            if (pos_ >= text_.size() || text_[pos_] != 'x') {
                if (!have_factor) {
                    fail("expected a coefficient or variable");
                }
                fail("expected a variable after '*'");
            }
            ++pos_;
            int var = 1;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                var = std::stoi(read_digits());
            } else if (algebra_.nvars != 1) {
                fail("variable index required in a multivariate algebra");
            }
            if (var < 1 || var > algebra_.nvars) {
                fail("variable index out of range");
            }
            int e = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                e = std::stoi(read_digits());
            }
            exps[static_cast<std::size_t>(var - 1)] += e;
            have_factor = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                continue;
            }
            break;
        }
        return {Monomial(exps), coeff};
    }

    const AlgebraSpec& algebra_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(const AlgebraSpec& algebra, std::string_view text)
{
    return PolyParser(algebra, text).run();
}

} // namespace rbops
