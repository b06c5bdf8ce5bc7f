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

#include "rbops/operator.hpp"

#include <algorithm>

#include "rbops/error.hpp"

namespace rbops {

namespace {

void require_in_domain(const AlgebraSpec& algebra, int degree_bound, const Monomial& src)
{
    if (src.nvars() != algebra.nvars || (!algebra.unital && src.is_constant())) {
        throw Error(ErrorKind::InvalidMonomial, src.to_string() + " is not a basis monomial of " + algebra.to_string());
    }
    if (src.degree() > degree_bound) {
        throw Error(ErrorKind::DegreeBoundExceeded,
            "degree " + std::to_string(src.degree()) + " of " + src.to_string() + " exceeds bound "
                + std::to_string(degree_bound),
            src.exponents());
    }
}

FieldElement scale_factor(const std::vector<FieldElement>& scale, const Monomial& m)
{
    FieldElement f = FieldElement::one(scale.front().spec());
    for (int i = 0; i < m.nvars(); ++i) {
        f *= scale[static_cast<std::size_t>(i)].pow(m.exponent(i));
    }
    return f;
}

/// Sum of c_k (x + offset)^k over the terms of a univariate polynomial.
Polynomial substitute_shift(const Polynomial& f, long offset)
{
    const AlgebraSpec& algebra = f.algebra();
    const FieldSpec field = algebra.field;
    Polynomial out(algebra);
    const FieldElement shift(field, offset);
    for (const auto& [m, c] : f.terms()) {
        const int n = m.degree();
        // (x + s)^n = sum_k binom(n,k) s^(n-k) x^k
        FieldElement binom = FieldElement::one(field);
        for (int k = 0; k <= n; ++k) {
            if (k > 0) {
                binom = binom * FieldElement(field, n - k + 1) / FieldElement(field, k);
            }
            out.add_term(Monomial::power(k), c * binom * shift.pow(n - k));
        }
    }
    return out;
}

} // namespace

MonomialOperatorTable::MonomialOperatorTable(AlgebraSpec algebra, FieldElement weight, int degree_bound)
    : algebra_(std::move(algebra))
    , weight_(std::move(weight))
    , degree_bound_(degree_bound)
{
    algebra_.validate();
    if (degree_bound_ < algebra_.min_degree()) {
        throw Error(ErrorKind::InvalidParams, "degree bound below the lowest basis degree");
    }
    if (!(weight_.spec() == algebra_.field)) {
        throw Error(ErrorKind::MixedFieldSpecs, "weight lives in a different field");
    }
}

MonomialOperatorTable MonomialOperatorTable::identity(const AlgebraSpec& algebra, const FieldElement& weight,
    int degree_bound)
{
    return scalar(algebra, weight, degree_bound, FieldElement::one(algebra.field));
}

MonomialOperatorTable MonomialOperatorTable::scalar(const AlgebraSpec& algebra, const FieldElement& weight,
    int degree_bound, const FieldElement& c)
{
    MonomialOperatorTable t(algebra, weight, degree_bound);
    for (const Monomial& m : t.domain()) {
        t.set(m, c, m);
    }
    return t;
}

void MonomialOperatorTable::require_source(const Monomial& src) const
{
    require_in_domain(algebra_, degree_bound_, src);
}

void MonomialOperatorTable::set(const Monomial& src, const FieldElement& coeff, const Monomial& target)
{
    require_source(src);
    if (target.nvars() != algebra_.nvars || (!algebra_.unital && target.is_constant())) {
        throw Error(ErrorKind::InvalidMonomial, "target " + target.to_string() + " is not in " + algebra_.to_string());
    }
    if (coeff.is_zero() || !algebra_.contains(target)) {
        entries_.erase(src);
        return;
    }
    entries_.insert_or_assign(src, MonomialImage{coeff, target});
}

void MonomialOperatorTable::clear(const Monomial& src)
{
    require_source(src);
    entries_.erase(src);
}

void MonomialOperatorTable::set_weight(FieldElement weight)
{
    if (!(weight.spec() == algebra_.field)) {
        throw Error(ErrorKind::MixedFieldSpecs, "weight lives in a different field");
    }
    weight_ = std::move(weight);
}

std::optional<MonomialImage> MonomialOperatorTable::image(const Monomial& src) const
{
    require_source(src);
    auto it = entries_.find(src);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Polynomial MonomialOperatorTable::image_polynomial(const Monomial& src) const
{
    auto img = image(src);
    return img ? Polynomial::term(algebra_, img->target, img->coeff) : Polynomial(algebra_);
}

Polynomial MonomialOperatorTable::apply(const Polynomial& f) const
{
    require_same_algebra(algebra_, f.algebra());
    Polynomial out(algebra_);
    for (const auto& [m, c] : f.terms()) {
        if (auto img = image(m)) {
            out.add_term(img->target, c * img->coeff);
        }
    }
    return out;
}

bool MonomialOperatorTable::is_diagonal() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.first == e.second.target; });
}

DenseOperator::DenseOperator(AlgebraSpec algebra, FieldElement weight, int degree_bound)
    : algebra_(std::move(algebra))
    , weight_(std::move(weight))
    , degree_bound_(degree_bound)
{
    algebra_.validate();
    if (degree_bound_ < algebra_.min_degree()) {
        throw Error(ErrorKind::InvalidParams, "degree bound below the lowest basis degree");
    }
}

DenseOperator DenseOperator::from_table(const MonomialOperatorTable& table)
{
    DenseOperator d(table.algebra(), table.weight(), table.degree_bound());
    for (const auto& [src, img] : table.entries()) {
        d.set(src, Polynomial::term(table.algebra(), img.target, img.coeff));
    }
    return d;
}

void DenseOperator::set(const Monomial& src, Polynomial image)
{
    require_in_domain(algebra_, degree_bound_, src);
    require_same_algebra(algebra_, image.algebra());
    if (image.is_zero()) {
        images_.erase(src);
    } else {
        images_.insert_or_assign(src, std::move(image));
    }
}

Polynomial DenseOperator::image(const Monomial& src) const
{
    require_in_domain(algebra_, degree_bound_, src);
    auto it = images_.find(src);
    return it == images_.end() ? Polynomial(algebra_) : it->second;
}

Polynomial DenseOperator::apply(const Polynomial& f) const
{
    require_same_algebra(algebra_, f.algebra());
    Polynomial out(algebra_);
    for (const auto& [m, c] : f.terms()) {
        out += image(m) * c;
    }
    return out;
}

std::optional<MonomialOperatorTable> DenseOperator::to_monomial_table() const
{
    MonomialOperatorTable t(algebra_, weight_, degree_bound_);
    for (const auto& [src, img] : images_) {
        auto single = img.single_term();
        if (!single) {
            return std::nullopt;
        }
        t.set(src, single->second, single->first);
    }
    return t;
}

const AlgebraSpec& Operator::algebra() const noexcept
{
    return std::visit([](const auto& op) -> const AlgebraSpec& { return op.algebra(); }, rep_);
}

const FieldElement& Operator::weight() const noexcept
{
    return std::visit([](const auto& op) -> const FieldElement& { return op.weight(); }, rep_);
}

int Operator::degree_bound() const noexcept
{
    return std::visit([](const auto& op) { return op.degree_bound(); }, rep_);
}

Polynomial Operator::image(const Monomial& src) const
{
    if (const auto* t = as_table()) {
        return t->image_polynomial(src);
    }
    return std::get<DenseOperator>(rep_).image(src);
}

Polynomial Operator::apply(const Polynomial& f) const
{
    return std::visit([&f](const auto& op) { return op.apply(f); }, rep_);
}

DenseOperator Operator::to_dense() const
{
    if (const auto* t = as_table()) {
        return DenseOperator::from_table(*t);
    }
    return std::get<DenseOperator>(rep_);
}

bool Operator::agrees_with(const Operator& other, int degree) const
{
    if (!(algebra() == other.algebra())) {
        return false;
    }
    for (const Monomial& m : algebra().basis(degree)) {
        if (!(image(m) == other.image(m))) {
            return false;
        }
    }
    return true;
}

void AutomorphismSpec::validate(const AlgebraSpec& algebra) const
{
    if (kind == AutomorphismKind::Scaling) {
        if (static_cast<int>(scale.size()) != algebra.nvars) {
            throw Error(ErrorKind::InvalidAutomorphism, "scaling needs one constant per variable");
        }
        for (const auto& c : scale) {
            if (!(c.spec() == algebra.field) || c.is_zero()) {
                throw Error(ErrorKind::InvalidAutomorphism, "scaling constants must be nonzero field elements");
            }
        }
        return;
    }
    if (!algebra.unital || algebra.nvars != 1 || algebra.truncation) {
        throw Error(ErrorKind::InvalidAutomorphism, "x -> x-1 needs the untruncated unital univariate algebra");
    }
}

AutomorphismSpec AutomorphismSpec::inverse() const
{
    if (kind != AutomorphismKind::Scaling) {
        throw Error(ErrorKind::InvalidAutomorphism, "inverse() is only provided for scalings");
    }
    std::vector<FieldElement> inv;
    inv.reserve(scale.size());
    for (const auto& c : scale) {
        inv.push_back(c.inverse());
    }
    return scaling(std::move(inv));
}

Polynomial apply_automorphism(const AutomorphismSpec& psi, const Polynomial& f)
{
    psi.validate(f.algebra());
    if (psi.kind == AutomorphismKind::ShiftUnivariateUnital) {
        return substitute_shift(f, -1);
    }
    Polynomial out(f.algebra());
    for (const auto& [m, c] : f.terms()) {
        out.add_term(m, c * scale_factor(psi.scale, m));
    }
    return out;
}

Polynomial apply_inverse_automorphism(const AutomorphismSpec& psi, const Polynomial& f)
{
    psi.validate(f.algebra());
    if (psi.kind == AutomorphismKind::ShiftUnivariateUnital) {
        return substitute_shift(f, 1);
    }
    return apply_automorphism(psi.inverse(), f);
}

MonomialOperatorTable op_compose(const MonomialOperatorTable& r, const MonomialOperatorTable& s)
{
    require_same_algebra(r.algebra(), s.algebra());
    int bound = s.degree_bound();
    for (const auto& [src, img] : s.entries()) {
        if (img.target.degree() > r.degree_bound()) {
            bound = std::min(bound, src.degree() - 1);
        }
    }
    if (bound < s.algebra().min_degree()) {
        throw Error(ErrorKind::DegreeBoundExceeded, "composite is undefined on every degree");
    }
    MonomialOperatorTable out(s.algebra(), r.weight(), bound);
    for (const auto& [src, img] : s.entries()) {
        if (src.degree() > bound) {
            continue;
        }
        if (auto outer = r.image(img.target)) {
            out.set(src, img.coeff * outer->coeff, outer->target);
        }
    }
    return out;
}

MonomialOperatorTable op_left_mul(const MonomialOperatorTable& r, const Monomial& m, const FieldElement& c)
{
    const AlgebraSpec& algebra = r.algebra();
    if (m.nvars() != algebra.nvars) {
        throw Error(ErrorKind::InvalidMonomial, "multiplier has the wrong variable count");
    }
    int bound = r.degree_bound() - m.degree();
    if (algebra.truncation && *algebra.truncation <= r.degree_bound()) {
        bound = r.degree_bound();
    }
    if (bound < algebra.min_degree()) {
        throw Error(ErrorKind::DegreeBoundExceeded, "left multiplication leaves no defined degree");
    }
    MonomialOperatorTable out(algebra, r.weight(), bound);
    if (c.is_zero()) {
        return out;
    }
    for (const Monomial& u : out.domain()) {
        Monomial mu = m * u;
        if (!algebra.contains(mu)) {
            continue;
        }
        if (auto img = r.image(mu)) {
            out.set(u, c * img->coeff, img->target);
        }
    }
    return out;
}

MonomialOperatorTable op_rescale_weight(const MonomialOperatorTable& r)
{
    if (r.weight().is_zero()) {
        throw Error(ErrorKind::ZeroWeight, "cannot normalise a weight-zero operator");
    }
    const FieldElement inv = r.weight().inverse();
    MonomialOperatorTable out(r.algebra(), FieldElement::one(r.algebra().field), r.degree_bound());
    for (const auto& [src, img] : r.entries()) {
        out.set(src, img.coeff * inv, img.target);
    }
    return out;
}

Operator op_conjugate(const Operator& r, const AutomorphismSpec& psi)
{
    const AlgebraSpec& algebra = r.algebra();
    psi.validate(algebra);
    if (psi.kind == AutomorphismKind::Scaling) {
        if (const auto* table = r.as_table()) {
            MonomialOperatorTable out(algebra, table->weight(), table->degree_bound());
            for (const auto& [src, img] : table->entries()) {
                out.set(src, img.coeff * scale_factor(psi.scale, src) / scale_factor(psi.scale, img.target), img.target);
            }
            return out;
        }
    }
    DenseOperator out(algebra, r.weight(), r.degree_bound());
    for (const Monomial& src : algebra.basis(r.degree_bound())) {
        Polynomial moved = apply_automorphism(psi, Polynomial::term(algebra, src));
        out.set(src, apply_inverse_automorphism(psi, r.apply(moved)));
    }
    return out;
}

} // namespace rbops
