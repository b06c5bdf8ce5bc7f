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

#include "rbops/rota_baxter.hpp"

#include <map>

#include "rbops/error.hpp"

namespace rbops {

namespace {

Polynomial monomial_poly(const AlgebraSpec& algebra, const Monomial& m)
{
    return Polynomial::term(algebra, m);
}

void require_univariate(const AlgebraSpec& algebra, const char* what)
{
    if (algebra.nvars != 1) {
        throw Error(ErrorKind::InvalidParams, std::string(what) + " needs a univariate algebra");
    }
}

} // namespace

Polynomial rb_residual(const Operator& r, const Monomial& u, const Monomial& v, const FieldElement& lambda)
{
    const AlgebraSpec& algebra = r.algebra();
    const Polynomial pu = monomial_poly(algebra, u);
    const Polynomial pv = monomial_poly(algebra, v);
    const Polynomial ru = r.image(u);
    const Polynomial rv = r.image(v);
    Polynomial inner = poly_mul(ru, pv) + poly_mul(pu, rv) + poly_mul(pu, pv) * lambda;
    return poly_mul(ru, rv) - r.apply(inner);
}

RBCheckResult rb_check(const Operator& r, const FieldElement& lambda, int degree)
{
    const AlgebraSpec& algebra = r.algebra();
    const bool truncated = algebra.truncation.has_value();
    const auto basis = algebra.basis(degree);
    RBCheckResult result;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            if (!truncated && basis[i].degree() + basis[j].degree() > degree) {
                continue;
            }
            Polynomial residual(algebra);
            try {
                residual = rb_residual(r, basis[i], basis[j], lambda);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DegreeBoundExceeded) {
                    throw;
                }
                ++result.skipped_pairs;
                continue;
            }
            ++result.checked_pairs;
            if (!residual.is_zero()) {
                result.passed = false;
                result.violation = RBViolation{basis[i], basis[j], std::move(residual)};
                return result;
            }
        }
    }
    return result;
}

Polynomial rb_multi_residual(const Operator& r, const std::vector<Monomial>& args)
{
    if (!r.weight().is_zero()) {
        throw Error(ErrorKind::NonzeroWeight, "the k-fold identity needs weight zero");
    }
    const AlgebraSpec& algebra = r.algebra();
    std::vector<Polynomial> images;
    images.reserve(args.size());
    for (const auto& a : args) {
        images.push_back(r.image(a));
    }
    if (args.empty()) {
        throw Error(ErrorKind::InvalidParams, "the k-fold identity needs arguments");
    }
    Polynomial lhs = images.front();
    Polynomial inner(algebra);
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) {
            lhs = poly_mul(lhs, images[i]);
        }
        Polynomial term = monomial_poly(algebra, args[i]);
        for (std::size_t j = 0; j < args.size(); ++j) {
            if (j != i) {
                term = poly_mul(term, images[j]);
            }
        }
        inner += term;
    }
    return lhs - r.apply(inner);
}

std::optional<Polynomial> rb_power_check(const Operator& r, const Monomial& w, int k)
{
    if (!r.weight().is_zero()) {
        throw Error(ErrorKind::NonzeroWeight, "the power identity needs weight zero");
    }
    if (k < 2) {
        throw Error(ErrorKind::InvalidParams, "power identity needs k >= 2");
    }
    const AlgebraSpec& algebra = r.algebra();
    const Polynomial rw = r.image(w);
    Polynomial power = rw;
    for (int i = 1; i < k - 1; ++i) {
        power = poly_mul(power, rw);
    }
    const Polynomial lhs = poly_mul(power, rw);
    const Polynomial inner = poly_mul(monomial_poly(algebra, w), power);
    Polynomial residual = lhs - r.apply(inner) * FieldElement(algebra.field, k);
    if (residual.is_zero()) {
        return std::nullopt;
    }
    return residual;
}

MonomialOperatorTable construct_weight_zero(const WeightZeroFamilyParams& params, const AlgebraSpec& algebra,
    int degree)
{
    algebra.validate();
    require_univariate(algebra, "the weight-zero family");
    const int m = params.m;
    if (m < 1 || params.residues.size() != static_cast<std::size_t>(m)) {
        throw Error(ErrorKind::InvalidParams, "need m >= 1 and exactly m residue parameters");
    }
    for (const auto& res : params.residues) {
        if (res.p < 0 || (res.p == 0) != res.q.is_zero()) {
            throw Error(ErrorKind::InvalidParams, "p_b = 0 must coincide with q_b = 0");
        }
    }
    const FieldSpec field = algebra.field;
    MonomialOperatorTable table(algebra, FieldElement::zero(field), degree);
    for (const auto& src : algebra.basis(degree)) {
        const int n = src.degree();
        const int b = algebra.unital ? n % m : (n - 1) % m + 1;
        const int a = (n - b) / m;
        const auto& res = params.residues[static_cast<std::size_t>(algebra.unital ? b : b - 1)];
        if (res.q.is_zero()) {
            continue;
        }
        const int target = m * (a + res.p);
        const Monomial dst = Monomial::power(target);
        if (!algebra.contains(dst)) {
            continue;
        }
        const FieldElement denom(field, target);
        if (denom.is_zero()) {
            throw Error(ErrorKind::CharacteristicObstruction,
                "denominator " + std::to_string(target) + " vanishes in " + field.to_string(), {n});
        }
        table.set(src, res.q / denom, dst);
    }
    return table;
}

MonomialOperatorTable construct_weight_one_univariate(const FieldElement& alpha, const AlgebraSpec& algebra,
    int degree)
{
    algebra.validate();
    require_univariate(algebra, "the weight-one family");
    const FieldSpec field = algebra.field;
    const FieldElement one = FieldElement::one(field);
    MonomialOperatorTable table(algebra, one, degree);
    for (const auto& src : algebra.basis(degree)) {
        const int n = src.degree();
        const FieldElement num = alpha.pow(n);
        const FieldElement den = (alpha + one).pow(n) - num;
        if (den.is_zero()) {
            throw Error(ErrorKind::DenominatorVanishes,
                "(alpha+1)^" + std::to_string(n) + " = alpha^" + std::to_string(n), {n});
        }
        table.set(src, num / den, src);
    }
    return table;
}

MonomialOperatorTable construct_multivariate(MultivariateKind kind, const std::vector<FieldElement>& alphas,
    const AlgebraSpec& algebra, int degree)
{
    algebra.validate();
    if (alphas.size() != static_cast<std::size_t>(algebra.nvars)) {
        throw Error(ErrorKind::InvalidParams, "need one alpha per variable");
    }
    const FieldSpec field = algebra.field;
    for (const auto& a : alphas) {
        if (a.is_zero()) {
            throw Error(ErrorKind::InvalidParams, "alphas must be nonzero");
        }
    }
    const FieldElement one = FieldElement::one(field);
    MonomialOperatorTable table(algebra,
        kind == MultivariateKind::WeightOne ? one : FieldElement::zero(field), degree);
    for (const auto& src : algebra.basis(degree)) {
        FieldElement num = one;
        FieldElement den = FieldElement::zero(field);
        if (kind == MultivariateKind::WeightOne) {
            FieldElement shifted = one;
            for (int k = 0; k < algebra.nvars; ++k) {
                num *= alphas[static_cast<std::size_t>(k)].pow(src.exponent(k));
                shifted *= (alphas[static_cast<std::size_t>(k)] + one).pow(src.exponent(k));
            }
            den = shifted - num;
        } else {
            for (int k = 0; k < algebra.nvars; ++k) {
                den += FieldElement(field, src.exponent(k)) / alphas[static_cast<std::size_t>(k)];
            }
        }
        if (den.is_zero()) {
            throw Error(ErrorKind::DenominatorVanishes, "denominator vanishes at " + src.to_string(),
                src.exponents());
        }
        table.set(src, num / den, src);
    }
    return table;
}

Operator construct_integral(const FieldElement& a, const AlgebraSpec& algebra, int degree)
{
    algebra.validate();
    require_univariate(algebra, "the integration operator");
    if (!algebra.unital) {
        throw Error(ErrorKind::InvalidParams, "the integration operator needs a unital algebra");
    }
    const FieldSpec field = algebra.field;
    DenseOperator dense(algebra, FieldElement::zero(field), degree);
    for (const auto& src : algebra.basis(degree)) {
        const int n1 = src.degree() + 1;
        const FieldElement denom(field, n1);
        if (denom.is_zero()) {
            throw Error(ErrorKind::CharacteristicObstruction,
                "denominator " + std::to_string(n1) + " vanishes in " + field.to_string(), {src.degree()});
        }
        const FieldElement inv = denom.inverse();
        Polynomial image(algebra);
        image.add_term(Monomial::power(n1), inv);
        image.add_term(Monomial::one(1), -(a.pow(n1) * inv));
        dense.set(src, std::move(image));
    }
    if (a.is_zero()) {
        if (auto table = dense.to_monomial_table()) {
            return Operator(std::move(*table));
        }
    }
    return Operator(std::move(dense));
}

MonomialOperatorTable construct_splitting(const SplittingSpec& spec, const FieldElement& lambda, int degree)
{
    const AlgebraSpec& algebra = spec.algebra;
    algebra.validate();
    const auto basis = algebra.basis(degree);
    std::map<Monomial, int> parts;
    for (const auto& m : basis) {
        const int part = spec.part(m);
        if (part != 1 && part != 2) {
            throw Error(ErrorKind::InvalidParams, "splitting parts are 1 and 2");
        }
        parts.emplace(m, part);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const int part = parts.at(basis[i]);
            if (parts.at(basis[j]) != part) {
                continue;
            }
            const Monomial prod = basis[i] * basis[j];
            auto it = parts.find(prod);
            if (it == parts.end() || it->second == part) {
                continue;
            }
            std::vector<int> witness{part};
            witness.insert(witness.end(), basis[i].exponents().begin(), basis[i].exponents().end());
            witness.insert(witness.end(), basis[j].exponents().begin(), basis[j].exponents().end());
            throw Error(ErrorKind::NotASubalgebra,
                "part " + std::to_string(part) + " is not closed: " + basis[i].to_string() + " * "
                    + basis[j].to_string(),
                std::move(witness));
        }
    }
    MonomialOperatorTable table(algebra, lambda, degree);
    for (const auto& [m, part] : parts) {
        if (part == 2) {
            table.set(m, -lambda, m);
        }
    }
    return table;
}

KernelImage op_kernel_image(const MonomialOperatorTable& r, int degree)
{
    const AlgebraSpec& algebra = r.algebra();
    KernelImage out;
    std::map<Monomial, std::vector<std::pair<Monomial, FieldElement>>> by_target;
    for (const auto& src : algebra.basis(degree)) {
        const auto img = r.image(src);
        if (!img) {
            out.kernel.push_back(Polynomial::term(algebra, src));
            continue;
        }
        by_target[img->target].emplace_back(src, img->coeff);
    }
    for (const auto& [target, sources] : by_target) {
        out.image.emplace_back(target, sources.front().second);
        const auto& [first, c0] = sources.front();
        for (std::size_t k = 1; k < sources.size(); ++k) {
            const auto& [src, ck] = sources[k];
            Polynomial diff = Polynomial::term(algebra, first, c0.inverse());
            diff -= Polynomial::term(algebra, src, ck.inverse());
            out.kernel.push_back(std::move(diff));
        }
    }
    return out;
}

UnitConstraint check_unit_constraint(const MonomialOperatorTable& r, const FieldElement& lambda)
{
    const AlgebraSpec& algebra = r.algebra();
    if (!algebra.unital) {
        throw Error(ErrorKind::NonUnitalAlgebra, "unit constraint needs a unital algebra");
    }
    if (lambda.is_zero()) {
        throw Error(ErrorKind::ZeroWeight, "unit constraint needs a nonzero weight");
    }
    const Monomial unit = Monomial::one(algebra.nvars);
    const auto img = r.image(unit);
    if (!img) {
        return {UnitConstraintKind::SplittingZero, std::nullopt};
    }
    if (img->target.is_constant()) {
        if (img->coeff == -lambda) {
            return {UnitConstraintKind::SplittingMinusLambda, std::nullopt};
        }
        return {UnitConstraintKind::Violation, rb_residual(Operator(r), unit, unit, lambda)};
    }
    const Polynomial r1 = Polynomial::term(algebra, img->target, img->coeff);
    Polynomial witness = poly_mul(r1, r1) - r1 * lambda;
    return {UnitConstraintKind::Violation, std::move(witness)};
}

KernelObstruction check_kernel_obstructions(const MonomialOperatorTable& r)
{
    const AlgebraSpec& algebra = r.algebra();
    std::vector<Monomial> zero_sources;
    std::map<Monomial, Monomial> first_source;
    KernelObstruction out;
    for (const auto& src : algebra.basis(r.degree_bound())) {
        const auto img = r.image(src);
        if (!img) {
            zero_sources.push_back(src);
            continue;
        }
        auto [it, inserted] = first_source.emplace(img->target, src);
        if (!inserted && out.passed) {
            out.passed = false;
            out.reason = "collision";
            out.witness = {it->second, src};
        }
    }
    if (!out.passed) {
        return out;
    }
    for (const auto& z : zero_sources) {
        if (first_source.count(z) != 0) {
            out.passed = false;
            out.reason = "kernel-image";
            out.witness = {z};
            return out;
        }
    }
    return out;
}

} // namespace rbops
