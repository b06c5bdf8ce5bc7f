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

#include "rbops/grading.hpp"

#include <algorithm>

#include "rbops/error.hpp"
#include "rbops/linalg.hpp"
#include "rbops/rota_baxter.hpp"

namespace rbops {

std::optional<FieldElement> partial_product(PartialProductKind kind, const FieldElement& l, const FieldElement& m)
{
    if (l.is_zero() || m.is_zero()) {
        throw Error(ErrorKind::ZeroArgument, "partial products take nonzero arguments");
    }
    FieldElement den = l + m;
    if (kind == PartialProductKind::Circ) {
        den += FieldElement::one(l.spec());
    }
    if (den.is_zero()) {
        return std::nullopt;
    }
    return l * m / den;
}

namespace {

FieldElement phi(PartialProductKind kind, const FieldElement& x)
{
    return kind == PartialProductKind::Circ ? FieldElement::one(x.spec()) + x.inverse() : x.inverse();
}

void require_positive(const FieldElement& x)
{
    if (!x.spec().is_rational() || x.rational() <= 0) {
        throw Error(ErrorKind::InvalidParams, "semigroup samples must be positive rationals");
    }
}

bool check_pair(PartialProductKind kind, const FieldElement& x, const FieldElement& y, IsoCheckResult& out)
{
    require_positive(x);
    require_positive(y);
    ++out.pairs_checked;
    const auto xy = partial_product(kind, x, y);
    if (!xy) {
        return true;
    }
    const FieldElement lhs = phi(kind, *xy);
    const FieldElement rhs = kind == PartialProductKind::Circ ? phi(kind, x) * phi(kind, y) : phi(kind, x) + phi(kind, y);
    if (lhs != rhs) {
        out.passed = false;
        out.counterexample = "phi(" + x.to_string() + ", " + y.to_string() + ")";
        return false;
    }
    return true;
}

bool check_triple(PartialProductKind kind, const std::array<FieldElement, 3>& t, IsoCheckResult& out)
{
    for (const auto& x : t) {
        require_positive(x);
    }
    const auto xy = partial_product(kind, t[0], t[1]);
    const auto yz = partial_product(kind, t[1], t[2]);
    if (!xy || !yz) {
        return true;
    }
    const auto left = partial_product(kind, *xy, t[2]);
    const auto right = partial_product(kind, t[0], *yz);
    if (!left || !right) {
        return true;
    }
    ++out.triples_checked;
    if (*left != *right) {
        out.passed = false;
        out.counterexample = "associativity at (" + t[0].to_string() + ", " + t[1].to_string() + ", "
            + t[2].to_string() + ")";
        return false;
    }
    return true;
}

} // namespace

IsoCheckResult check_iso_pairs(PartialProductKind kind, const std::vector<std::pair<FieldElement, FieldElement>>& pairs)
{
    IsoCheckResult out;
    for (const auto& [x, y] : pairs) {
        if (!check_pair(kind, x, y, out)) {
            break;
        }
    }
    return out;
}

IsoCheckResult check_associativity(PartialProductKind kind, const std::vector<std::array<FieldElement, 3>>& triples)
{
    IsoCheckResult out;
    for (const auto& t : triples) {
        if (!check_triple(kind, t, out)) {
            break;
        }
    }
    return out;
}

IsoCheckResult semigroup_iso_check(PartialProductKind kind, const std::vector<FieldElement>& sample)
{
    IsoCheckResult out;
    for (const auto& x : sample) {
        for (const auto& y : sample) {
            if (!check_pair(kind, x, y, out)) {
                return out;
            }
        }
    }
    for (const auto& x : sample) {
        for (const auto& y : sample) {
            for (const auto& z : sample) {
                if (!check_triple(kind, {x, y, z}, out)) {
                    return out;
                }
            }
        }
    }
    return out;
}

std::size_t GradingDecomposition::violations() const
{
    return static_cast<std::size_t>(std::count_if(products.begin(), products.end(),
        [](const ProductReport& p) { return p.status == ProductStatus::Violation; }));
}

const ProductReport* GradingDecomposition::find(const FieldElement& l, const FieldElement& m) const
{
    for (const auto& p : products) {
        if ((p.l == l && p.m == m) || (p.l == m && p.m == l)) {
            return &p;
        }
    }
    return nullptr;
}

namespace {

using Vec = std::vector<FieldElement>;

Vec to_vector(const Polynomial& f, const std::map<Monomial, std::size_t>& index, FieldSpec field)
{
    Vec v(index.size(), FieldElement::zero(field));
    for (const auto& [m, c] : f.terms()) {
        v[index.at(m)] = c;
    }
    return v;
}

Polynomial to_polynomial(const Vec& v, const std::vector<Monomial>& basis, const AlgebraSpec& algebra)
{
    Polynomial f(algebra);
    for (std::size_t i = 0; i < v.size(); ++i) {
        f.add_term(basis[i], v[i]);
    }
    return f;
}

} // namespace

GradingDecomposition grading_decompose(const Operator& r, const FieldElement& weight)
{
    const AlgebraSpec& algebra = r.algebra();
    const FieldSpec field = algebra.field;
    if (!algebra.truncation) {
        throw Error(ErrorKind::InvalidParams, "grading needs a truncated (finite-dimensional) algebra");
    }
    if (!weight.is_zero() && !weight.is_one()) {
        throw Error(ErrorKind::InvalidParams, "grading supports weight 0 or 1");
    }
    const int n = *algebra.truncation;
    if (r.degree_bound() < n) {
        throw Error(ErrorKind::DegreeBoundExceeded, "operator must be defined up to the truncation");
    }
    const auto basis = algebra.basis(n);
    const std::size_t dim = basis.size();
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i) {
        index.emplace(basis[i], i);
    }

    GradingDecomposition out{algebra, weight, {}, {}, false, {}};
    std::map<FieldElement, std::vector<Vec>> vectors;
    const auto* table = r.as_table();
    if (table && table->is_diagonal()) {
        for (std::size_t i = 0; i < dim; ++i) {
            const auto img = table->image(basis[i]);
            Vec v(dim, FieldElement::zero(field));
            v[i] = FieldElement::one(field);
            vectors[img ? img->coeff : FieldElement::zero(field)].push_back(std::move(v));
        }
    } else {
        linalg::Matrix m(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const Vec col = to_vector(r.image(basis[j]), index, field);
            for (std::size_t i = 0; i < dim; ++i) {
                m(i, j) = col[i];
            }
        }
        bool complete = true;
        const auto eigen = linalg::roots(linalg::characteristic_polynomial(m), &complete);
        std::size_t total = 0;
        for (const auto& l : eigen) {
            auto ker = linalg::kernel(m.shifted(l).power(static_cast<unsigned>(dim)));
            total += ker.size();
            vectors[l] = std::move(ker);
        }
        if (!complete || total != dim) {
            throw Error(ErrorKind::NonSplitSpectrum,
                "generalized eigenspaces span " + std::to_string(total) + " of " + std::to_string(dim)
                    + " dimensions over " + field.to_string());
        }
    }

    std::vector<Vec> all;
    for (const auto& [l, vs] : vectors) {
        out.spectrum.push_back(l);
        auto& space = out.spaces[l];
        for (const auto& v : vs) {
            space.push_back(to_polynomial(v, basis, algebra));
            all.push_back(v);
        }
    }
    {
        linalg::Matrix span(field, dim, all.size());
        for (std::size_t j = 0; j < all.size(); ++j) {
            for (std::size_t i = 0; i < dim; ++i) {
                span(i, j) = all[j][i];
            }
        }
        out.direct_sum = all.size() == dim && linalg::rank(span) == dim;
    }

    const auto kind = weight.is_one() ? PartialProductKind::Circ : PartialProductKind::Star;
    for (std::size_t a = 0; a < out.spectrum.size(); ++a) {
        for (std::size_t b = a; b < out.spectrum.size(); ++b) {
            const FieldElement& l = out.spectrum[a];
            const FieldElement& m = out.spectrum[b];
            if (l.is_zero() || m.is_zero()) {
                continue;
            }
            ProductReport rep{l, m, partial_product(kind, l, m), false, ProductStatus::Zero, std::nullopt};
            const std::vector<Vec>* target = nullptr;
            if (rep.partial) {
                auto it = vectors.find(*rep.partial);
                if (it == vectors.end()) {
                    rep.outside_spectrum = true;
                } else {
                    target = &it->second;
                    rep.status = ProductStatus::ContainedIn;
                }
            }
            for (const auto& u : out.spaces.at(l)) {
                for (const auto& v : out.spaces.at(m)) {
                    const Polynomial uv = poly_mul(u, v);
                    const bool ok = target ? linalg::in_span(*target, to_vector(uv, index, field), field) : uv.is_zero();
                    if (!ok && !rep.witness) {
                        rep.status = ProductStatus::Violation;
                        rep.witness = std::array<Polynomial, 3>{u, v, uv};
                    }
                }
            }
            out.products.push_back(std::move(rep));
        }
    }
    return out;
}

MonomialOperatorTable quotient_rb_from_family(QuotientSource source, int truncation, std::uint32_t p)
{
    const FieldSpec field = FieldSpec::prime_field(p);
    const AlgebraSpec algebra{field, 1, false, truncation};
    algebra.validate();
    if (source == QuotientSource::WeightZeroReciprocal) {
        return construct_weight_zero({1, {{1, FieldElement::one(field)}}}, algebra, truncation);
    }
    try {
        return construct_weight_one_univariate(FieldElement::one(field), algebra, truncation);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DenominatorVanishes) {
            throw;
        }
        const int n = e.witness().empty() ? 0 : e.witness().front();
        throw Error(ErrorKind::CharacteristicObstruction,
            "2^" + std::to_string(n) + " - 1 vanishes mod " + std::to_string(p), e.witness());
    }
}

MonomialOperatorTable reduce_mod_p(const MonomialOperatorTable& r, std::uint32_t p, int truncation)
{
    if (!r.algebra().field.is_rational()) {
        throw Error(ErrorKind::InvalidParams, "reduction mod p starts from the rationals");
    }
    const FieldSpec field = FieldSpec::prime_field(p);
    AlgebraSpec algebra = r.algebra();
    algebra.field = field;
    algebra.truncation = truncation;
    algebra.validate();
    auto reduce = [&](const FieldElement& c, const Monomial& where) {
        try {
            return FieldElement::from_rational(field, c.rational());
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NonInvertibleModP) {
                throw;
            }
            throw Error(ErrorKind::CharacteristicObstruction,
                "coefficient " + c.to_string() + " at " + where.to_string() + " has a denominator divisible by "
                    + std::to_string(p),
                where.exponents());
        }
    };
    MonomialOperatorTable out(algebra, reduce(r.weight(), Monomial::one(algebra.nvars)),
        std::min(r.degree_bound(), truncation));
    for (const auto& [src, img] : r.entries()) {
        if (src.degree() > out.degree_bound()) {
            continue;
        }
        out.set(src, reduce(img.coeff, src), img.target);
    }
    return out;
}

} // namespace rbops
