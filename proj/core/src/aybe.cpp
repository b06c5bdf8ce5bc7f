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

#include "rbops/aybe.hpp"

#include <algorithm>
#include <sstream>

#include "rbops/error.hpp"

namespace rbops {

TensorElement::TensorElement(AlgebraSpec algebra, int arity)
    : algebra_(std::move(algebra))
    , arity_(arity)
{
    algebra_.validate();
    if (arity_ != 2 && arity_ != 3) {
        throw Error(ErrorKind::InvalidParams, "tensor arity must be 2 or 3");
    }
}

FieldElement TensorElement::coefficient(const Key& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? FieldElement::zero(algebra_.field) : it->second;
}

int TensorElement::max_component_degree() const noexcept
{
    int d = -1;
    for (const auto& [key, c] : terms_) {
        for (const auto& m : key) {
            d = std::max(d, m.degree());
        }
    }
    return d;
}

void TensorElement::add_term(const Key& factors, const FieldElement& coeff)
{
    if (factors.size() != static_cast<std::size_t>(arity_)) {
        throw Error(ErrorKind::InvalidParams, "tensor factor count does not match the arity");
    }
    for (const auto& m : factors) {
        if (m.nvars() != algebra_.nvars) {
            throw Error(ErrorKind::InvalidMonomial, "tensor factor has the wrong variable count");
        }
        if (!algebra_.contains(m)) {
            if (m.is_constant()) {
                throw Error(ErrorKind::InvalidMonomial, "constant factor in a non-unital algebra");
            }
            return;
        }
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(factors, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

std::string TensorElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << c.coefficient_string() << "*(";
        for (std::size_t i = 0; i < key.size(); ++i) {
            out << (i ? " (x) " : "") << key[i].to_string();
        }
        out << ")";
    }
    return out.str();
}

namespace {

void require_pair_tensor(const TensorElement& r)
{
    if (!r.algebra().unital) {
        throw Error(ErrorKind::NonUnitalAlgebra, "the embeddings r12, r13, r23 need a unit");
    }
    if (r.arity() != 2) {
        throw Error(ErrorKind::InvalidParams, "expected an element of A (x) A");
    }
}

} // namespace

TensorElement aybe_residual(const TensorElement& r, const FieldElement& lambda, int degree)
{
    require_pair_tensor(r);
    if (r.max_component_degree() > degree) {
        throw Error(ErrorKind::DegreeBoundExceeded, "tensor support exceeds degree " + std::to_string(degree));
    }
    const AlgebraSpec& algebra = r.algebra();
    const Monomial one = Monomial::one(algebra.nvars);
    TensorElement out(algebra, 3);
    for (const auto& [k1, c1] : r.terms()) {
        const Monomial& a = k1[0];
        const Monomial& b = k1[1];
        for (const auto& [k2, c2] : r.terms()) {
            const Monomial& a2 = k2[0];
            const Monomial& b2 = k2[1];
            const FieldElement c = c1 * c2;
            out.add_term({a * a2, b2, b}, c);
            out.add_term({a, b * a2, b2}, -c);
            out.add_term({a2, a, b * b2}, c);
        }
        out.add_term({a, one, b}, -(lambda * c1));
    }
    return out;
}

DenseOperator aguiar_operator(const TensorElement& r, int degree, const FieldElement& lambda)
{
    require_pair_tensor(r);
    const AlgebraSpec& algebra = r.algebra();
    DenseOperator op(algebra, -lambda, degree);
    for (const auto& u : algebra.basis(degree)) {
        Polynomial image(algebra);
        for (const auto& [key, c] : r.terms()) {
            image.add_term(key[0] * u * key[1], c);
        }
        op.set(u, std::move(image));
    }
    return op;
}

std::vector<TensorElement> aybe_grid_search(const AlgebraSpec& algebra, int degree, const FieldElement& lambda,
    const AybeSearchOptions& options)
{
    algebra.validate();
    if (!algebra.unital) {
        throw Error(ErrorKind::NonUnitalAlgebra, "the embeddings r12, r13, r23 need a unit");
    }
    const FieldSpec field = algebra.field;
    std::vector<FieldElement> grid = options.grid;
    if (grid.empty()) {
        grid = {FieldElement::zero(field), FieldElement::one(field), -FieldElement::one(field), lambda, -lambda};
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const auto basis = algebra.basis(degree);
    std::vector<std::pair<Monomial, Monomial>> cells;
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            cells.emplace_back(a, b);
        }
    }
    if (cells.size() > 16) {
        throw Error(ErrorKind::SearchBudgetExceeded, std::to_string(cells.size()) + " support cells, at most 16");
    }
    double total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        total *= static_cast<double>(grid.size());
    }
    if (total > static_cast<double>(options.budget)) {
        throw Error(ErrorKind::SearchBudgetExceeded, "grid search exceeds the candidate budget");
    }

    // The residual is quadratic in the cell coefficients; precompute where
    // every ordered pair of cells lands.
    std::map<TensorElement::Key, std::size_t> index;
    auto slot = [&](TensorElement::Key key) -> std::ptrdiff_t {
        for (const auto& m : key) {
            if (!algebra.contains(m)) {
                return -1;
            }
        }
        auto [it, inserted] = index.emplace(std::move(key), index.size());
        return static_cast<std::ptrdiff_t>(it->second);
    };
    struct Contribution {
        std::size_t c;
        std::size_t d;
        std::ptrdiff_t slot;
        int sign;
    };
    std::vector<Contribution> quadratic;
    std::vector<std::pair<std::size_t, std::ptrdiff_t>> linear;
    const Monomial one = Monomial::one(algebra.nvars);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& [a, b] = cells[c];
        for (std::size_t d = 0; d < cells.size(); ++d) {
            const auto& [a2, b2] = cells[d];
            quadratic.push_back({c, d, slot({a * a2, b2, b}), 1});
            quadratic.push_back({c, d, slot({a, b * a2, b2}), -1});
            quadratic.push_back({c, d, slot({a2, a, b * b2}), 1});
        }
        linear.emplace_back(c, slot({a, one, b}));
    }
    std::erase_if(quadratic, [](const Contribution& q) { return q.slot < 0; });

    std::vector<TensorElement> solutions;
    std::vector<std::size_t> choice(cells.size(), 0);
    std::vector<FieldElement> acc(index.size(), FieldElement::zero(field));
    while (true) {
        std::fill(acc.begin(), acc.end(), FieldElement::zero(field));
        for (const auto& q : quadratic) {
            const FieldElement& x = grid[choice[q.c]];
            const FieldElement& y = grid[choice[q.d]];
            if (x.is_zero() || y.is_zero()) {
                continue;
            }
            if (q.sign > 0) {
                acc[static_cast<std::size_t>(q.slot)] += x * y;
            } else {
                acc[static_cast<std::size_t>(q.slot)] -= x * y;
            }
        }
        for (const auto& [c, s] : linear) {
            if (s >= 0 && !grid[choice[c]].is_zero()) {
                acc[static_cast<std::size_t>(s)] -= lambda * grid[choice[c]];
            }
        }
        if (std::all_of(acc.begin(), acc.end(), [](const FieldElement& e) { return e.is_zero(); })) {
            TensorElement r(algebra, 2);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                r.add_term({cells[c].first, cells[c].second}, grid[choice[c]]);
            }
            solutions.push_back(std::move(r));
        }
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == grid.size()) {
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) {
            break;
        }
    }
    std::sort(solutions.begin(), solutions.end(),
        [](const TensorElement& x, const TensorElement& y) { return x.terms() < y.terms(); });
    return solutions;
}

} // namespace rbops
