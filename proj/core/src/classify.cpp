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

#include "rbops/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

#include "rbops/error.hpp"
#include "rbops/linalg.hpp"

namespace rbops {

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::TrivialZero:
        return "TrivialZero";
    case FamilyKind::TrivialMinusLambda:
        return "TrivialMinusLambda";
    case FamilyKind::WeightZeroFamily:
        return "WeightZeroFamily";
    case FamilyKind::WeightOneFamily:
        return "WeightOneFamily";
    case FamilyKind::MultivariateFamily:
        return "MultivariateFamily";
    case FamilyKind::SplittingConjugate:
        return "SplittingConjugate";
    case FamilyKind::Unmatched:
        return "Unmatched";
    }
    return "Unmatched";
}

namespace {

MonomialOperatorTable scaled_table(const MonomialOperatorTable& r, const FieldElement& c)
{
    MonomialOperatorTable out(r.algebra(), r.weight() * c, r.degree_bound());
    for (const auto& [src, img] : r.entries()) {
        out.set(src, img.coeff * c, img.target);
    }
    return out;
}

template <typename Build>
bool reproduces(const MonomialOperatorTable& table, Build&& build)
{
    try {
        return build() == table;
    } catch (const Error&) {
        return false;
    }
}

std::optional<WeightZeroFamilyParams> infer_weight_zero(const MonomialOperatorTable& table)
{
    const AlgebraSpec& algebra = table.algebra();
    int g = 0;
    for (const auto& [src, img] : table.entries()) {
        if (img.target.degree() == 0) {
            return std::nullopt;
        }
        g = std::gcd(g, img.target.degree());
    }
    for (int m = g; m >= 1; --m) {
        if (g % m != 0) {
            continue;
        }
        WeightZeroFamilyParams params{m, std::vector<WeightZeroResidue>(static_cast<std::size_t>(m),
                                             WeightZeroResidue{0, FieldElement::zero(algebra.field)})};
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        bool ok = true;
        for (const auto& [src, img] : table.entries()) {
            const int n = src.degree();
            const int b = algebra.unital ? n % m : (n - 1) % m + 1;
            const auto slot = static_cast<std::size_t>(algebra.unital ? b : b - 1);
            if (seen[slot]) {
                continue;
            }
            seen[slot] = true;
            const int t = img.target.degree();
            const int p = t / m - (n - b) / m;
            if (t % m != 0 || p < 1) {
                ok = false;
                break;
            }
            params.residues[slot] = {p, img.coeff * FieldElement(algebra.field, t)};
        }
        if (ok && reproduces(table, [&] { return construct_weight_zero(params, algebra, table.degree_bound()); })) {
            return params;
        }
    }
    return std::nullopt;
}

/// Coefficient c with R(x_k) = c x_k for every variable, if that holds.
std::optional<std::vector<FieldElement>> linear_coefficients(const MonomialOperatorTable& table)
{
    const AlgebraSpec& algebra = table.algebra();
    if (table.degree_bound() < 1) {
        return std::nullopt;
    }
    std::vector<FieldElement> out;
    for (int k = 0; k < algebra.nvars; ++k) {
        const Monomial xk = Monomial::variable(algebra.nvars, k);
        const auto img = table.image(xk);
        if (!img || img->target != xk) {
            return std::nullopt;
        }
        out.push_back(img->coeff);
    }
    return out;
}

bool is_splitting(const MonomialOperatorTable& table, std::string* note)
{
    const AlgebraSpec& algebra = table.algebra();
    const FieldElement& lambda = table.weight();
    if (lambda.is_zero()) {
        return false;
    }
    for (const auto& [src, img] : table.entries()) {
        if (img.target != src || img.coeff != -lambda) {
            return false;
        }
    }
    const auto& entries = table.entries();
    SplittingSpec spec{algebra, [&entries](const Monomial& m) { return entries.count(m) != 0 ? 2 : 1; }};
    if (!reproduces(table, [&] { return construct_splitting(spec, lambda, table.degree_bound()); })) {
        return false;
    }
    if (algebra.nvars == 1 && algebra.unital) {
        const bool unit_in_a2 = entries.count(Monomial::one(1)) != 0;
        const bool x_in_a2 = entries.count(Monomial::power(1)) != 0;
        if (unit_in_a2 != x_in_a2) {
            *note = unit_in_a2 ? "splitting: A1 = <x>, A2 = k" : "splitting: A1 = k, A2 = <x>";
            return true;
        }
    }
    *note = "splitting: A2 spanned by the nonzero-image monomials";
    return true;
}

/// R(x^n) = alpha^n * 1 at weight -1, conjugated by x -> x/alpha and then
/// x -> x - 1 into the (<x>, k) splitting operator.
std::optional<FieldElement> match_constant_chain(const MonomialOperatorTable& table)
{
    const AlgebraSpec& algebra = table.algebra();
    const FieldSpec field = algebra.field;
    if (algebra.nvars != 1 || !algebra.unital || table.weight().is_zero() || table.degree_bound() < 1) {
        return std::nullopt;
    }
    const MonomialOperatorTable r = scaled_table(table, -table.weight().inverse());
    const auto rx = r.image(Monomial::power(1));
    if (!rx || !rx->target.is_constant()) {
        return std::nullopt;
    }
    const FieldElement alpha = rx->coeff;
    for (const auto& src : algebra.basis(r.degree_bound())) {
        const auto img = r.image(src);
        if (!img || !img->target.is_constant() || img->coeff != alpha.pow(src.degree())) {
            return std::nullopt;
        }
    }
    const AlgebraSpec full{field, 1, true, std::nullopt};
    MonomialOperatorTable lifted(full, r.weight(), r.degree_bound());
    for (const auto& [src, img] : r.entries()) {
        lifted.set(src, img.coeff, img.target);
    }
    const Operator r1 = op_conjugate(Operator(lifted), AutomorphismSpec::scaling({alpha.inverse()}));
    const Operator r2 = op_conjugate(r1, AutomorphismSpec::shift());
    SplittingSpec spec{full, [](const Monomial& m) { return m.is_constant() ? 2 : 1; }};
    const Operator target(construct_splitting(spec, r.weight(), r.degree_bound()));
    if (!r2.agrees_with(target, r.degree_bound())) {
        return std::nullopt;
    }
    return alpha;
}

} // namespace

FamilyMatch match_family(const MonomialOperatorTable& table)
{
    const AlgebraSpec& algebra = table.algebra();
    const FieldElement& lambda = table.weight();
    const int degree = table.degree_bound();
    FamilyMatch out;
    if (table.is_zero()) {
        out.kind = FamilyKind::TrivialZero;
        return out;
    }
    if (!lambda.is_zero() && table == MonomialOperatorTable::scalar(algebra, lambda, degree, -lambda)) {
        out.kind = FamilyKind::TrivialMinusLambda;
        return out;
    }
    if (lambda.is_zero()) {
        if (algebra.nvars == 1) {
            if (auto params = infer_weight_zero(table)) {
                out.kind = FamilyKind::WeightZeroFamily;
                out.weight_zero = std::move(params);
                return out;
            }
        } else if (auto alphas = linear_coefficients(table)) {
            if (reproduces(table, [&] {
                    return construct_multivariate(MultivariateKind::WeightZero, *alphas, algebra, degree);
                })) {
                out.kind = FamilyKind::MultivariateFamily;
                out.multivariate_kind = MultivariateKind::WeightZero;
                out.alphas = std::move(*alphas);
                return out;
            }
        }
    } else {
        const MonomialOperatorTable normalized = op_rescale_weight(table);
        if (auto alphas = linear_coefficients(normalized); alphas && !algebra.unital) {
            if (algebra.nvars == 1) {
                if (reproduces(normalized,
                        [&] { return construct_weight_one_univariate(alphas->front(), algebra, degree); })) {
                    out.kind = FamilyKind::WeightOneFamily;
                    out.alpha = alphas->front();
                    return out;
                }
            } else if (reproduces(normalized, [&] {
                           return construct_multivariate(MultivariateKind::WeightOne, *alphas, algebra, degree);
                       })) {
                out.kind = FamilyKind::MultivariateFamily;
                out.multivariate_kind = MultivariateKind::WeightOne;
                out.alphas = std::move(*alphas);
                return out;
            }
        }
        std::string note;
        if (is_splitting(table, &note)) {
            out.kind = FamilyKind::SplittingConjugate;
            out.note = std::move(note);
            return out;
        }
        if (auto alpha = match_constant_chain(table)) {
            out.kind = FamilyKind::SplittingConjugate;
            out.alpha = std::move(alpha);
            out.note = "conjugate by x -> x/alpha, then x -> x-1, to the splitting A1 = <x>, A2 = k";
            return out;
        }
    }
    return out;
}

namespace {

constexpr int kAbsent = -1;
constexpr int kLambdaSlot = -1;

/// coeff * a_a * a_b, or coeff * lambda * a_b when a == kLambdaSlot.
struct Term {
    int a;
    int b;
    long coeff;
};

struct Equation {
    std::vector<Term> terms;
    int max_index;
};

std::vector<FieldElement> default_grid(FieldSpec field)
{
    std::vector<FieldElement> grid;
    for (const char* text : {"1", "2", "-2", "1/2", "3/5", "-1"}) {
        try {
            grid.push_back(FieldElement::parse(field, text));
        } catch (const Error&) {
        }
    }
    return grid;
}

/// Nonzero roots of c2 t^2 + c1 t + c0 (not all zero).
std::vector<FieldElement> solve_quadratic(const FieldElement& c2, const FieldElement& c1, const FieldElement& c0)
{
    const FieldSpec field = c0.spec();
    std::vector<FieldElement> out;
    if (c2.is_zero()) {
        if (!c1.is_zero()) {
            out.push_back(-c0 / c1);
        }
    } else if (field.is_rational()) {
        const mpq_class disc = c1.rational() * c1.rational() - 4 * c2.rational() * c0.rational();
        if (disc >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) != 0
            && mpz_perfect_square_p(disc.get_den_mpz_t()) != 0) {
            mpz_class num = sqrt(disc.get_num());
            mpz_class den = sqrt(disc.get_den());
            const FieldElement root = FieldElement::make(field, num, den);
            const FieldElement two(field, 2);
            out.push_back((-c1 + root) / (two * c2));
            out.push_back((-c1 - root) / (two * c2));
        }
    } else {
        out = linalg::roots({c0, c1, c2});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [](const FieldElement& e) { return e.is_zero(); }), out.end());
    return out;
}

class ShapeSearch {
public:
    ShapeSearch(AlgebraSpec quotient, FieldElement lambda, int degree, const ClassifyOptions& options)
        : algebra_(std::move(quotient))
        , lambda_(std::move(lambda))
        , degree_(degree)
        , options_(options)
        , basis_(algebra_.basis(degree))
        , k_(static_cast<int>(basis_.size()))
        , p_(algebra_.field.modulus())
        , shape_(static_cast<std::size_t>(k_), kAbsent)
    {
        grid_ = options.grid.empty() ? default_grid(algebra_.field) : options.grid;
        std::map<Monomial, int> index;
        for (int i = 0; i < k_; ++i) {
            index.emplace(basis_[static_cast<std::size_t>(i)], i);
        }
        prod_.assign(static_cast<std::size_t>(k_ * k_), kAbsent);
        for (int i = 0; i < k_; ++i) {
            for (int j = 0; j < k_; ++j) {
                auto it = index.find(basis_[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(j)]);
                if (it != index.end()) {
                    prod_[static_cast<std::size_t>(i * k_ + j)] = it->second;
                }
            }
        }
    }

    void run() { dfs(0); }

    SearchStats stats;
    std::vector<ClassifiedSolution> solutions;

private:
    int prod(int i, int j) const
    {
        if (i < 0 || j < 0) {
            return kAbsent;
        }
        return prod_[static_cast<std::size_t>(i * k_ + j)];
    }
    int t(int i) const { return i < 0 ? kAbsent : shape_[static_cast<std::size_t>(i)]; }

    bool is_zero_coeff(long c) const { return p_ == 0 ? c == 0 : c % static_cast<long>(p_) == 0; }

    void dfs(int n)
    {
        if (n == k_) {
            ++stats.complete_shapes;
            solve_shape();
            return;
        }
        std::vector<int> choices;
        if (!options_.injective_only) {
            choices.push_back(kAbsent);
        }
        if (options_.diagonal_only) {
            choices.push_back(n);
        } else {
            for (int c = 0; c < k_; ++c) {
                choices.push_back(c);
            }
        }
        for (int c : choices) {
            if (++stats.shapes_enumerated > options_.shape_budget) {
                throw Error(ErrorKind::SearchBudgetExceeded,
                    "more than " + std::to_string(options_.shape_budget) + " shapes");
            }
            shape_[static_cast<std::size_t>(n)] = c;
            const std::size_t mark = equations_.size();
            if (add_ready_pairs(n)) {
                dfs(n + 1);
            } else {
                ++stats.shapes_pruned;
            }
            equations_.resize(mark);
        }
        shape_[static_cast<std::size_t>(n)] = kAbsent;
    }

    /// Adds the grouped constraints of every pair whose indices are all known
    /// once position n is assigned; false if some group is a lone nonzero term.
    bool add_ready_pairs(int n)
    {
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= j; ++i) {
                const int uv = prod(i, j);
                const int a = prod(t(i), j);
                const int b = prod(i, t(j));
                if (std::max({j, uv, a, b}) != n) {
                    continue;
                }
                if (!add_pair(i, j, uv, a, b)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool add_pair(int i, int j, int uv, int a, int b)
    {
        // (output position, key a, key b, coefficient)
        scratch_.clear();
        if (t(i) != kAbsent && t(j) != kAbsent) {
            const int out = prod(t(i), t(j));
            if (out != kAbsent) {
                scratch_.push_back({out, std::min(i, j), std::max(i, j), 1});
            }
        }
        if (a != kAbsent && t(a) != kAbsent) {
            scratch_.push_back({t(a), std::min(i, a), std::max(i, a), -1});
        }
        if (b != kAbsent && t(b) != kAbsent) {
            scratch_.push_back({t(b), std::min(j, b), std::max(j, b), -1});
        }
        if (!lambda_.is_zero() && uv != kAbsent && t(uv) != kAbsent) {
            scratch_.push_back({t(uv), kLambdaSlot, uv, -1});
        }
        std::sort(scratch_.begin(), scratch_.end(),
            [](const auto& x, const auto& y) { return std::tie(x[0], x[1], x[2]) < std::tie(y[0], y[1], y[2]); });
        std::size_t g = 0;
        while (g < scratch_.size()) {
            std::size_t end = g;
            Equation eq{{}, -1};
            while (end < scratch_.size() && scratch_[end][0] == scratch_[g][0]) {
                std::size_t key_end = end;
                long c = 0;
                while (key_end < scratch_.size() && scratch_[key_end][0] == scratch_[end][0]
                    && scratch_[key_end][1] == scratch_[end][1] && scratch_[key_end][2] == scratch_[end][2]) {
                    c += scratch_[key_end][3];
                    ++key_end;
                }
                if (!is_zero_coeff(c)) {
                    eq.terms.push_back({static_cast<int>(scratch_[end][1]), static_cast<int>(scratch_[end][2]), c});
                    eq.max_index = std::max(eq.max_index, static_cast<int>(scratch_[end][2]));
                }
                end = key_end;
            }
            if (eq.terms.size() == 1) {
                return false;
            }
            if (!eq.terms.empty()) {
                equations_.push_back(std::move(eq));
            }
            g = end;
        }
        return true;
    }

    void solve_shape()
    {
        ++stats.systems_solved;
        buckets_.assign(static_cast<std::size_t>(k_), {});
        appears_.assign(static_cast<std::size_t>(k_), false);
        for (std::size_t e = 0; e < equations_.size(); ++e) {
            buckets_[static_cast<std::size_t>(equations_[e].max_index)].push_back(e);
            for (const auto& term : equations_[e].terms) {
                if (term.a >= 0) {
                    appears_[static_cast<std::size_t>(term.a)] = true;
                }
                appears_[static_cast<std::size_t>(term.b)] = true;
            }
        }
        values_.assign(static_cast<std::size_t>(k_), FieldElement::zero(algebra_.field));
        origin_.assign(static_cast<std::size_t>(k_), 0);
        assign(0);
    }

    FieldElement value(int i) const { return values_[static_cast<std::size_t>(i)]; }

    void assign(int n)
    {
        if (n == k_) {
            emit();
            return;
        }
        if (t(n) == kAbsent) {
            assign(n + 1);
            return;
        }
        const FieldSpec field = algebra_.field;
        struct Quad {
            FieldElement c2, c1, c0;
        };
        std::vector<Quad> polys;
        for (std::size_t e : buckets_[static_cast<std::size_t>(n)]) {
            Quad q{FieldElement::zero(field), FieldElement::zero(field), FieldElement::zero(field)};
            for (const auto& term : equations_[e].terms) {
                const FieldElement c(field, term.coeff);
                if (term.a == kLambdaSlot) {
                    (term.b == n ? q.c1 : q.c0) += c * lambda_ * (term.b == n ? FieldElement::one(field) : value(term.b));
                } else if (term.a == n) {
                    q.c2 += c;
                } else if (term.b == n) {
                    q.c1 += c * value(term.a);
                } else {
                    q.c0 += c * value(term.a) * value(term.b);
                }
            }
            if (!q.c0.is_zero() || !q.c1.is_zero() || !q.c2.is_zero()) {
                polys.push_back(std::move(q));
            }
        }
        std::vector<FieldElement> candidates;
        int origin = 0;
        if (polys.empty()) {
            if (appears_[static_cast<std::size_t>(n)]) {
                candidates = grid_;
                origin = 1;
            } else {
                candidates = {FieldElement::one(field)};
                origin = 2;
            }
        } else {
            candidates = solve_quadratic(polys.front().c2, polys.front().c1, polys.front().c0);
        }
        for (const auto& cand : candidates) {
            if (cand.is_zero()) {
                continue;
            }
            const bool ok = std::all_of(polys.begin(), polys.end(),
                [&](const Quad& q) { return (q.c2 * cand * cand + q.c1 * cand + q.c0).is_zero(); });
            if (!ok) {
                continue;
            }
            values_[static_cast<std::size_t>(n)] = cand;
            origin_[static_cast<std::size_t>(n)] = origin;
            assign(n + 1);
        }
        values_[static_cast<std::size_t>(n)] = FieldElement::zero(field);
        origin_[static_cast<std::size_t>(n)] = 0;
    }

    void emit()
    {
        MonomialOperatorTable table(algebra_, lambda_, degree_);
        ClassifiedSolution sol{table, {}, false, {}, {}, std::nullopt};
        for (int i = 0; i < k_; ++i) {
            if (t(i) == kAbsent) {
                continue;
            }
            const Monomial& src = basis_[static_cast<std::size_t>(i)];
            sol.table.set(src, value(i), basis_[static_cast<std::size_t>(t(i))]);
            if (origin_[static_cast<std::size_t>(i)] == 1) {
                sol.grid_sources.push_back(src);
            } else if (origin_[static_cast<std::size_t>(i)] == 2) {
                sol.unconstrained_sources.push_back(src);
                sol.under_constrained = true;
            }
        }
        if (auto cut = truncated_pair()) {
            sol.under_constrained = true;
            sol.cut_pair = std::move(cut);
        }
        solutions.push_back(std::move(sol));
    }

    /// First pair with deg u + deg v <= D whose identity on the untruncated
    /// algebra involves a product of degree > D; the quotient silently drops
    /// that part of the constraint.
    std::optional<std::pair<Monomial, Monomial>> truncated_pair() const
    {
        auto deg = [this](int i) { return basis_[static_cast<std::size_t>(i)].degree(); };
        for (int i = 0; i < k_; ++i) {
            for (int j = i; j < k_; ++j) {
                if (deg(i) + deg(j) > degree_) {
                    continue;
                }
                const bool ri = t(i) != kAbsent;
                const bool rj = t(j) != kAbsent;
                if ((ri && rj && deg(t(i)) + deg(t(j)) > degree_) || (ri && deg(t(i)) + deg(j) > degree_)
                    || (rj && deg(i) + deg(t(j)) > degree_)) {
                    return std::make_pair(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]);
                }
            }
        }
        return std::nullopt;
    }

    AlgebraSpec algebra_;
    FieldElement lambda_;
    int degree_;
    const ClassifyOptions& options_;
    std::vector<Monomial> basis_;
    int k_;
    std::uint32_t p_;
    std::vector<int> shape_;
    std::vector<int> prod_;
    std::vector<FieldElement> grid_;
    std::vector<Equation> equations_;
    std::vector<std::array<long, 4>> scratch_;
    std::vector<std::vector<std::size_t>> buckets_;
    std::vector<bool> appears_;
    std::vector<FieldElement> values_;
    std::vector<int> origin_;
};

using TableKey = std::vector<std::tuple<Monomial, Monomial, FieldElement>>;

TableKey table_key(const MonomialOperatorTable& t)
{
    TableKey key;
    for (const auto& [src, img] : t.entries()) {
        key.emplace_back(src, img.target, img.coeff);
    }
    return key;
}

} // namespace

ClassificationReport enumerate_monomial_rb(const AlgebraSpec& algebra, const FieldElement& lambda, int degree,
    const ClassifyOptions& options)
{
    algebra.validate();
    if (degree < 1 || degree > 10) {
        throw Error(ErrorKind::InvalidParams, "classification bound must lie in 1..10");
    }
    if (algebra.truncation && *algebra.truncation != degree) {
        throw Error(ErrorKind::InvalidParams, "a truncated algebra must be searched at its truncation bound");
    }
    if (algebra.nvars > 1 && !options.diagonal_only) {
        throw Error(ErrorKind::InvalidParams, "multivariate search is restricted to diagonal shapes");
    }
    const FieldSpec field = algebra.field;
    if (!field.is_rational() && field.modulus() <= static_cast<std::uint32_t>(degree)) {
        throw Error(ErrorKind::InvalidParams, "the characteristic must exceed the bound");
    }
    if (lambda.spec() != field) {
        throw Error(ErrorKind::MixedFieldSpecs, "weight lies in a different field");
    }
    AlgebraSpec quotient = algebra;
    quotient.truncation = degree;
    ShapeSearch search(quotient, lambda, degree, options);
    search.run();

    ClassificationReport report{quotient, lambda, degree, {}, search.stats};
    for (auto& sol : search.solutions) {
        if (!rb_check(Operator(sol.table), lambda, degree).passed) {
            ++report.stats.rejected_by_recheck;
            continue;
        }
        sol.match = match_family(sol.table);
        if (sol.under_constrained && sol.match.note.empty()) {
            sol.match.note = "under-constrained at this bound";
        }
        report.solutions.push_back(std::move(sol));
    }
    std::sort(report.solutions.begin(), report.solutions.end(),
        [](const ClassifiedSolution& x, const ClassifiedSolution& y) { return table_key(x.table) < table_key(y.table); });
    return report;
}

} // namespace rbops
