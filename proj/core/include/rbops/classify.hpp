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


#ifndef RBOPS_CLASSIFY_HPP
#define RBOPS_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbops/field.hpp"
#include "rbops/operator.hpp"
#include "rbops/polynomial.hpp"
#include "rbops/rota_baxter.hpp"

namespace rbops {

enum class FamilyKind {
    TrivialZero,
    TrivialMinusLambda,
    WeightZeroFamily,
    WeightOneFamily,
    MultivariateFamily,
    SplittingConjugate,
    Unmatched,
};

std::string_view to_string(FamilyKind kind);

struct FamilyMatch {
    FamilyKind kind = FamilyKind::Unmatched;
    std::optional<WeightZeroFamilyParams> weight_zero;
    /// Weight-one parameter, or the scaling constant of a conjugation chain.
    std::optional<FieldElement> alpha;
    std::optional<MultivariateKind> multivariate_kind;
    std::vector<FieldElement> alphas;
    std::string note;
};

/// Identifies the family a table belongs to and confirms it by rebuilding the
/// table with the family constructor (or the conjugation chain) entrywise.
FamilyMatch match_family(const MonomialOperatorTable& table);

struct ClassifyOptions {
    /// Values tried for coefficients the constraints leave free; empty means
    /// {1, 2, -2, 1/2, 3/5, -1}.
    std::vector<FieldElement> grid;
    std::size_t shape_budget = 1'000'000;
    /// Only shapes with t(u) in {absent, u}.
    bool diagonal_only = false;
    /// No absent images.
    bool injective_only = false;
};

struct ClassifiedSolution {
    MonomialOperatorTable table;
    FamilyMatch match;
    /// Some coefficient takes part in no constraint, or some constraint was
    /// cut by the truncation (see cut_pair).
    bool under_constrained = false;
    /// Sources whose coefficient was taken from the grid, and those set to 1
    /// for lack of any constraint.
    std::vector<Monomial> grid_sources;
    std::vector<Monomial> unconstrained_sources;
    /// A pair (u, v) with deg u + deg v <= D whose constraint on the
    /// untruncated algebra reaches past degree D.
    std::optional<std::pair<Monomial, Monomial>> cut_pair;
};

struct SearchStats {
    std::size_t shapes_enumerated = 0;
    std::size_t shapes_pruned = 0;
    std::size_t complete_shapes = 0;
    std::size_t systems_solved = 0;
    std::size_t rejected_by_recheck = 0;
};

struct ClassificationReport {
    AlgebraSpec algebra;
    FieldElement weight;
    int degree = 0;
    std::vector<ClassifiedSolution> solutions;
    SearchStats stats;
};

/// All monomial RB operators of weight `lambda` on the quotient of `algebra`
/// by the monomials of total degree > D, with images inside degree <= D.
/// Multivariate algebras require diagonal_only. Throws SearchBudgetExceeded
/// past the shape budget and InvalidParams for D > 10 or char <= D.
ClassificationReport enumerate_monomial_rb(const AlgebraSpec& algebra, const FieldElement& lambda, int degree,
    const ClassifyOptions& options = {});

} // namespace rbops

#endif // RBOPS_CLASSIFY_HPP
