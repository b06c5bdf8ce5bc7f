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


#ifndef RBOPS_AYBE_HPP
#define RBOPS_AYBE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rbops/field.hpp"
#include "rbops/operator.hpp"
#include "rbops/polynomial.hpp"

namespace rbops {

/// Sparse element of A^{(x)2} or A^{(x)3} for a commutative algebra A.
class TensorElement {
public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, FieldElement>;

    TensorElement(AlgebraSpec algebra, int arity);

    const AlgebraSpec& algebra() const noexcept { return algebra_; }
    int arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    FieldElement coefficient(const Key& key) const;
    /// Highest component degree, -1 for zero.
    int max_component_degree() const noexcept;

    /// Adds coeff * (m1 (x) m2 [(x) m3]); factors vanishing in A drop the term.
    void add_term(const Key& factors, const FieldElement& coeff);

    std::string to_string() const;

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    AlgebraSpec algebra_;
    int arity_;
    Terms terms_;
};

/// r13 r12 - r12 r23 + r23 r13 - lambda r13. Throws NonUnitalAlgebra and,
/// when a component of r exceeds `degree`, DegreeBoundExceeded.
TensorElement aybe_residual(const TensorElement& r, const FieldElement& lambda, int degree);

/// u -> sum c a u b over the terms c (a (x) b) of r, on the basis of degree
/// <= D, with weight -lambda.
DenseOperator aguiar_operator(const TensorElement& r, int degree, const FieldElement& lambda);

struct AybeSearchOptions {
    /// Empty means {0, 1, -1, lambda, -lambda}.
    std::vector<FieldElement> grid;
    std::size_t budget = 10'000'000;
};

/// Every r with coefficients from the grid on the cells (a, b), deg a, deg b
/// <= D, whose residual vanishes. At most 16 cells, otherwise
/// SearchBudgetExceeded, as when grid^cells exceeds the budget.
std::vector<TensorElement> aybe_grid_search(const AlgebraSpec& algebra, int degree, const FieldElement& lambda,
    const AybeSearchOptions& options = {});

} // namespace rbops

#endif // RBOPS_AYBE_HPP
