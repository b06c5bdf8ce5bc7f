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


#ifndef RBOPS_GRADING_HPP
#define RBOPS_GRADING_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbops/field.hpp"
#include "rbops/operator.hpp"
#include "rbops/polynomial.hpp"

namespace rbops {

/// Circ: l m / (l + m + 1), the weight-one law. Star: l m / (l + m), weight zero.
enum class PartialProductKind { Circ, Star };

/// nullopt when the denominator vanishes; ZeroArgument for a zero argument.
std::optional<FieldElement> partial_product(PartialProductKind kind, const FieldElement& l, const FieldElement& m);

struct IsoCheckResult {
    bool passed = true;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::string counterexample;
};

/// phi(x) = 1 + 1/x turns Circ into multiplication, phi(x) = 1/x turns Star
/// into addition. Checks every ordered pair and triple of the sample
/// (positive rationals), including associativity where defined.
IsoCheckResult semigroup_iso_check(PartialProductKind kind, const std::vector<FieldElement>& sample);
IsoCheckResult check_iso_pairs(PartialProductKind kind, const std::vector<std::pair<FieldElement, FieldElement>>& pairs);
IsoCheckResult check_associativity(PartialProductKind kind, const std::vector<std::array<FieldElement, 3>>& triples);

enum class ProductStatus { Zero, ContainedIn, Violation };

struct ProductReport {
    FieldElement l;
    FieldElement m;
    /// l o m or l * m when defined.
    std::optional<FieldElement> partial;
    /// The partial product is defined but not an eigenvalue.
    bool outside_spectrum = false;
    ProductStatus status = ProductStatus::Zero;
    /// For a violation: u, v and their product.
    std::optional<std::array<Polynomial, 3>> witness;
};

struct GradingDecomposition {
    AlgebraSpec algebra;
    FieldElement weight;
    /// Eigenvalues in canonical order.
    std::vector<FieldElement> spectrum;
    std::map<FieldElement, std::vector<Polynomial>> spaces;
    bool direct_sum = false;
    std::vector<ProductReport> products;

    std::size_t violations() const;
    const ProductReport* find(const FieldElement& l, const FieldElement& m) const;
};

/// Generalized eigenspaces of R on a truncated algebra and the product
/// containments A_l A_m within A_{l o m} (weight 1) or A_{l * m} (weight 0),
/// or zero where the law is undefined or leaves the spectrum. Throws
/// NonSplitSpectrum when the eigenvalues do not all lie in the field.
GradingDecomposition grading_decompose(const Operator& r, const FieldElement& weight);

enum class QuotientSource { WeightOneAlphaOne, WeightZeroReciprocal };

/// The alpha = 1 weight-one operator or x^n -> x^n / n on k_0[x]/(x^{N+1})
/// over GF(p). Throws CharacteristicObstruction naming the bad degree.
MonomialOperatorTable quotient_rb_from_family(QuotientSource source, int truncation, std::uint32_t p);

/// Coefficients reduced into GF(p), truncated at N.
MonomialOperatorTable reduce_mod_p(const MonomialOperatorTable& r, std::uint32_t p, int truncation);

} // namespace rbops

#endif // RBOPS_GRADING_HPP
