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


#ifndef RBOPS_ROTA_BAXTER_HPP
#define RBOPS_ROTA_BAXTER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbops/field.hpp"
#include "rbops/operator.hpp"
#include "rbops/polynomial.hpp"

namespace rbops {

struct RBViolation {
    Monomial u;
    Monomial v;
    /// R(u)R(v) - R(R(u)v + uR(v) + lambda*uv), never zero.
    Polynomial residual;
};

struct RBCheckResult {
    bool passed = true;
    std::size_t checked_pairs = 0;
    /// Pairs whose residual needs R above its degree bound.
    std::size_t skipped_pairs = 0;
    std::optional<RBViolation> violation;
};

Polynomial rb_residual(const Operator& r, const Monomial& u, const Monomial& v, const FieldElement& lambda);

/// Checks every pair u <= v with deg u + deg v <= D (in a truncated algebra,
/// every pair of basis monomials of degree <= D) in canonical order and stops
/// at the first violation.
RBCheckResult rb_check(const Operator& r, const FieldElement& lambda, int degree);

/// R(x1)...R(xk) - R(sum_i R(x1)..x_i..R(xk)) for a weight-zero operator.
Polynomial rb_multi_residual(const Operator& r, const std::vector<Monomial>& args);
/// (R(w))^k - k R(w (R(w))^{k-1}); nullopt when it vanishes.
std::optional<Polynomial> rb_power_check(const Operator& r, const Monomial& w, int k);

struct WeightZeroResidue {
    int p = 0;
    FieldElement q;
};

/// R(x^{ma+b}) = q_b x^{m(a+p_b)} / (m(a+p_b)). `residues[i]` describes b = i+1
/// on a non-unital algebra and b = i on a unital one.
struct WeightZeroFamilyParams {
    int m = 1;
    std::vector<WeightZeroResidue> residues;
};

MonomialOperatorTable construct_weight_zero(const WeightZeroFamilyParams& params, const AlgebraSpec& algebra,
    int degree);

/// R(x^n) = alpha^n / ((alpha+1)^n - alpha^n) x^n, weight 1.
MonomialOperatorTable construct_weight_one_univariate(const FieldElement& alpha, const AlgebraSpec& algebra,
    int degree);

enum class MultivariateKind { WeightOne, WeightZero };

/// WeightOne: prod a_k^{i_k} / (prod (a_k+1)^{i_k} - prod a_k^{i_k}).
/// WeightZero: 1 / sum i_k/a_k.
MonomialOperatorTable construct_multivariate(MultivariateKind kind, const std::vector<FieldElement>& alphas,
    const AlgebraSpec& algebra, int degree);

/// J_a(x^n) = (x^{n+1} - a^{n+1}) / (n+1) on a unital univariate algebra; a
/// table when a = 0, dense otherwise.
Operator construct_integral(const FieldElement& a, const AlgebraSpec& algebra, int degree);

/// Assigns each basis monomial to part 1 (A1) or part 2 (A2).
struct SplittingSpec {
    AlgebraSpec algebra;
    std::function<int(const Monomial&)> part;
};

/// A1 -> 0, A2 -> -lambda * id. Throws NotASubalgebra with witness
/// [part, u..., v...] when some product leaves its part.
MonomialOperatorTable construct_splitting(const SplittingSpec& spec, const FieldElement& lambda, int degree);

struct KernelImage {
    std::vector<Polynomial> kernel;
    /// Distinct targets, each with the image coefficient of its first source.
    std::vector<std::pair<Monomial, FieldElement>> image;
};

KernelImage op_kernel_image(const MonomialOperatorTable& r, int degree);

enum class UnitConstraintKind { SplittingZero, SplittingMinusLambda, Violation };

struct UnitConstraint {
    UnitConstraintKind kind;
    /// For a violation: 2R^2(1) expressed as R(1)^2 - lambda R(1).
    std::optional<Polynomial> witness;
};

UnitConstraint check_unit_constraint(const MonomialOperatorTable& r, const FieldElement& lambda);

struct KernelObstruction {
    bool passed = true;
    /// "kernel-image" or "collision"; empty on pass.
    std::string reason;
    std::vector<Monomial> witness;
};

/// No monomial in ker R and im R at once; no two sources share a target.
KernelObstruction check_kernel_obstructions(const MonomialOperatorTable& r);

} // namespace rbops

#endif // RBOPS_ROTA_BAXTER_HPP
