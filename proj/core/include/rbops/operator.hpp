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

#ifndef RBOPS_OPERATOR_HPP
#define RBOPS_OPERATOR_HPP

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "rbops/field.hpp"
#include "rbops/polynomial.hpp"

namespace rbops {

struct MonomialImage {
    FieldElement coeff;
    Monomial target;

    friend bool operator==(const MonomialImage&, const MonomialImage&) = default;
};

/// A linear operator given on the basis monomials of degree <= D by
/// u -> coeff * target. Absent entries are zero images. Applying the table to
/// a monomial above D is an error, never an implicit zero.
class MonomialOperatorTable {
public:
    using Entries = std::map<Monomial, MonomialImage>;

    /// The zero operator.
    MonomialOperatorTable(AlgebraSpec algebra, FieldElement weight, int degree_bound);

    static MonomialOperatorTable identity(const AlgebraSpec& algebra, const FieldElement& weight, int degree_bound);
    /// u -> c*u for every basis monomial.
    static MonomialOperatorTable scalar(const AlgebraSpec& algebra, const FieldElement& weight, int degree_bound,
        const FieldElement& c);

    const AlgebraSpec& algebra() const noexcept { return algebra_; }
    const FieldElement& weight() const noexcept { return weight_; }
    int degree_bound() const noexcept { return degree_bound_; }
    const Entries& entries() const noexcept { return entries_; }
    /// Basis monomials of the domain in canonical order.
    std::vector<Monomial> domain() const { return algebra_.basis(degree_bound_); }

    /// Sets R(src) = coeff*target. A zero coefficient or a target that
    /// vanishes in the algebra (past the truncation) clears the entry.
    void set(const Monomial& src, const FieldElement& coeff, const Monomial& target);
    void clear(const Monomial& src);
    void set_weight(FieldElement weight);

    /// Throws DegreeBoundExceeded above D.
    std::optional<MonomialImage> image(const Monomial& src) const;
    Polynomial image_polynomial(const Monomial& src) const;
    Polynomial apply(const Polynomial& f) const;

    bool is_diagonal() const;
    bool is_zero() const noexcept { return entries_.empty(); }

    friend bool operator==(const MonomialOperatorTable&, const MonomialOperatorTable&) = default;

private:
    void require_source(const Monomial& src) const;

    AlgebraSpec algebra_;
    FieldElement weight_;
    int degree_bound_;
    Entries entries_;
};

/// A linear operator given column by column as arbitrary polynomials on the
/// basis of degree <= D. Used where monomiality is lost (shift conjugates,
/// J_a with a != 0, Aguiar operators).
class DenseOperator {
public:
    DenseOperator(AlgebraSpec algebra, FieldElement weight, int degree_bound);

    static DenseOperator from_table(const MonomialOperatorTable& table);

    const AlgebraSpec& algebra() const noexcept { return algebra_; }
    const FieldElement& weight() const noexcept { return weight_; }
    int degree_bound() const noexcept { return degree_bound_; }
    const std::map<Monomial, Polynomial>& images() const noexcept { return images_; }

    void set(const Monomial& src, Polynomial image);
    void set_weight(FieldElement weight) { weight_ = std::move(weight); }

    Polynomial image(const Monomial& src) const;
    Polynomial apply(const Polynomial& f) const;

    /// The same operator as a table, when every image is a single term.
    std::optional<MonomialOperatorTable> to_monomial_table() const;

    friend bool operator==(const DenseOperator&, const DenseOperator&) = default;

private:
    AlgebraSpec algebra_;
    FieldElement weight_;
    int degree_bound_;
    std::map<Monomial, Polynomial> images_;
};

/// Either representation behind one interface.
class Operator {
public:
    Operator(MonomialOperatorTable table) : rep_(std::move(table)) {}
    Operator(DenseOperator dense) : rep_(std::move(dense)) {}

    const AlgebraSpec& algebra() const noexcept;
    const FieldElement& weight() const noexcept;
    int degree_bound() const noexcept;

    Polynomial image(const Monomial& src) const;
    Polynomial apply(const Polynomial& f) const;

    bool is_table() const noexcept { return std::holds_alternative<MonomialOperatorTable>(rep_); }
    const MonomialOperatorTable* as_table() const noexcept { return std::get_if<MonomialOperatorTable>(&rep_); }
    const DenseOperator* as_dense() const noexcept { return std::get_if<DenseOperator>(&rep_); }
    DenseOperator to_dense() const;

    /// Entrywise equality of images on the basis of degree <= degree.
    bool agrees_with(const Operator& other, int degree) const;

private:
    std::variant<MonomialOperatorTable, DenseOperator> rep_;
};

enum class AutomorphismKind { Scaling, ShiftUnivariateUnital };

/// x_i -> c_i x_i, or x -> x - 1 on the unital univariate algebra.
struct AutomorphismSpec {
    AutomorphismKind kind = AutomorphismKind::Scaling;
    std::vector<FieldElement> scale;

    static AutomorphismSpec scaling(std::vector<FieldElement> c) { return {AutomorphismKind::Scaling, std::move(c)}; }
    static AutomorphismSpec shift() { return {AutomorphismKind::ShiftUnivariateUnital, {}}; }

    /// Throws InvalidAutomorphism when the map is not an automorphism of `algebra`.
    void validate(const AlgebraSpec& algebra) const;
    /// Scaling only.
    AutomorphismSpec inverse() const;
};

/// psi(f), and its inverse, for a validated automorphism.
Polynomial apply_automorphism(const AutomorphismSpec& psi, const Polynomial& f);
Polynomial apply_inverse_automorphism(const AutomorphismSpec& psi, const Polynomial& f);

/// R o S. If S sends some source of degree <= D outside R's domain, the
/// result's bound shrinks to the largest degree where the composite is
/// defined; DegreeBoundExceeded if no degree survives.
MonomialOperatorTable op_compose(const MonomialOperatorTable& r, const MonomialOperatorTable& s);

/// R o l_{c*m}, i.e. u -> R(c*m*u). The bound shrinks by deg(m) unless the
/// algebra is truncated at R's bound.
MonomialOperatorTable op_left_mul(const MonomialOperatorTable& r, const Monomial& m, const FieldElement& c);

/// lambda^{-1} R with weight 1. Throws ZeroWeight.
MonomialOperatorTable op_rescale_weight(const MonomialOperatorTable& r);

/// psi^{-1} R psi. Scaling of a table stays a table; a shift always yields a
/// DenseOperator.
Operator op_conjugate(const Operator& r, const AutomorphismSpec& psi);

} // namespace rbops

#endif // RBOPS_OPERATOR_HPP
