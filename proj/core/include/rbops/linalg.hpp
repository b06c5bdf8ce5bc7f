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

#ifndef RBOPS_LINALG_HPP
#define RBOPS_LINALG_HPP

#include <cstddef>
#include <vector>

#include "rbops/field.hpp"

namespace rbops::linalg {

/// Dense row-major matrix over a FieldSpec.
class Matrix {
public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldSpec field, std::size_t n);

    FieldSpec field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& rhs) const;
    std::vector<FieldElement> operator*(const std::vector<FieldElement>& v) const;
    /// this - c*I.
    Matrix shifted(const FieldElement& c) const;
    Matrix power(unsigned exponent) const;

    bool is_zero() const noexcept;
    bool is_diagonal() const noexcept;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<std::vector<FieldElement>> kernel(Matrix m);
/// Whether `v` lies in the column span of `basis` (all vectors of equal length).
bool in_span(const std::vector<std::vector<FieldElement>>& basis, const std::vector<FieldElement>& v, FieldSpec field);

/// Dense univariate polynomial, coefficient of x^k at index k, no trailing zeros.
using UPoly = std::vector<FieldElement>;

/// det(x I - m) via Hessenberg reduction; works over any field.
UPoly characteristic_polynomial(const Matrix& m);
FieldElement evaluate(const UPoly& f, const FieldElement& x);

/// Distinct roots of f in its field. Over GF(p) small moduli are scanned and
/// large ones split with Cantor-Zassenhaus; over Q candidates come from the
/// rational root theorem. `complete` is cleared when roots could not be
/// isolated (huge integer coefficients); the caller decides what that means.
std::vector<FieldElement> roots(const UPoly& f, bool* complete = nullptr);

} // namespace rbops::linalg

#endif // RBOPS_LINALG_HPP
