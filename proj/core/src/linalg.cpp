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

#include "rbops/linalg.hpp"

#include <algorithm>
#include <random>

#include "rbops/error.hpp"

namespace rbops::linalg {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field)
    , rows_(rows)
    , cols_(cols)
    , data_(rows * cols, FieldElement::zero(field))
{
}

Matrix Matrix::identity(FieldSpec field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = FieldElement::one(field);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_) {
        throw Error(ErrorKind::InvalidParams, "matrix shapes do not match");
    }
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (!rhs(k, j).is_zero()) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
    }
    return out;
}

std::vector<FieldElement> Matrix::operator*(const std::vector<FieldElement>& v) const
{
    if (v.size() != cols_) {
        throw Error(ErrorKind::InvalidParams, "vector length does not match");
    }
    std::vector<FieldElement> out(rows_, FieldElement::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) {
                out[i] += (*this)(i, j) * v[j];
            }
        }
    }
    return out;
}

Matrix Matrix::shifted(const FieldElement& c) const
{
    Matrix out = *this;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        out(i, i) -= c;
    }
    return out;
}

Matrix Matrix::power(unsigned exponent) const
{
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

bool Matrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

bool Matrix::is_diagonal() const noexcept
{
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> row_reduce(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(pivot, j), m(row, j));
            }
        }
        const FieldElement inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) {
            m(row, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) {
                continue;
            }
            const FieldElement factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) {
                    m(i, j) -= factor * m(row, j);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m)
{
    return row_reduce(m).size();
}

std::vector<std::vector<FieldElement>> kernel(Matrix m)
{
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<FieldElement> v(m.cols(), FieldElement::zero(m.field()));
        v[free] = FieldElement::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<std::vector<FieldElement>>& basis, const std::vector<FieldElement>& v, FieldSpec field)
{
    Matrix a(field, v.size(), basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            a(i, j) = basis[j][i];
        }
    }
    Matrix without = a;
    for (std::size_t i = 0; i < v.size(); ++i) {
        a(i, basis.size()) = v[i];
    }
    return rank(a) == rank(without);
}

namespace {

void trim(UPoly& f)
{
    while (!f.empty() && f.back().is_zero()) {
        f.pop_back();
    }
}

UPoly mul(const UPoly& a, const UPoly& b, FieldSpec field)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    UPoly out(a.size() + b.size() - 1, FieldElement::zero(field));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

UPoly sub(UPoly a, const UPoly& b, FieldSpec field)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), FieldElement::zero(field));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

UPoly mod(UPoly a, const UPoly& m)
{
    const FieldElement lead_inv = m.back().inverse();
    while (a.size() >= m.size() && !a.empty()) {
        const FieldElement q = a.back() * lead_inv;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] -= q * m[i];
        }
        trim(a);
    }
    return a;
}

UPoly divide_exact(UPoly a, const UPoly& m, FieldSpec field)
{
    const FieldElement lead_inv = m.back().inverse();
    UPoly q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, FieldElement::zero(field));
    while (a.size() >= m.size() && !a.empty()) {
        const FieldElement c = a.back() * lead_inv;
        const std::size_t shift = a.size() - m.size();
        q[shift] = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] -= c * m[i];
        }
        trim(a);
    }
    trim(q);
    return q;
}

UPoly monic(UPoly f)
{
    if (f.empty()) {
        return f;
    }
    const FieldElement inv = f.back().inverse();
    for (auto& c : f) {
        c *= inv;
    }
    return f;
}

UPoly gcd(UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// base^e mod m over GF(p).
UPoly powmod(UPoly base, std::uint64_t e, const UPoly& m, FieldSpec field)
{
    UPoly result{FieldElement::one(field)};
    base = mod(base, m);
    while (e > 0) {
        if (e & 1U) {
            result = mod(mul(result, base, field), m);
        }
        e >>= 1U;
        if (e > 0) {
            base = mod(mul(base, base, field), m);
        }
    }
    return result;
}

void split_linear(const UPoly& g, FieldSpec field, std::mt19937_64& rng, std::vector<FieldElement>& out)
{
    if (g.size() <= 1) {
        return;
    }
    if (g.size() == 2) {
        out.push_back(-g[0] / g[1]);
        return;
    }
    const std::uint32_t p = field.modulus();
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    while (true) {
        UPoly shifted{FieldElement(field, static_cast<long>(dist(rng))), FieldElement::one(field)};
        UPoly h = powmod(shifted, (std::uint64_t{p} - 1) / 2, g, field);
        h = sub(h, UPoly{FieldElement::one(field)}, field);
        UPoly d = gcd(g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            split_linear(d, field, rng, out);
            split_linear(monic(divide_exact(g, d, field)), field, rng, out);
            return;
        }
    }
}

std::vector<mpz_class> divisors(const mpz_class& n, bool* ok)
{
    mpz_class v = abs(n);
    std::vector<std::pair<mpz_class, int>> factors;
    if (v > mpz_class("1000000000000")) {
        *ok = false;
        return {};
    }
    for (mpz_class d = 2; d * d <= v; ++d) {
        int k = 0;
        while (v % d == 0) {
            v /= d;
            ++k;
        }
        if (k > 0) {
            factors.emplace_back(d, k);
        }
    }
    if (v > 1) {
        factors.emplace_back(v, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [prime, k] : factors) {
        const std::size_t n_before = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= k; ++i) {
            pw *= prime;
            for (std::size_t j = 0; j < n_before; ++j) {
                divs.push_back(divs[j] * pw);
            }
        }
    }
    return divs;
}

std::vector<FieldElement> rational_roots(UPoly f, bool* complete)
{
    const FieldSpec field = FieldSpec::rationals();
    std::vector<FieldElement> out;
    std::size_t low = 0;
    while (low < f.size() && f[low].is_zero()) {
        ++low;
    }
    if (low > 0) {
        out.push_back(FieldElement::zero(field));
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (f.size() <= 1) {
        return out;
    }
    mpz_class lcm = 1;
    for (const auto& c : f) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    for (const auto& c : f) {
        mpq_class scaled = c.rational() * lcm;
        ints.push_back(scaled.get_num());
    }
    bool ok = true;
    auto nums = divisors(ints.front(), &ok);
    auto dens = divisors(ints.back(), &ok);
    if (!ok) {
        *complete = false;
        return out;
    }
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            for (int sign : {1, -1}) {
                FieldElement cand = FieldElement::make(field, a * sign, b);
                if (evaluate(f, cand).is_zero()
                    && std::find(out.begin(), out.end(), cand) == out.end()) {
                    out.push_back(cand);
                }
            }
        }
    }
    return out;
}

} // namespace

UPoly characteristic_polynomial(const Matrix& m)
{
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::InvalidParams, "characteristic polynomial of a non-square matrix");
    }
    const FieldSpec field = m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    for (std::size_t col = 1; col + 1 < n; ++col) {
        std::size_t i = col;
        while (i < n && h(i, col - 1).is_zero()) {
            ++i;
        }
        if (i == n) {
            continue;
        }
        if (i != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(h(i, j), h(col, j));
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(h(j, i), h(j, col));
            }
        }
        const FieldElement t = h(col, col - 1);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (h(r, col - 1).is_zero()) {
                continue;
            }
            const FieldElement u = h(r, col - 1) / t;
            for (std::size_t j = 0; j < n; ++j) {
                h(r, j) -= u * h(col, j);
            }
            for (std::size_t j = 0; j < n; ++j) {
                h(j, col) += u * h(j, r);
            }
        }
    }
    std::vector<UPoly> p;
    p.push_back(UPoly{FieldElement::one(field)});
    for (std::size_t k = 1; k <= n; ++k) {
        UPoly next = mul(UPoly{-h(k - 1, k - 1), FieldElement::one(field)}, p[k - 1], field);
        FieldElement t = FieldElement::one(field);
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            if (t.is_zero()) {
                break;
            }
            UPoly term = p[k - i - 1];
            const FieldElement c = t * h(k - i - 1, k - 1);
            for (auto& e : term) {
                e *= c;
            }
            next = sub(next, term, field);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

FieldElement evaluate(const UPoly& f, const FieldElement& x)
{
    FieldElement acc = FieldElement::zero(x.spec());
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::vector<FieldElement> roots(const UPoly& f_in, bool* complete)
{
    bool dummy = true;
    bool* flag = complete ? complete : &dummy;
    *flag = true;
    UPoly f = f_in;
    trim(f);
    if (f.size() <= 1) {
        return {};
    }
    const FieldSpec field = f.front().spec();
    std::vector<FieldElement> out;
    if (field.is_rational()) {
        out = rational_roots(f, flag);
    } else if (field.modulus() <= (1U << 20)) {
        for (std::uint32_t r = 0; r < field.modulus(); ++r) {
            FieldElement x(field, static_cast<long>(r));
            if (evaluate(f, x).is_zero()) {
                out.push_back(x);
            }
        }
    } else {
        UPoly fm = monic(f);
        UPoly xp = powmod(UPoly{FieldElement::zero(field), FieldElement::one(field)}, field.modulus(), fm, field);
        UPoly g = gcd(fm, sub(xp, UPoly{FieldElement::zero(field), FieldElement::one(field)}, field));
        std::mt19937_64 rng(0x5eed);
        split_linear(g, field, rng, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rbops::linalg
