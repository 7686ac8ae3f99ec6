#pragma once

// Dense matrices over exact rationals and the elimination kernels built on
// them. Dimensions here are partition counts, so dense storage is fine.

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bihom {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    ExactMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ExactMatrix: ragged initializer");
            for (auto v : row)
                data_.emplace_back(v);
        }
    }

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> column(std::size_t c) const
    {
        std::vector<Rational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, const std::vector<Rational>& values)
    {
        if (values.size() != rows_)
            throw std::invalid_argument("ExactMatrix::set_column: size mismatch");
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, c) = values[r];
    }

    std::vector<Rational> diagonal() const
    {
        std::vector<Rational> out;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            out.push_back((*this)(i, i));
        return out;
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Rational trace() const
    {
        Rational t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            t += (*this)(i, i);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("ExactMatrix: product dimension mismatch");
        ExactMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend std::vector<Rational> operator*(const ExactMatrix& a, const std::vector<Rational>& v)
    {
        if (a.cols_ != v.size())
            throw std::invalid_argument("ExactMatrix: vector dimension mismatch");
        std::vector<Rational> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (v[k] != 0)
                    out[i] += a(i, k) * v[k];
        return out;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("ExactMatrix: difference dimension mismatch");
        ExactMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] -= b.data_[i];
        return out;
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    bool is_upper_triangular() const
    {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < std::min(r, cols_); ++c)
                if ((*this)(r, c) != 0)
                    return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

// Bit size of numerator plus denominator; smaller pivots keep fractions short.
inline std::size_t rational_size(const Rational& q)
{
    using boost::multiprecision::msb;
    auto bits = [](const Integer& z) -> std::size_t { return z == 0 ? 0 : msb(abs(z)) + 1; };
    return bits(boost::multiprecision::numerator(q)) + bits(boost::multiprecision::denominator(q));
}

} // namespace detail

struct RowEchelon {
    ExactMatrix reduced;             // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};

/// Gauss-Jordan elimination. If `augmented_cols` > 0 the trailing columns are
/// carried along but never chosen as pivot columns.
inline RowEchelon row_reduce(ExactMatrix m, std::size_t augmented_cols = 0)
{
    const std::size_t pivot_cols = m.cols() - augmented_cols;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::optional<std::size_t> best;
        for (std::size_t r = row; r < m.rows(); ++r)
            if (m(r, col) != 0 && (!best || detail::rational_size(m(r, col)) < detail::rational_size(m(*best, col))))
                best = r;
        if (!best)
            continue;
        if (*best != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(row, c), m(*best, c));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (m(row, c) != 0)
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return row_reduce(m).pivots.size(); }

/// Unique solution of A x = b, or nullopt when the system is inconsistent or
/// underdetermined. A may have more rows than columns.
inline std::optional<std::vector<Rational>> solve(const ExactMatrix& a, const std::vector<Rational>& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: right-hand side size mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto ech = row_reduce(std::move(aug), 1);
    if (ech.pivots.size() != a.cols())
        return std::nullopt;
    for (std::size_t r = ech.pivots.size(); r < a.rows(); ++r)
        if (ech.reduced(r, a.cols()) != 0)
            return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
        x[ech.pivots[i]] = ech.reduced(i, a.cols());
    return x;
}

inline std::optional<ExactMatrix> inverse(const ExactMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = a.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = row_reduce(std::move(aug), n);
    if (ech.pivots.size() != n)
        return std::nullopt;
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

/// Basis of {x : A x = 0}. Each vector has a 1 in one free column and 0 in the
/// other free columns; vectors come in increasing free-column order.
inline std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& a)
{
    auto ech = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : ech.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            v[ech.pivots[i]] = -ech.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Indices of the free columns matching kernel_basis order.
inline std::vector<std::size_t> kernel_free_columns(const ExactMatrix& a)
{
    auto ech = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : ech.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c])
            out.push_back(c);
    return out;
}

/// Coefficients of det(x I - A), lowest degree first, by the Faddeev-LeVerrier
/// recursion  N_k = A N_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A N_k) / k.
inline std::vector<Rational> characteristic_polynomial(const ExactMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("characteristic_polynomial: matrix is not square");
    const std::size_t n = a.rows();
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    ExactMatrix running(n, n); // N_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        running = a * running;
        for (std::size_t i = 0; i < n; ++i)
            running(i, i) += coeffs[n - k + 1];
        coeffs[n - k] = -(a * running).trace() / Rational(std::int64_t(k));
    }
    return coeffs;
}

/// prod (x - r) over the given roots, lowest degree first.
inline std::vector<Rational> polynomial_from_roots(const std::vector<Rational>& roots)
{
    std::vector<Rational> coeffs{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= r * coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

} // namespace bihom
