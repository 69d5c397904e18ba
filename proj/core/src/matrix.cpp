#include "peterson/matrix.hpp"

#include <utility>

#include "peterson/errors.hpp"

namespace peterson {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DomainError("matrix entry count does not match dimensions");
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row, in order.
std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m.at(found, col).is_zero()) ++found;
        if (found == m.rows()) continue;
        if (found != pivot_row)
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m.at(found, c), m.at(pivot_row, c));
        Rational inv = Rational(1) / m.at(pivot_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(pivot_row, c);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    return rref(work).size();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix work = m;
    std::vector<std::size_t> pivot_cols = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -work.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& z) {
    if (z.size() != m.cols()) throw DomainError("vector length does not match matrix columns");
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * z[c];
    return out;
}

}  // namespace peterson
