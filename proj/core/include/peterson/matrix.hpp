#pragma once

#include <cstddef>
#include <vector>

#include "peterson/rational.hpp"

namespace peterson {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
  public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalMatrix transposed() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Rank over the rationals by exact Gaussian elimination. Pivot choice is
/// the first nonzero entry in the column, so runs are deterministic.
std::size_t rank(const RationalMatrix& m);

/// Basis of the null space {z : Mz = 0}, one vector per free column of the
/// reduced row echelon form. Empty iff rank = cols.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// M * z for a column vector z.
std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& z);

}  // namespace peterson
