#ifndef EQTORIC_RATIONAL_MATRIX_HPP
#define EQTORIC_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "eqtoric/numeric.hpp"

namespace eqtoric {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }
    RationalMatrix transpose() const;
    std::vector<Rational> column(std::size_t j) const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form (pivots 1, zero above and below).
RationalMatrix reduced_row_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

Rational determinant(const RationalMatrix& a);

/// Throws DimensionMismatch when the matrix is singular or not square.
RationalMatrix inverse(const RationalMatrix& a);

/**
 * Basis of the column space in reduced column echelon form: each returned
 * column has a leading 1 in a row where all other basis columns vanish.
 * Returned as a rows() x rank matrix.
 */
RationalMatrix column_space_basis(const RationalMatrix& a);

/// Matrix whose columns are the columns of `blocks`, concatenated.
RationalMatrix hconcat(const std::vector<RationalMatrix>& blocks, std::size_t rows);

}  // namespace eqtoric

#endif
