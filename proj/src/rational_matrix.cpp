#include "eqtoric/rational_matrix.hpp"

#include <algorithm>

#include "eqtoric/error.hpp"

namespace eqtoric {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RationalMatrix reduced_row_echelon(const RationalMatrix& input) {
    RationalMatrix a = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        const Rational pivot = a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= pivot;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return a;
}

std::size_t rank(const RationalMatrix& a) {
    const RationalMatrix e = reduced_row_echelon(a);
    std::size_t r = 0;
    for (std::size_t i = 0; i < e.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < e.cols() && !nonzero; ++j) nonzero = e(i, j) != 0;
        if (nonzero) ++r;
    }
    return r;
}

Rational determinant(const RationalMatrix& input) {
    if (!input.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    RationalMatrix a = input;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const RationalMatrix e = reduced_row_echelon(aug);
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (e(i, i) != 1) throw Error(ErrorCode::DimensionMismatch, "matrix is singular");
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
    }
    return inv;
}

RationalMatrix column_space_basis(const RationalMatrix& a) {
    const RationalMatrix e = reduced_row_echelon(a.transpose());
    const std::size_t r = rank(a);
    RationalMatrix basis(a.rows(), r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) basis(i, j) = e(j, i);
    return basis;
}

RationalMatrix hconcat(const std::vector<RationalMatrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
        cols += b.cols();
    }
    RationalMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, offset + j) = b(i, j);
        offset += b.cols();
    }
    return out;
}

}  // namespace eqtoric
