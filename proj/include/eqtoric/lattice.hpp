#ifndef EQTORIC_LATTICE_HPP
#define EQTORIC_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "eqtoric/error.hpp"
#include "eqtoric/numeric.hpp"

namespace eqtoric {

/**
 * Integer vector tagged with the lattice it lives in.  The two lattices of a
 * torus T ~ (C*)^n are N (one-parameter subgroups, where ray generators live)
 * and its dual M = Hom(N, Z) (characters T -> C*).  Keeping them as distinct
 * types means a character can only be evaluated against a cocharacter.
 */
template <class Tag>
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t dim) : coords_(dim) {}
    explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    IntVector(std::initializer_list<long> coords) {
        coords_.reserve(coords.size());
        for (long c : coords) coords_.emplace_back(c);
    }

    std::size_t dim() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
    }

    /// gcd of the coordinates is 1.
    bool is_primitive() const;

    IntVector& operator+=(const IntVector& other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
        return *this;
    }
    IntVector& operator-=(const IntVector& other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
        return *this;
    }
    friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
    friend IntVector operator-(IntVector a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }
    friend IntVector operator*(const Integer& s, IntVector a) {
        for (auto& c : a.coords_) c *= s;
        return a;
    }

    friend bool operator==(const IntVector& a, const IntVector& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const IntVector& a, const IntVector& b) { return !(a == b); }
    /// Lexicographic; shorter vectors first on a common prefix.
    friend bool operator<(const IntVector& a, const IntVector& b) {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                            b.coords_.begin(), b.coords_.end());
    }

private:
    void require_same_dim(const IntVector& other) const {
        if (other.dim() != dim())
            throw Error(ErrorCode::DimensionMismatch, "lattice vectors of different dimension");
    }

    std::vector<Integer> coords_;
};

struct CocharacterTag {};
struct CharacterTag {};

/// Element of N.
using LatticePoint = IntVector<CocharacterTag>;
/// Element of M.
using Character = IntVector<CharacterTag>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Rows of the matrix are the given points.
    template <class Tag>
    static IntMatrix from_rows(std::span<const IntVector<Tag>> rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].dim() != cols)
                throw Error(ErrorCode::DimensionMismatch, "row of wrong dimension");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    std::vector<Integer> row(std::size_t i) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const IntMatrix& a);

/// <m, v> = sum_i m_i v_i.
Integer pairing(const Character& m, const LatticePoint& v);

struct HermiteResult {
    IntMatrix hnf;       ///< H = A * U
    IntMatrix transform; ///< U, unimodular
    std::vector<std::size_t> pivot_cols;  ///< pivot column for each pivot row, in order
    std::vector<std::size_t> pivot_rows;
};

/**
 * Column-style Hermite normal form H = A * U.
 *
 * H is in column echelon form: the pivot of the j-th pivot column sits in a
 * strictly lower row than that of column j-1, pivots are positive, and the
 * entries to the left of a pivot (in the pivot's row) lie in [0, pivot).
 * Columns after the last pivot column are zero.
 */
HermiteResult hermite_normal_form(const IntMatrix& a);

struct SmithResult {
    IntMatrix smith;  ///< S = U * A * V
    IntMatrix left;   ///< U
    IntMatrix right;  ///< V
};

/// S diagonal, nonnegative, with d_1 | d_2 | ... (zeros last).
SmithResult smith_normal_form(const IntMatrix& a);

/// The nonzero diagonal entries of the Smith form.
std::vector<Integer> invariant_factors(const IntMatrix& a);

/**
 * Vectors w_{k+1}..w_n with (vs, w) a Z-basis of Z^n.  Deterministic: the
 * complement is read off the inverse of the column-HNF transform of the
 * matrix with rows vs.
 */
std::vector<LatticePoint> complete_to_basis(std::span<const LatticePoint> vs, std::size_t n);

/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// The unique m with <m, basis_i> = values_i.
Character solve_dual(std::span<const LatticePoint> basis, std::span<const Integer> values);

/**
 * Dual basis m_1..m_n of a unimodular basis v_1..v_n: <m_i, v_j> = delta_ij.
 * Repeated dual solves against one basis are linear combinations of these.
 */
std::vector<Character> dual_basis(std::span<const LatticePoint> basis);

}  // namespace eqtoric

#endif
