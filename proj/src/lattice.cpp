#include "eqtoric/lattice.hpp"

#include <string>

namespace eqtoric {

template <class Tag>
bool IntVector<Tag>::is_primitive() const {
    Integer g = 0;
    for (const auto& c : coords_) g = gcd(g, c);
    return g == 1;
}

template class IntVector<CocharacterTag>;
template class IntVector<CharacterTag>;

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return Integer(1);
    IntMatrix a = input;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& input) {
    IntMatrix a = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            const Integer f = a(i, c);
            const Integer g = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
        }
        ++r;
    }
    return r;
}

Integer pairing(const Character& m, const LatticePoint& v) {
    if (m.dim() != v.dim())
        throw Error(ErrorCode::DimensionMismatch,
                    "pairing of character of dimension " + std::to_string(m.dim()) +
                        " with lattice point of dimension " + std::to_string(v.dim()));
    Integer s = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) s += m[i] * v[i];
    return s;
}

namespace {

// Replaces columns (p, q) of m by (x*c_p + y*c_q, u*c_p + w*c_q).
void mix_columns(IntMatrix& m, std::size_t p, std::size_t q, const Integer& x, const Integer& y,
                 const Integer& u, const Integer& w) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Integer cp = m(i, p);
        const Integer cq = m(i, q);
        m(i, p) = x * cp + y * cq;
        m(i, q) = u * cp + w * cq;
    }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& a) {
    HermiteResult res{a, IntMatrix::identity(a.cols()), {}, {}};
    IntMatrix& h = res.hnf;
    IntMatrix& u = res.transform;
    std::size_t pc = 0;
    for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
        for (std::size_t j = pc + 1; j < h.cols(); ++j) {
            if (h(r, j) == 0) continue;
            if (h(r, pc) == 0) {
                h.swap_cols(pc, j);
                u.swap_cols(pc, j);
                continue;
            }
            const Integer a0 = h(r, pc);
            const Integer b0 = h(r, j);
            const ExtendedGcd eg = extended_gcd(a0, b0);
            const Integer bg = -(b0 / eg.g);
            const Integer ag = a0 / eg.g;
            mix_columns(h, pc, j, eg.x, eg.y, bg, ag);
            mix_columns(u, pc, j, eg.x, eg.y, bg, ag);
        }
        if (h(r, pc) == 0) continue;
        if (h(r, pc) < 0) {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        const Integer p = h(r, pc);
        for (std::size_t j = 0; j < pc; ++j) {
            const Integer q = floor_div(h(r, j), p);
            h.add_col_multiple(j, pc, -q);
            u.add_col_multiple(j, pc, -q);
        }
        res.pivot_rows.push_back(r);
        res.pivot_cols.push_back(pc);
        ++pc;
    }
    return res;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    SmithResult res{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    IntMatrix& s = res.smith;
    IntMatrix& u = res.left;
    IntMatrix& v = res.right;
    const std::size_t m = s.rows();
    const std::size_t n = s.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            bool found = false;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s(i, j) != 0 && (!found || abs(s(i, j)) < abs(s(bi, bj)))) {
                        found = true;
                        bi = i;
                        bj = j;
                    }
            if (!found) return res;
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                const Integer q = s(i, t) / s(t, t);
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                const Integer q = s(t, j) / s(t, t);
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, Integer(1));
                        u.add_row_multiple(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
    const SmithResult snf = smith_normal_form(a);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (snf.smith(i, i) != 0) out.push_back(snf.smith(i, i));
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::NotUnimodular, "basis matrix is not square");
    const std::size_t n = a.rows();
    const Integer det = determinant(a);
    if (det != 1 && det != -1)
        throw Error(ErrorCode::NotUnimodular, "basis matrix has determinant " + det.str());
    // Row-reduce [A | I] with unimodular row operations; A becomes upper
    // triangular with unit diagonal, then back-substitute.
    IntMatrix w = a;
    IntMatrix inv = IntMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = c; i < n; ++i)
                if (w(i, c) != 0 && (best == n || abs(w(i, c)) < abs(w(best, c)))) best = i;
            w.swap_rows(c, best);
            inv.swap_rows(c, best);
            bool done = true;
            for (std::size_t i = c + 1; i < n; ++i) {
                if (w(i, c) == 0) continue;
                const Integer q = w(i, c) / w(c, c);
                w.add_row_multiple(i, c, -q);
                inv.add_row_multiple(i, c, -q);
                if (w(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (w(c, c) < 0) {
            w.negate_row(c);
            inv.negate_row(c);
        }
    }
    for (std::size_t c = n; c-- > 0;)
        for (std::size_t i = 0; i < c; ++i) {
            const Integer f = w(i, c);
            w.add_row_multiple(i, c, -f);
            inv.add_row_multiple(i, c, -f);
        }
    return inv;
}

std::vector<LatticePoint> complete_to_basis(std::span<const LatticePoint> vs, std::size_t n) {
    for (const auto& v : vs)
        if (v.dim() != n) throw Error(ErrorCode::DimensionMismatch, "input vector of wrong dimension");
    if (vs.size() > n)
        throw Error(ErrorCode::DependentInput, "more vectors than the ambient dimension");
    const IntMatrix a = IntMatrix::from_rows(vs, n);
    const HermiteResult h = hermite_normal_form(a);
    if (h.pivot_rows.size() < vs.size())
        throw Error(ErrorCode::DependentInput, "input vectors are linearly dependent");
    Integer index = 1;
    for (std::size_t i = 0; i < h.pivot_rows.size(); ++i) index *= h.hnf(h.pivot_rows[i], h.pivot_cols[i]);
    if (index != 1)
        throw Error(ErrorCode::NotPartOfBasis,
                    "input spans a sublattice of index " + index.str() + " in its saturation");
    // A * U = [I | 0], so A is the top block of U^{-1}; the rest completes it.
    const IntMatrix full = unimodular_inverse(h.transform);
    std::vector<LatticePoint> out;
    for (std::size_t i = vs.size(); i < n; ++i) out.emplace_back(full.row(i));
    return out;
}

std::vector<Character> dual_basis(std::span<const LatticePoint> basis) {
    const std::size_t n = basis.size();
    for (const auto& v : basis)
        if (v.dim() != n) throw Error(ErrorCode::NotUnimodular, "basis is not square");
    const IntMatrix inv = unimodular_inverse(IntMatrix::from_rows(basis, n));
    std::vector<Character> out;
    out.reserve(n);
    const IntMatrix cols = inv.transpose();
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(cols.row(i));
    return out;
}

Character solve_dual(std::span<const LatticePoint> basis, std::span<const Integer> values) {
    if (values.size() != basis.size())
        throw Error(ErrorCode::DimensionMismatch, "value count differs from basis size");
    const auto dual = dual_basis(basis);
    Character m(basis.size());
    for (std::size_t i = 0; i < dual.size(); ++i)
        if (values[i] != 0) m += values[i] * dual[i];
    return m;
}

}  // namespace eqtoric
