#include "eqtoric/laurent.hpp"

namespace eqtoric {

LaurentPoly LaurentPoly::constant(std::size_t vars, const Rational& c) {
    LaurentPoly p(vars);
    p.add_term(Exponent(vars), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
    LaurentPoly p(e.dim());
    p.add_term(e, c);
    return p;
}

void LaurentPoly::require_vars(const LaurentPoly& other) const {
    if (other.vars_ != vars_) throw Error(ErrorCode::DimensionMismatch, "Laurent polynomials in different rings");
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.dim() != vars_) throw Error(ErrorCode::DimensionMismatch, "exponent of wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_) throw Error(ErrorCode::DimensionMismatch, "evaluation point of wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < vars_; ++j) {
            const long p = e[j].convert_to<long>();
            if (p >= 0)
                for (long q = 0; q < p; ++q) term *= point[j];
            else
                for (long q = 0; q < -p; ++q) term /= point[j];
        }
        sum += term;
    }
    return sum;
}

LaurentPoly LaurentPoly::substitute(std::span<const Exponent> images) const {
    if (images.size() != vars_) throw Error(ErrorCode::DimensionMismatch, "substitution of wrong length");
    const std::size_t out_vars = images.empty() ? 0 : images.front().dim();
    LaurentPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
        Exponent target(out_vars);
        for (std::size_t j = 0; j < vars_; ++j)
            if (e[j] != 0) target += e[j] * images[j];
        out.add_term(target, c);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    require_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    require_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_vars(b);
    LaurentPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly operator*(const Rational& s, LaurentPoly a) {
    if (s == 0) return LaurentPoly(a.vars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

LaurentMatrix::LaurentMatrix(std::size_t size, std::size_t vars)
    : size_(size), vars_(vars), entries_(size * size, LaurentPoly(vars)) {}

LaurentMatrix LaurentMatrix::identity(std::size_t size, std::size_t vars) {
    LaurentMatrix m(size, vars);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = LaurentPoly::constant(vars, Rational(1));
    return m;
}

LaurentMatrix LaurentMatrix::constant(const RationalMatrix& c, std::size_t vars) {
    if (!c.is_square()) throw Error(ErrorCode::DimensionMismatch, "constant matrix is not square");
    LaurentMatrix m(c.rows(), vars);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = LaurentPoly::constant(vars, c(i, j));
    return m;
}

LaurentMatrix LaurentMatrix::diagonal(std::span<const Exponent> weights) {
    if (weights.empty()) return {};
    LaurentMatrix m(weights.size(), weights.front().dim());
    for (std::size_t i = 0; i < weights.size(); ++i) m(i, i) = LaurentPoly::monomial(weights[i]);
    return m;
}

RationalMatrix LaurentMatrix::evaluate(std::span<const Rational> point) const {
    RationalMatrix out(size_, size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) out(i, j) = (*this)(i, j).evaluate(point);
    return out;
}

LaurentMatrix LaurentMatrix::substitute(std::span<const Exponent> images) const {
    const std::size_t out_vars = images.empty() ? 0 : images.front().dim();
    LaurentMatrix out(size_, out_vars);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].substitute(images);
    return out;
}

bool LaurentMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

bool LaurentMatrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = i + 1; j < size_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

namespace {

LaurentPoly cofactor_determinant(const LaurentMatrix& a, std::vector<std::size_t>& rows,
                                 std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return LaurentPoly::constant(a.vars(), Rational(1));
    if (n == 1) return a(rows[0], cols[0]);
    // expand along the first remaining row
    const std::size_t r = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    LaurentPoly det(a.vars());
    for (std::size_t k = 0; k < n; ++k) {
        const LaurentPoly& entry = a(r, cols[k]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        LaurentPoly term = entry * cofactor_determinant(a, sub_rows, sub_cols);
        if (k % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

LaurentPoly LaurentMatrix::determinant() const {
    std::vector<std::size_t> rows(size_), cols(size_);
    for (std::size_t i = 0; i < size_; ++i) rows[i] = cols[i] = i;
    return cofactor_determinant(*this, rows, cols);
}

LaurentMatrix LaurentMatrix::adjugate() const {
    LaurentMatrix adj(size_, vars_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) {
            // adj(j, i) is the (i, j) cofactor
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < size_; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            LaurentPoly minor = cofactor_determinant(*this, rows, cols);
            adj(j, i) = (i + j) % 2 == 0 ? minor : -minor;
        }
    return adj;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size_ != b.size_ || a.vars_ != b.vars_)
        throw Error(ErrorCode::DimensionMismatch, "Laurent matrix product shape mismatch");
    LaurentMatrix c(a.size_, a.vars_);
    for (std::size_t i = 0; i < a.size_; ++i)
        for (std::size_t k = 0; k < a.size_; ++k) {
            const LaurentPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < a.size_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

LaurentMatrix operator*(const RationalMatrix& a, const LaurentMatrix& b) {
    if (a.rows() != b.size_ || a.cols() != b.size_)
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    LaurentMatrix c(b.size_, b.vars_);
    for (std::size_t i = 0; i < b.size_; ++i)
        for (std::size_t k = 0; k < b.size_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.size_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

LaurentMatrix operator*(const LaurentMatrix& a, const RationalMatrix& b) {
    if (b.rows() != a.size_ || b.cols() != a.size_)
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    LaurentMatrix c(a.size_, a.vars_);
    for (std::size_t i = 0; i < a.size_; ++i)
        for (std::size_t k = 0; k < a.size_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < a.size_; ++j)
                if (b(k, j) != 0) c(i, j) += b(k, j) * a(i, k);
        }
    return c;
}

LaurentMatrix operator*(const LaurentPoly& s, const LaurentMatrix& a) {
    LaurentMatrix c(a.size_, a.vars_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = s * a.entries_[k];
    return c;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size_ != b.size_ || a.vars_ != b.vars_)
        throw Error(ErrorCode::DimensionMismatch, "Laurent matrix sum shape mismatch");
    LaurentMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
    return c;
}

}  // namespace eqtoric
