#ifndef EQTORIC_LAURENT_HPP
#define EQTORIC_LAURENT_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "eqtoric/lattice.hpp"
#include "eqtoric/rational_matrix.hpp"

namespace eqtoric {

/// Exponent vector of a monomial in the torus coordinates; the monomial
/// t^m is the character chi^m.
using Exponent = Character;

/**
 * Laurent polynomial with rational coefficients in a fixed number of
 * variables, stored as a sparse exponent -> coefficient map with no zero
 * coefficients.  Equality is coefficientwise on this canonical form.
 */
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t vars = 0) : vars_(vars) {}

    static LaurentPoly constant(std::size_t vars, const Rational& c);
    static LaurentPoly monomial(const Exponent& e, const Rational& c = Rational(1));

    std::size_t vars() const noexcept { return vars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Adds c * t^e, dropping the term if it cancels.
    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    /// Value at a point of (Q*)^vars.
    Rational evaluate(std::span<const Rational> point) const;

    /**
     * Monomial substitution x_j -> y^{images[j]}: the term x^e becomes
     * y^{sum_j e_j images[j]}.  All images must have the same dimension.
     */
    LaurentPoly substitute(std::span<const Exponent> images) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    void require_vars(const LaurentPoly& other) const;

    std::size_t vars_;
    std::map<Exponent, Rational> terms_;
};

/// Square matrix of Laurent polynomials over one ring.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t size, std::size_t vars);

    static LaurentMatrix identity(std::size_t size, std::size_t vars);
    static LaurentMatrix constant(const RationalMatrix& m, std::size_t vars);
    /// diag(chi^{m_1}, ..., chi^{m_k}).
    static LaurentMatrix diagonal(std::span<const Exponent> weights);

    std::size_t size() const noexcept { return size_; }
    std::size_t vars() const noexcept { return vars_; }
    LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

    /// Entrywise value at a torus point.
    RationalMatrix evaluate(std::span<const Rational> point) const;
    LaurentMatrix substitute(std::span<const Exponent> images) const;

    bool is_diagonal() const;
    bool is_lower_triangular() const;

    /// Cofactor expansion; intended for the small sizes that occur here.
    LaurentPoly determinant() const;
    /// adj(A) with A * adj(A) = det(A) * I.
    LaurentMatrix adjugate() const;

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const RationalMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const LaurentMatrix& a, const RationalMatrix& b);
    friend LaurentMatrix operator*(const LaurentPoly& s, const LaurentMatrix& a);
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.size_ == b.size_ && a.vars_ == b.vars_ && a.entries_ == b.entries_;
    }

private:
    std::size_t size_ = 0;
    std::size_t vars_ = 0;
    std::vector<LaurentPoly> entries_;
};

}  // namespace eqtoric

#endif
