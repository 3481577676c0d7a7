#include <doctest.h>

#include "testkit.hpp"

using namespace eqtoric;
using namespace testkit;

namespace {

LaurentPoly random_poly(Rng& rng, std::size_t vars, int terms, long exp_bound) {
    LaurentPoly p(vars);
    for (int t = 0; t < terms; ++t) p.add_term(random_character(rng, vars, exp_bound), Rational(uniform(rng, -3, 3)));
    return p;
}

LaurentMatrix random_matrix(Rng& rng, std::size_t k, std::size_t vars) {
    LaurentMatrix m(k, vars);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = random_poly(rng, vars, uniform(rng, 0, 2), 2);
    return m;
}

std::vector<Rational> random_point(Rng& rng, std::size_t vars) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < vars; ++i) p.push_back(random_nonzero_rational(rng));
    return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("canonical form prunes cancelled terms") {
    LaurentPoly p(2);
    p.add_term(character({1, -1}), Rational(3));
    p.add_term(character({1, -1}), Rational(-3));
    CHECK(p.is_zero());
    p.add_term(character({0, 0}), Rational(0));
    CHECK(p.is_zero());
    const LaurentPoly x = LaurentPoly::monomial(character({1, 0}));
    CHECK((x - x).is_zero());
    CHECK((x * LaurentPoly::monomial(character({-1, 0}))) == LaurentPoly::constant(2, Rational(1)));
    CHECK_THROWS_AS(x + LaurentPoly::constant(3, Rational(1)), Error);
}

TEST_CASE("ring operations agree with evaluation") {
    Rng rng(41);
    for (int k = 0; k < 100; ++k) {
        const std::size_t vars = uniform(rng, 1, 3);
        const LaurentPoly a = random_poly(rng, vars, 3, 3), b = random_poly(rng, vars, 3, 3);
        const auto pt = random_point(rng, vars);
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((-a).evaluate(pt) == -a.evaluate(pt));
        CHECK((Rational(2, 3) * a).evaluate(pt) == Rational(2, 3) * a.evaluate(pt));
    }
}

TEST_CASE("monomial substitution") {
    // x -> z t applied to x^2 - 3x^-1 gives z^2 t^2 - 3 z^-1 t^-1.
    LaurentPoly p(1);
    p.add_term(character({2}), Rational(1));
    p.add_term(character({-1}), Rational(-3));
    const std::vector<Exponent> images{character({1, 1})};
    const LaurentPoly q = p.substitute(images);
    CHECK(q.coefficient(character({2, 2})) == 1);
    CHECK(q.coefficient(character({-1, -1})) == -3);
    CHECK(q.term_count() == 2);
}

TEST_CASE("matrix determinant and adjugate") {
    Rng rng(42);
    for (int k = 0; k < 60; ++k) {
        const std::size_t size = uniform(rng, 1, 4), vars = uniform(rng, 1, 2);
        const LaurentMatrix m = random_matrix(rng, size, vars);
        const LaurentPoly det = m.determinant();
        CHECK(m * m.adjugate() == det * LaurentMatrix::identity(size, vars));
        const auto pt = random_point(rng, vars);
        CHECK(det.evaluate(pt) == determinant(m.evaluate(pt)));
    }
}

TEST_CASE("matrix products agree with evaluation") {
    Rng rng(43);
    for (int k = 0; k < 60; ++k) {
        const std::size_t size = uniform(rng, 1, 3), vars = uniform(rng, 1, 3);
        const LaurentMatrix a = random_matrix(rng, size, vars), b = random_matrix(rng, size, vars);
        const RationalMatrix g = to_rational(random_unimodular(rng, size));
        const auto pt = random_point(rng, vars);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((g * a).evaluate(pt) == g * a.evaluate(pt));
        CHECK((a * g).evaluate(pt) == a.evaluate(pt) * g);
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("shape predicates") {
    const std::vector<Exponent> w{character({1}), character({2})};
    const LaurentMatrix d = LaurentMatrix::diagonal(w);
    CHECK(d.is_diagonal());
    CHECK(d.is_lower_triangular());
    LaurentMatrix l = d;
    l(1, 0) = LaurentPoly::constant(1, Rational(5));
    CHECK_FALSE(l.is_diagonal());
    CHECK(l.is_lower_triangular());
    l(0, 1) = LaurentPoly::constant(1, Rational(5));
    CHECK_FALSE(l.is_lower_triangular());
}

TEST_CASE("rational matrices") {
    const RationalMatrix a{{1, 2}, {3, 4}};
    CHECK(determinant(a) == -2);
    CHECK(a * inverse(a) == RationalMatrix::identity(2));
    CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), Error);
    CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
    const RationalMatrix basis = column_space_basis(RationalMatrix{{0, 1}, {0, 1}});
    CHECK(basis == RationalMatrix{{1}, {1}});
    CHECK(reduced_row_echelon(RationalMatrix{{2, 4}, {1, 3}}) == RationalMatrix::identity(2));
}

}  // TEST_SUITE
