#include <doctest.h>

#include <map>

#include "testkit.hpp"

using namespace eqtoric;
using namespace testkit;

namespace {

ErrorCode construction_error(std::size_t dim, std::vector<std::vector<long>> rays,
                             std::vector<std::vector<std::size_t>> cones) {
    try {
        make_fan(dim, std::move(rays), std::move(cones));
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("fan construction unexpectedly succeeded");
    return ErrorCode::Io;
}

Cone cone_of(std::size_t n, std::vector<std::vector<long>> gens) {
    std::vector<LatticePoint> g;
    for (auto& v : gens) g.push_back(point(v));
    return Cone(n, std::move(g));
}

}  // namespace

TEST_SUITE("fan") {

TEST_CASE("smoothness examples") {
    CHECK(is_smooth(*p2()).smooth);
    CHECK(p2()->smooth());
    const FanPtr singular = make_fan(2, {{1, 0}, {1, 2}}, {{0, 1}});
    const SmoothnessReport r = is_smooth(*singular);
    CHECK_FALSE(r.smooth);
    REQUIRE(r.offending.size() == 1);
    CHECK(r.offending[0].cone == 0);
    CHECK(r.offending[0].invariant_factors == std::vector<Integer>{1, 2});
    CHECK(is_smooth(*make_fan(2, {}, {{}})).smooth);
}

TEST_CASE("bundled example fans are smooth and complete") {
    for (const FanPtr& f : {p1(), p2(), p1xp1(), hirzebruch(0), hirzebruch(1), hirzebruch(2), hirzebruch(3), p3()}) {
        CHECK(f->smooth());
        const CompletenessReport c = is_complete(*f);
        CHECK(c.complete);
        CHECK(c.unmatched_facets.empty());
        CHECK(c.uncovered.empty());
        CHECK(c.components == 1);
        // Facet double counting: each full-dimensional cone has n facets.
        CHECK(f->max_cone_count() * f->dim() == 2 * c.facet_count);
    }
}

TEST_CASE("incomplete fans are reported") {
    const CompletenessReport quadrant = is_complete(*make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}));
    CHECK_FALSE(quadrant.complete);
    CHECK(quadrant.unmatched_facets.size() == 2);
    CHECK_FALSE(quadrant.uncovered.empty());

    // P2 minus one cone: two facets unmatched.
    const CompletenessReport missing = is_complete(*make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}));
    CHECK_FALSE(missing.complete);
    CHECK(missing.unmatched_facets.size() == 2);

    // Lower-dimensional maximal cones.
    const CompletenessReport rays_only = is_complete(*make_fan(2, {{1, 0}, {0, 1}}, {{0}, {1}}));
    CHECK_FALSE(rays_only.complete);
    CHECK(rays_only.lower_dimensional == std::vector<std::size_t>{0, 1});
}

TEST_CASE("coverage sampling is reproducible and seed-dependent") {
    const FanPtr quadrant = make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}});
    const CompletenessReport a = is_complete(*quadrant, 7), b = is_complete(*quadrant, 7), c = is_complete(*quadrant, 8);
    CHECK(a.uncovered == b.uncovered);
    CHECK(a.seed == 7);
    CHECK(a.samples == kDefaultCoverageSamples);
    CHECK_FALSE(a.uncovered == c.uncovered);
}

TEST_CASE("construction rejects malformed input") {
    CHECK(construction_error(2, {{2, 0}, {0, 1}}, {{0, 1}}) == ErrorCode::MalformedFan);
    CHECK(construction_error(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}}) == ErrorCode::MalformedFan);
    CHECK(construction_error(2, {{1, 0}, {1, 0}}, {{0}, {1}}) == ErrorCode::MalformedFan);
    CHECK(construction_error(2, {{1, 0}, {0, 1}}, {{0, 0}}) == ErrorCode::MalformedFan);
    CHECK(construction_error(2, {{1, 0}, {0, 1}}, {{0, 2}}) == ErrorCode::MalformedFan);
    CHECK(construction_error(2, {{1, 0}, {0, 1}}, {}) == ErrorCode::MalformedFan);
    CHECK(construction_error(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0, 1, 2}}) == ErrorCode::MalformedFan);
    CHECK(construction_error(0, {}, {{}}) == ErrorCode::MalformedFan);
}

TEST_CASE("construction rejects non-fans") {
    // A maximal cone that is a face of another.
    CHECK(construction_error(2, {{1, 0}, {0, 1}}, {{0, 1}, {0}}) == ErrorCode::NotAFan);
    // Overlapping interiors without a common face.
    CHECK(construction_error(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}}, {{0, 1}, {2, 3}}) == ErrorCode::NotAFan);
    // Sharing a ray but overlapping beyond it.
    CHECK(construction_error(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}}) == ErrorCode::NotAFan);
}

TEST_CASE("intersect examples") {
    const FanPtr f = p2();
    const Cone& s12 = f->max_cone(0);
    const Cone& s23 = f->max_cone(1);
    const Cone face = intersect(s12, s23, *f);
    CHECK(face == cone_of(2, {{0, 1}}));
    CHECK(face.rays() == std::vector<std::size_t>{1});
    CHECK(intersect(s12, s12, *f) == s12);
    const FanPtr line = p1();
    CHECK(intersect(line->max_cone(0), line->max_cone(1), *line).is_zero());
}

TEST_CASE("separating functional vanishes on the common face and separates the rest") {
    const FanPtr f = p2();
    const auto m = separating_functional(f->max_cone(0), f->max_cone(1));
    REQUIRE(m.has_value());
    auto eval = [&](const LatticePoint& v) { return (*m)[0] * Rational(v[0]) + (*m)[1] * Rational(v[1]); };
    CHECK(eval(point({0, 1})) == 0);
    CHECK(eval(point({1, 0})) > 0);
    CHECK(eval(point({-1, -1})) < 0);
    // The hand-derived functional (-1, 0), with the opposite orientation,
    // separates the same pair.
    CHECK(pairing(character({-1, 0}), point({0, 1})) == 0);
    CHECK(pairing(character({-1, 0}), point({1, 0})) < 0);
    CHECK(pairing(character({-1, 0}), point({-1, -1})) > 0);
}

TEST_CASE("intersect is commutative and lands in both cones") {
    for (const FanPtr& f : {p2(), p1xp1(), hirzebruch(3), p3()})
        for (std::size_t a = 0; a < f->max_cone_count(); ++a)
            for (std::size_t b = 0; b < f->max_cone_count(); ++b) {
                const Cone ab = intersect(f->max_cone(a), f->max_cone(b), *f);
                CHECK(ab == intersect(f->max_cone(b), f->max_cone(a), *f));
                CHECK(f->max_cone(a).has_face(ab));
                CHECK(f->max_cone(b).has_face(ab));
                CHECK(ab == f->common_face(a, b));
            }
}

TEST_CASE("every face of a smooth cone is separated") {
    const Cone s = cone_of(3, {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<LatticePoint> gens;
        for (unsigned i = 0; i < 3; ++i)
            if (mask & (1u << i)) gens.push_back(s.generators()[i]);
        CHECK(separating_functional(s, Cone(3, gens)).has_value());
    }
}

TEST_CASE("dual and perpendicular membership") {
    const Cone quadrant = cone_of(2, {{1, 0}, {0, 1}});
    const Cone zero(2, {});
    CHECK(dual_contains(quadrant, character({1, 0})));
    CHECK_FALSE(dual_contains(quadrant, character({-1, 3})));
    CHECK(dual_contains(zero, character({-4, 7})));
    const Cone e2 = cone_of(2, {{0, 1}});
    CHECK(perp_contains(e2, character({-1, 0})));
    CHECK_FALSE(perp_contains(e2, character({0, -1})));
    CHECK(perp_contains(zero, character({3, 3})));

    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const Character m = random_character(rng, 2, 3), m2 = random_character(rng, 2, 3);
        for (const Cone* c : {&quadrant, &e2, &zero}) {
            CHECK(perp_contains(*c, m) == (dual_contains(*c, m) && dual_contains(*c, -m)));
            CHECK(perp_contains(*c, m) == perp_contains(*c, -m));
            if (perp_contains(*c, m) && perp_contains(*c, m2)) CHECK(perp_contains(*c, m + m2));
        }
    }
}

TEST_CASE("cone membership") {
    const FanPtr f = hirzebruch(2);
    CHECK(cone_contains(f->max_cone(1), point({-1, 3})));
    CHECK_FALSE(cone_contains(f->max_cone(0), point({-1, 3})));
    CHECK(cone_contains(f->max_cone(0), point({0, 0})));
}

TEST_CASE("stabilizer splitting") {
    const StabilizerSplitting e1 = stabilizer_splitting(cone_of(2, {{1, 0}}));
    CHECK(e1.complement == std::vector<LatticePoint>{point({0, 1})});
    CHECK(e1.factors_through(character({5, 0})));
    CHECK_FALSE(e1.factors_through(character({5, 1})));

    const StabilizerSplitting full = stabilizer_splitting(p2()->max_cone(1));
    CHECK(full.complement.empty());
    CHECK(full.factors_through(character({3, -7})));

    const StabilizerSplitting diag = stabilizer_splitting(cone_of(2, {{1, 1}}));
    CHECK(diag.complement == std::vector<LatticePoint>{point({0, 1})});
    CHECK(diag.factors_through(character({1, 0})) == (pairing(character({1, 0}), point({0, 1})) == 0));

    Rng rng(12);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = uniform(rng, 2, 4);
        const IntMatrix g = random_unimodular(rng, n);
        const std::size_t d = uniform(rng, 1, n);
        std::vector<LatticePoint> gens;
        for (std::size_t i = 0; i < d; ++i) {
            LatticePoint v(g.row(i));
            if (v.is_primitive()) gens.push_back(v);
        }
        if (gens.empty()) continue;
        const StabilizerSplitting s = stabilizer_splitting(Cone(n, gens));
        const Character chi = random_character(rng, gens.size(), 4);
        const Character m = s.pull_back(chi);
        CHECK(s.factors_through(m));
        CHECK(s.restrict(m) == chi);
    }
}

}  // TEST_SUITE
