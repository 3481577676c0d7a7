// Generators and independent oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's algorithms: they evaluate
// definitions directly (pairings on rays, matrix products at sample points,
// brute-force enumeration).
#ifndef EQTORIC_TESTKIT_HPP
#define EQTORIC_TESTKIT_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eqtoric/bundle.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/lattice.hpp"
#include "eqtoric/laurent.hpp"
#include "eqtoric/rational_matrix.hpp"
#include "eqtoric/rep.hpp"

#ifndef EQTORIC_DATA_DIR
#define EQTORIC_DATA_DIR "data"
#endif

namespace testkit {

using namespace eqtoric;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::string data_path(const std::string& name) { return std::string(EQTORIC_DATA_DIR) + "/" + name; }

// Fans used throughout, built in code so the unit tests do not depend on
// the I/O layer.
inline FanPtr make_fan(std::size_t dim, std::vector<std::vector<long>> rays, std::vector<std::vector<std::size_t>> cones) {
    std::vector<LatticePoint> pts;
    for (auto& r : rays) {
        std::vector<Integer> c(r.begin(), r.end());
        pts.emplace_back(std::move(c));
    }
    return std::make_shared<const Fan>(dim, std::move(pts), std::move(cones));
}

inline FanPtr p1() { return make_fan(1, {{1}, {-1}}, {{0}, {1}}); }
inline FanPtr p2() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }
inline FanPtr p1xp1() { return make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline FanPtr hirzebruch(long a) {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}
inline FanPtr p3() {
    return make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline Character character(std::vector<long> v) { return Character(std::vector<Integer>(v.begin(), v.end())); }
inline LatticePoint point(std::vector<long> v) { return LatticePoint(std::vector<Integer>(v.begin(), v.end())); }

inline Character random_character(Rng& rng, std::size_t n, long bound) {
    std::vector<Integer> c;
    for (std::size_t i = 0; i < n; ++i) c.emplace_back(uniform(rng, -bound, bound));
    return Character(std::move(c));
}

// Integer unimodular matrix with entries in [-bound, bound], built from
// random elementary operations on the identity (rejecting steps that would
// leave the box).
inline IntMatrix random_unimodular(Rng& rng, std::size_t k, long bound = 3, int steps = 12) {
    IntMatrix g = IntMatrix::identity(k);
    if (k == 1) {
        if (uniform(rng, 0, 1)) g.negate_row(0);
        return g;
    }
    for (int s = 0; s < steps; ++s) {
        const std::size_t a = uniform(rng, 0, k - 1);
        std::size_t b = uniform(rng, 0, k - 2);
        if (b >= a) ++b;
        const long f = uniform(rng, 0, 1) ? 1 : -1;
        IntMatrix next = g;
        switch (uniform(rng, 0, 2)) {
            case 0: next.add_row_multiple(a, b, Integer(f)); break;
            case 1: next.swap_rows(a, b); break;
            default: next.negate_row(a); break;
        }
        bool inside = true;
        for (std::size_t i = 0; i < k && inside; ++i)
            for (std::size_t j = 0; j < k && inside; ++j) inside = abs(next(i, j)) <= bound;
        if (inside) g = next;
    }
    return g;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

// g diag(chi^w) g^{-1} as a Laurent matrix.
inline LaurentMatrix conjugated_diagonal(const RationalMatrix& g, const std::vector<Character>& weights) {
    return g * (LaurentMatrix::diagonal(weights) * inverse(g));
}

inline std::multiset<Character> multiset(const std::vector<Character>& v) { return {v.begin(), v.end()}; }

inline Rational random_nonzero_rational(Rng& rng) {
    long p = 0;
    while (p == 0) p = uniform(rng, -9, 9);
    return Rational(p, uniform(rng, 1, 7));
}

/**
 * Functional-equation oracle: rho(1) = I and rho(ts) = rho(t) rho(s) at
 * `points` random pairs of rational torus points.
 */
inline bool functional_equation_holds(const LaurentMatrix& rho, Rng& rng, int points = 20) {
    const std::size_t n = rho.vars();
    std::vector<Rational> one(n, Rational(1));
    if (!(rho.evaluate(one) == RationalMatrix::identity(rho.size()))) return false;
    for (int p = 0; p < points; ++p) {
        std::vector<Rational> t(n), s(n), ts(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = random_nonzero_rational(rng);
            s[i] = random_nonzero_rational(rng);
            ts[i] = t[i] * s[i];
        }
        if (!(rho.evaluate(ts) == rho.evaluate(t) * rho.evaluate(s))) return false;
    }
    return true;
}

/// Extension oracle: characters of two maximal cones agree on every ray the
/// two cones share (ray-index intersection, not the library's common face).
inline bool extension_oracle(const BundleData& b) {
    const Fan& fan = b.fan();
    for (std::size_t s = 0; s < fan.max_cone_count(); ++s)
        for (std::size_t t = s + 1; t < fan.max_cone_count(); ++t) {
            const auto& rs = fan.max_cone(s).rays();
            const auto& rt = fan.max_cone(t).rays();
            for (auto ray : rs) {
                if (std::find(rt.begin(), rt.end(), ray) == rt.end()) continue;
                for (std::size_t i = 0; i < b.block_count(); ++i)
                    if (pairing(b.character(s, i), fan.rays()[ray]) != pairing(b.character(t, i), fan.rays()[ray]))
                        return false;
            }
        }
    return true;
}

/// Support-function oracle: every cone's character reproduces the given
/// ray values on its own rays.
inline bool reproduces_ray_values(const BundleData& b, const std::vector<std::vector<Integer>>& values) {
    const Fan& fan = b.fan();
    for (std::size_t c = 0; c < fan.max_cone_count(); ++c)
        for (auto ray : fan.max_cone(c).rays())
            for (std::size_t i = 0; i < b.block_count(); ++i)
                if (pairing(b.character(c, i), fan.rays()[ray]) != values[ray][i]) return false;
    return true;
}

/// Calls f on every vector in [-bound, bound]^len (odometer order).
template <class F>
void for_each_box_point(std::size_t len, long bound, F&& f) {
    std::vector<long> v(len, -bound);
    while (true) {
        f(v);
        std::size_t i = 0;
        while (i < len && v[i] == bound) v[i++] = -bound;
        if (i == len) return;
        ++v[i];
    }
}

}  // namespace testkit

#endif
