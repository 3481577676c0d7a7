#include "eqtoric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "eqtoric/fourier_motzkin.hpp"

namespace eqtoric {

Cone::Cone(std::size_t ambient_dim, std::vector<LatticePoint> generators, std::vector<std::size_t> rays)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)), rays_(std::move(rays)) {
    if (!rays_.empty() && rays_.size() != generators_.size())
        throw Error(ErrorCode::MalformedFan, "ray indices do not match generators");
    for (const auto& v : generators_) {
        if (v.dim() != ambient_dim_)
            throw Error(ErrorCode::DimensionMismatch, "cone generator of wrong dimension");
        if (!v.is_primitive()) throw Error(ErrorCode::MalformedFan, "cone generator is not primitive");
    }
    if (generators_.size() > ambient_dim_ ||
        rank(IntMatrix::from_rows(std::span<const LatticePoint>(generators_), ambient_dim_)) != generators_.size())
        throw Error(ErrorCode::MalformedFan, "cone generators are linearly dependent (cone is not simplicial)");
}

bool Cone::has_generator(const LatticePoint& v) const {
    return std::find(generators_.begin(), generators_.end(), v) != generators_.end();
}

bool Cone::has_face(const Cone& other) const {
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [this](const LatticePoint& v) { return has_generator(v); });
}

Fan::Fan(std::size_t dim, std::vector<LatticePoint> rays, std::vector<std::vector<std::size_t>> max_cones)
    : dim_(dim), rays_(std::move(rays)) {
    if (dim_ == 0) throw Error(ErrorCode::MalformedFan, "ambient dimension must be at least 1");
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (rays_[i].dim() != dim_)
            throw Error(ErrorCode::MalformedFan, "ray " + std::to_string(i) + " has wrong dimension");
        if (!rays_[i].is_primitive())
            throw Error(ErrorCode::MalformedFan, "ray " + std::to_string(i) + " is not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (rays_[j] == rays_[i])
                throw Error(ErrorCode::MalformedFan,
                            "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
    if (max_cones.empty()) throw Error(ErrorCode::MalformedFan, "fan has no cones");

    std::vector<bool> used(rays_.size(), false);
    for (std::size_t c = 0; c < max_cones.size(); ++c) {
        auto ids = max_cones[c];
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw Error(ErrorCode::MalformedFan, "cone " + std::to_string(c) + " repeats a ray");
        for (auto id : ids) {
            if (id >= rays_.size())
                throw Error(ErrorCode::MalformedFan,
                            "cone " + std::to_string(c) + " references missing ray " + std::to_string(id));
            used[id] = true;
        }
        try {
            cones_.push_back(cone_from_rays(ids));
        } catch (const Error& e) {
            throw Error(ErrorCode::MalformedFan, "cone " + std::to_string(c) + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (!used[i]) throw Error(ErrorCode::MalformedFan, "ray " + std::to_string(i) + " lies in no cone");

    const std::size_t m = cones_.size();
    common_.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) {
                common_[a * m + a] = cones_[a];
                continue;
            }
            if (cones_[b].has_face(cones_[a]))
                throw Error(ErrorCode::NotAFan, "maximal cone " + std::to_string(a) + " is a face of cone " +
                                                    std::to_string(b));
            if (a > b) {
                common_[a * m + b] = common_[b * m + a];
                continue;
            }
            try {
                common_[a * m + b] = intersect(cones_[a], cones_[b], *this);
            } catch (const Error&) {
                throw Error(ErrorCode::NotAFan, "cones " + std::to_string(a) + " and " + std::to_string(b) +
                                                    " do not meet in a common face");
            }
        }

    ray_cones_.resize(rays_.size());
    for (std::size_t c = 0; c < m; ++c)
        for (auto id : cones_[c].rays()) ray_cones_[id].push_back(c);

    smooth_ = is_smooth(*this).smooth;
    duals_.resize(m);
    for (std::size_t c = 0; c < m; ++c) {
        const auto& gens = cones_[c].generators();
        if (gens.size() == dim_ && smooth_) duals_[c] = dual_basis(gens);
    }
}

Cone Fan::cone_from_rays(std::vector<std::size_t> ray_ids) const {
    std::sort(ray_ids.begin(), ray_ids.end());
    std::vector<LatticePoint> gens;
    gens.reserve(ray_ids.size());
    for (auto id : ray_ids) gens.push_back(rays_.at(id));
    return Cone(dim_, std::move(gens), std::move(ray_ids));
}

std::vector<std::size_t> Fan::cones_containing(const Cone& face) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i].has_face(face)) out.push_back(i);
    return out;
}

SmoothnessReport is_smooth(const Fan& fan) {
    SmoothnessReport report;
    for (std::size_t i = 0; i < fan.max_cone_count(); ++i) {
        const Cone& c = fan.max_cone(i);
        if (c.is_zero()) continue;
        auto factors = invariant_factors(
            IntMatrix::from_rows(std::span<const LatticePoint>(c.generators()), fan.dim()));
        if (std::any_of(factors.begin(), factors.end(), [](const Integer& d) { return d != 1; })) {
            report.smooth = false;
            report.offending.push_back({i, std::move(factors)});
        }
    }
    return report;
}

namespace {

std::vector<Rational> as_rational(const LatticePoint& v) {
    std::vector<Rational> out;
    out.reserve(v.dim());
    for (const auto& c : v.coords()) out.emplace_back(c);
    return out;
}

}  // namespace

std::optional<std::vector<Rational>> separating_functional(const Cone& sigma, const Cone& tau) {
    if (sigma.ambient_dim() != tau.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "cones in different ambient dimensions");
    const std::size_t n = sigma.ambient_dim();
    // Homogeneous strict inequalities scale, so "> 0" may be written ">= 1".
    std::vector<LinearInequality> system;
    for (const auto& v : sigma.generators()) {
        if (tau.has_generator(v))
            add_equality(system, as_rational(v));
        else
            system.push_back({as_rational(v), Rational(1)});
    }
    for (const auto& v : tau.generators()) {
        if (sigma.has_generator(v)) continue;
        auto coeffs = as_rational(-v);
        system.push_back({std::move(coeffs), Rational(1)});
    }
    return fourier_motzkin_solve(system, n);
}

Cone intersect(const Cone& sigma, const Cone& tau, const Fan& fan) {
    if (!separating_functional(sigma, tau))
        throw Error(ErrorCode::NotAFan, "cones do not meet in a common face");
    std::vector<LatticePoint> shared;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < sigma.dim(); ++i) {
        const auto& v = sigma.generators()[i];
        if (!tau.has_generator(v)) continue;
        shared.push_back(v);
        if (!sigma.rays().empty()) ids.push_back(sigma.rays()[i]);
    }
    if (!sigma.rays().empty()) return fan.cone_from_rays(std::move(ids));
    return Cone(sigma.ambient_dim(), std::move(shared));
}

bool cone_contains(const Cone& cone, const LatticePoint& point) {
    const std::size_t n = cone.ambient_dim();
    const std::size_t d = cone.dim();
    if (point.dim() != n) throw Error(ErrorCode::DimensionMismatch, "point of wrong dimension");
    // Solve sum_j lambda_j v_j = point: n equations, d unknowns.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) a[i][j] = Rational(cone.generators()[j][i]);
        a[i][d] = Rational(point[i]);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return false;  // cannot happen for independent generators
        std::swap(a[r], a[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j <= d; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (a[i][d] != 0) return false;
    for (std::size_t i = 0; i < d; ++i)
        if (a[i][d] / a[i][i] < 0) return false;
    return true;
}

CompletenessReport is_complete(const Fan& fan, std::uint64_t seed, std::size_t samples) {
    CompletenessReport report;
    report.seed = seed;
    report.samples = samples;
    const std::size_t n = fan.dim();
    const std::size_t m = fan.max_cone_count();

    std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;
    for (std::size_t c = 0; c < m; ++c) {
        const Cone& cone = fan.max_cone(c);
        if (cone.dim() != n) {
            report.lower_dimensional.push_back(c);
            continue;
        }
        for (std::size_t skip = 0; skip < n; ++skip) {
            std::vector<std::size_t> facet;
            for (std::size_t j = 0; j < n; ++j)
                if (j != skip) facet.push_back(cone.rays()[j]);
            facets[facet].push_back(c);
        }
    }
    report.facet_count = facets.size();

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [rays, cones] : facets) {
        if (cones.size() != 2) report.unmatched_facets.push_back({rays, cones});
        for (std::size_t i = 1; i < cones.size(); ++i) parent[find(cones[i])] = find(cones[0]);
    }
    std::set<std::size_t> roots;
    for (std::size_t c = 0; c < m; ++c) roots.insert(find(c));
    report.components = roots.size();

    // Coordinates are drawn with a plain modulus so that the sample sequence
    // depends only on the seed, not on the standard library's distributions.
    std::mt19937_64 rng(seed);
    constexpr std::uint64_t kRange = 1000;
    for (std::size_t s = 0; s < samples; ++s) {
        LatticePoint u(n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                u[i] = Integer(static_cast<long>(rng() % (2 * kRange + 1))) - Integer(static_cast<long>(kRange));
        } while (u.is_zero());
        Integer g = 0;
        for (const auto& c : u.coords()) g = gcd(g, c);
        for (std::size_t i = 0; i < n; ++i) u[i] /= g;
        const bool covered = std::any_of(fan.max_cones().begin(), fan.max_cones().end(),
                                         [&](const Cone& c) { return cone_contains(c, u); });
        if (!covered) report.uncovered.push_back(std::move(u));
    }

    report.complete = report.lower_dimensional.empty() && report.unmatched_facets.empty() &&
                      report.components == 1 && report.uncovered.empty();
    return report;
}

bool dual_contains(const Cone& sigma, const Character& m) {
    return std::all_of(sigma.generators().begin(), sigma.generators().end(),
                       [&](const LatticePoint& v) { return pairing(m, v) >= 0; });
}

bool perp_contains(const Cone& delta, const Character& m) {
    return std::all_of(delta.generators().begin(), delta.generators().end(),
                       [&](const LatticePoint& v) { return pairing(m, v) == 0; });
}

bool StabilizerSplitting::factors_through(const Character& m) const {
    return std::all_of(complement.begin(), complement.end(),
                       [&](const LatticePoint& w) { return pairing(m, w) == 0; });
}

Character StabilizerSplitting::restrict(const Character& m) const {
    Character chi(cone_basis.size());
    for (std::size_t i = 0; i < cone_basis.size(); ++i) chi[i] = pairing(m, cone_basis[i]);
    return chi;
}

Character StabilizerSplitting::pull_back(const Character& chi) const {
    if (chi.dim() != projection.size())
        throw Error(ErrorCode::DimensionMismatch, "character of the stabilizer has wrong dimension");
    Character m(cone.ambient_dim());
    for (std::size_t i = 0; i < projection.size(); ++i) m += chi[i] * projection[i];
    return m;
}

StabilizerSplitting stabilizer_splitting(const Cone& sigma) {
    StabilizerSplitting s;
    s.cone = sigma;
    s.cone_basis = sigma.generators();
    s.complement = complete_to_basis(s.cone_basis, sigma.ambient_dim());
    std::vector<LatticePoint> full = s.cone_basis;
    full.insert(full.end(), s.complement.begin(), s.complement.end());
    auto dual = dual_basis(full);
    dual.resize(s.cone_basis.size());
    s.projection = std::move(dual);
    return s;
}

}  // namespace eqtoric
