#ifndef EQTORIC_FAN_HPP
#define EQTORIC_FAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqtoric/lattice.hpp"

namespace eqtoric {

/**
 * Simplicial rational cone in N, given by primitive, linearly independent
 * ray generators.  Cones taken from a Fan also remember the indices of their
 * rays in that fan (sorted ascending, parallel to the generators); the zero
 * cone has no generators.
 */
class Cone {
public:
    Cone() = default;
    Cone(std::size_t ambient_dim, std::vector<LatticePoint> generators, std::vector<std::size_t> rays = {});

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return generators_.size(); }
    bool is_zero() const noexcept { return generators_.empty(); }
    const std::vector<LatticePoint>& generators() const noexcept { return generators_; }
    const std::vector<std::size_t>& rays() const noexcept { return rays_; }

    bool has_generator(const LatticePoint& v) const;
    /// Every generator of `other` is a generator of this cone.
    bool has_face(const Cone& other) const;

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.generators_ == b.generators_;
    }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<LatticePoint> generators_;
    std::vector<std::size_t> rays_;
};

/**
 * Fan stored by its maximal cones, each a subset of the ray list.
 *
 * Construction verifies that every maximal cone is simplicial, that no
 * maximal cone is a face of another, that every ray is used, and that any two
 * maximal cones meet in a common face (an exact separating functional
 * exists).  Smoothness and completeness are reported separately by
 * is_smooth / is_complete.
 */
class Fan {
public:
    Fan(std::size_t dim, std::vector<LatticePoint> rays, std::vector<std::vector<std::size_t>> max_cones);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticePoint>& rays() const noexcept { return rays_; }
    std::size_t ray_count() const noexcept { return rays_.size(); }
    const std::vector<Cone>& max_cones() const noexcept { return cones_; }
    const Cone& max_cone(std::size_t i) const { return cones_.at(i); }
    std::size_t max_cone_count() const noexcept { return cones_.size(); }

    /// The cone spanned by the given rays (not checked to be a face).
    Cone cone_from_rays(std::vector<std::size_t> ray_ids) const;

    /// Indices of the maximal cones having `face` as a face.
    std::vector<std::size_t> cones_containing(const Cone& face) const;
    /// Maximal cones containing ray `ray`.
    const std::vector<std::size_t>& cones_with_ray(std::size_t ray) const { return ray_cones_.at(ray); }

    /// Common face of maximal cones a and b, verified at construction.
    const Cone& common_face(std::size_t a, std::size_t b) const { return common_.at(a * cones_.size() + b); }

    /// All maximal cones are smooth (see is_smooth for the diagnostics).
    bool smooth() const noexcept { return smooth_; }

    /// Dual basis of a smooth full-dimensional maximal cone's generators;
    /// empty for other cones.
    const std::vector<Character>& cone_dual_basis(std::size_t cone) const { return duals_.at(cone); }

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
    }

private:
    std::size_t dim_;
    std::vector<LatticePoint> rays_;
    std::vector<Cone> cones_;
    std::vector<std::vector<std::size_t>> ray_cones_;
    std::vector<Cone> common_;
    std::vector<std::vector<Character>> duals_;
    bool smooth_ = true;
};

struct SingularCone {
    std::size_t cone;
    std::vector<Integer> invariant_factors;
};

struct SmoothnessReport {
    bool smooth = true;
    std::vector<SingularCone> offending;
};

/// Every maximal cone's generator matrix has Smith form with all ones.
SmoothnessReport is_smooth(const Fan& fan);

/// A functional m with <m,v> = 0 on the shared generators, > 0 on the other
/// generators of `sigma` and < 0 on the other generators of `tau`.
std::optional<std::vector<Rational>> separating_functional(const Cone& sigma, const Cone& tau);

/// The common face of two cones; throws NotAFan when they do not meet in a
/// common face.  Ray indices are attached when the cones came from `fan`.
Cone intersect(const Cone& sigma, const Cone& tau, const Fan& fan);

struct UnmatchedFacet {
    std::vector<std::size_t> rays;
    std::vector<std::size_t> cones;  ///< maximal cones having this facet
};

struct CompletenessReport {
    bool complete = false;
    std::vector<std::size_t> lower_dimensional;  ///< maximal cones with dim < n
    std::vector<UnmatchedFacet> unmatched_facets;
    std::size_t facet_count = 0;  ///< distinct facets of full-dimensional cones
    std::size_t components = 0;   ///< of the facet-adjacency graph
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<LatticePoint> uncovered;  ///< sampled directions in no cone
};

inline constexpr std::uint64_t kDefaultCoverageSeed = 0x5eed;
inline constexpr std::size_t kDefaultCoverageSamples = 1000;

/**
 * Completeness of a smooth fan.  Combines the facet criterion (all maximal
 * cones full-dimensional, every facet shared by exactly two of them, facet
 * adjacency connected) with a seeded coverage witness: `samples` pseudo-random
 * primitive directions must each lie in some maximal cone.
 */
CompletenessReport is_complete(const Fan& fan, std::uint64_t seed = kDefaultCoverageSeed,
                               std::size_t samples = kDefaultCoverageSamples);

/// Exact membership of a lattice point in a cone.
bool cone_contains(const Cone& cone, const LatticePoint& point);

/// <m, v> >= 0 for all generators v.
bool dual_contains(const Cone& sigma, const Character& m);

/// <m, v> == 0 for all generators v.
bool perp_contains(const Cone& delta, const Character& m);

/**
 * Splitting T ~ T_sigma x O_sigma for a smooth cone.  The cone generators
 * v_1..v_d are completed by w_{d+1}..w_n to a basis of N; T_sigma has
 * cocharacter lattice spanned by the v_i and the projection onto it kills the
 * w_j.  `projection` holds the characters m_1..m_d dual to v_1..v_d in the
 * full basis, so that a character chi of T_sigma pulls back to
 * sum_i chi_i m_i.
 */
struct StabilizerSplitting {
    Cone cone;
    std::vector<LatticePoint> cone_basis;
    std::vector<LatticePoint> complement;
    std::vector<Character> projection;

    /// m is a pull-back through the projection T -> T_sigma.
    bool factors_through(const Character& m) const;
    /// (<m, v_i>)_i, a character of T_sigma.
    Character restrict(const Character& m) const;
    /// sum_i chi_i m_i.
    Character pull_back(const Character& chi) const;
};

StabilizerSplitting stabilizer_splitting(const Cone& sigma);

}  // namespace eqtoric

#endif
