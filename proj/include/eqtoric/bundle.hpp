#ifndef EQTORIC_BUNDLE_HPP
#define EQTORIC_BUNDLE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "eqtoric/fan.hpp"

namespace eqtoric {

/**
 * Block sizes (k_1, ..., k_r) of the structure group: block-diagonal matrices
 * whose i-th block is k_i x k_i lower triangular with one repeated diagonal
 * entry.  All ones means the structure group is the diagonal torus.
 */
class BlockStructure {
public:
    explicit BlockStructure(std::vector<std::size_t> parts);
    /// (1, ..., 1) with r parts.
    static BlockStructure torus(std::size_t r);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t count() const noexcept { return parts_.size(); }
    std::size_t total() const;

    friend bool operator==(const BlockStructure&, const BlockStructure&) = default;

private:
    std::vector<std::size_t> parts_;
};

using FanPtr = std::shared_ptr<const Fan>;

/**
 * Classification datum of an equivariant bundle after reduction to the torus:
 * for every maximal cone sigma one character m_sigma^i per block, the
 * exponents of the homomorphism T -> G attached to sigma.
 *
 * The constructor checks shapes only; check_extension decides whether the
 * collection actually glues to a bundle.
 */
class BundleData {
public:
    BundleData(FanPtr fan, BlockStructure blocks, std::vector<std::vector<Character>> chars);

    /// m_sigma^i = global[i] on every maximal cone.
    static BundleData trivial(FanPtr fan, BlockStructure blocks, std::vector<Character> global);
    /// All characters zero.
    static BundleData zero(FanPtr fan, BlockStructure blocks);

    const Fan& fan() const noexcept { return *fan_; }
    const FanPtr& fan_ptr() const noexcept { return fan_; }
    const BlockStructure& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.count(); }
    const Character& character(std::size_t cone, std::size_t block) const { return chars_.at(cone).at(block); }
    const std::vector<std::vector<Character>>& chars() const noexcept { return chars_; }

    /// Negates every character.
    BundleData inverse() const;

    friend bool operator==(const BundleData& a, const BundleData& b);

private:
    FanPtr fan_;
    BlockStructure blocks_;
    std::vector<std::vector<Character>> chars_;
};

/// Same fan (by identity or value).
bool same_fan(const Fan& a, const Fan& b);

struct ExtensionViolation {
    enum class Kind {
        /// m_sigma^i - m_tau^i does not vanish on a ray of the common face.
        NotPerpendicular,
        /// A character of a lower-dimensional maximal cone does not factor
        /// through the projection onto its stabilizer.
        NotFactoring,
    };
    Kind kind;
    std::size_t sigma;
    std::size_t tau;
    std::size_t block;
    LatticePoint witness;        ///< shared ray (or complement vector)
    std::optional<std::size_t> ray;  ///< fan index of the shared ray
    Integer value;               ///< the nonzero pairing
};

struct ExtensionReport {
    bool ok = true;
    std::vector<ExtensionViolation> violations;
};

/**
 * Gluing condition: for all unordered pairs of maximal cones and all blocks,
 * m_sigma^i - m_tau^i lies in the perpendicular of the common face, i.e. the
 * transition character is an invertible regular function on the overlap.
 */
ExtensionReport check_extension(const BundleData& data);

/// Integer value per (ray, block): the ray values of the support functions.
struct RayValues {
    FanPtr fan;
    BlockStructure blocks;
    std::vector<std::vector<Integer>> values;  ///< values[ray][block]

    friend bool operator==(const RayValues& a, const RayValues& b);
};

/// m_sigma^i = solve_dual(generators of sigma, values of its rays).  Requires
/// all maximal cones to be full-dimensional.
BundleData from_ray_values(const RayValues& rv);

/// Value at (ray, block) = <m_sigma^i, v_ray> for any sigma containing the
/// ray; throws Inconsistent if two cones disagree.
RayValues to_ray_values(const BundleData& data);

/// Equal collections; throws Incomparable on fan or block mismatch.
bool is_isomorphic(const BundleData& a, const BundleData& b);

/// Blockwise sum of characters.
BundleData tensor(const BundleData& a, const BundleData& b);

/// Per block, the restriction of m_sigma^i to the generators of `face`: a
/// character of the stabilizer torus of the face.
std::vector<Character> induced_on_face(const BundleData& data, const Cone& face);

/**
 * Transition characters e_{tau sigma}^i = m_tau^i - m_sigma^i for every
 * ordered pair of maximal cones (the diagonal included, where they vanish).
 * phi_{tau sigma} = chi^{e_{tau sigma}} is the transition function of the
 * bundle on the overlap of the two charts.
 */
struct TransitionCocycle {
    FanPtr fan;
    std::size_t blocks = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Character>> transitions;

    const std::vector<Character>& at(std::size_t tau, std::size_t sigma) const;
};

TransitionCocycle transition_cocycle(const BundleData& data);

struct CocycleViolation {
    enum class Kind { Missing, Triple, Antisymmetry, NotInvertible, Equivariance };
    Kind kind;
    std::size_t first;
    std::size_t second;
    std::size_t third;  ///< only meaningful for Triple
    std::size_t block;
};

struct CocycleReport {
    bool ok = true;
    std::vector<CocycleViolation> violations;
};

/**
 * Checks, in exponent arithmetic: e_{gs} = e_{gt} + e_{ts} for all ordered
 * triples, e_{st} = -e_{ts}, each e_{ts} perpendicular to the common face,
 * and (when `source` is given) e_{ts} = m_t - m_s.  For monomial data the
 * last identity is the whole content of phi(tx) = rho_t(t) phi(x) rho_s(t)^-1.
 */
CocycleReport verify_cocycle(const TransitionCocycle& cocycle, const BundleData* source = nullptr);

/// Parametrization of classes on a complete smooth fan by Z^{d r}.
struct Classification {
    FanPtr fan;
    BlockStructure blocks;
    std::size_t ray_count;
    std::size_t block_count;
    std::size_t rank;

    BundleData bundle(const RayValues& coordinates) const { return from_ray_values(coordinates); }
    RayValues coordinates(const BundleData& data) const { return to_ray_values(data); }
};

/// Throws FanNotComplete unless the fan passes is_complete (and SingularFan
/// when it is not smooth).
Classification classify(FanPtr fan, BlockStructure blocks, std::uint64_t seed = kDefaultCoverageSeed);

}  // namespace eqtoric

#endif
