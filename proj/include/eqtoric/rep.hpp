#ifndef EQTORIC_REP_HPP
#define EQTORIC_REP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqtoric/bundle.hpp"
#include "eqtoric/laurent.hpp"
#include "eqtoric/rational_matrix.hpp"

namespace eqtoric {

/**
 * Torus homomorphisms T -> GL_k written as Laurent-polynomial matrices
 * rho(t) = sum_m A_m chi^m(t).
 *
 * rho is a homomorphism exactly when the coefficient matrices are a complete
 * family of orthogonal idempotents: A_m A_m' = [m == m'] A_m and
 * sum_m A_m = I.  Comparing coefficients of rho(ts) = rho(t) rho(s) gives the
 * first identity and rho(1) = I the second.  The weights of rho are then read
 * off the exponents, so no eigenvalue problem is ever solved.
 */

/// A_m for every monomial chi^m occurring in rho.
std::map<Character, RationalMatrix> collect_weights(const LaurentMatrix& rho);

struct HomomorphismReport {
    bool ok = true;
    /// First violated identity, e.g. "A_(1,0) * A_(0,0) != 0"; empty when ok.
    std::string violation;
};

HomomorphismReport verify_homomorphism(const LaurentMatrix& rho);

struct Weight {
    Character character;
    RationalMatrix projector;
    std::size_t multiplicity;
};

/**
 * rho = g diag(chi^{w_1}, ..., chi^{w_k}) g^{-1}.  Weights are sorted
 * lexicographically; the columns of g are the reduced column echelon bases of
 * the projector images, concatenated in weight order.
 */
struct WeightDecomposition {
    std::vector<Weight> weights;
    RationalMatrix conjugator;
    RationalMatrix inverse_conjugator;

    /// w_1..w_k, the diagonal of g^{-1} rho g.
    std::vector<Character> diagonal() const;
};

/// Throws NotHomomorphism when verify_homomorphism fails.
WeightDecomposition split(const LaurentMatrix& rho);

/// g^{-1} rho g.
LaurentMatrix conjugate(const LaurentMatrix& rho, const RationalMatrix& g, const RationalMatrix& g_inverse);

/// A joint weight space V(l_1) n ... n V(l_m) of a commuting family.
struct JointWeightSpace {
    std::vector<Character> weights;  ///< one per homomorphism in the family
    RationalMatrix projector;
    std::size_t multiplicity;
};

struct JointDecomposition {
    std::vector<JointWeightSpace> spaces;  ///< lexicographic in the weight tuples
    RationalMatrix conjugator;
    RationalMatrix inverse_conjugator;
    /// diagonals[i] is the diagonal of g^{-1} rho_i g.
    std::vector<std::vector<Character>> diagonals;
};

/**
 * One conjugator diagonalizing every homomorphism of a family with
 * commuting images.  The joint weight spaces are the nonzero products
 * A^(1)_{l_1} ... A^(m)_{l_m} of the individual weight projectors.
 * Throws NotHomomorphism, ImagesDoNotCommute or DimensionMismatch.
 */
JointDecomposition joint_split(std::span<const LaurentMatrix> family);

struct SplitBundle {
    RationalMatrix conjugator;
    RationalMatrix inverse_conjugator;
    BundleData bundle;
};

/**
 * Reduces homomorphisms attached to the maximal cones (in fan order) to the
 * torus: one joint conjugator, and per cone the diagonal weights grouped into
 * the given blocks (each block must carry one repeated weight per cone; the
 * columns of the returned conjugator follow the block order).  Without
 * blocks every diagonal entry is its own block.  Throws ExtensionFails when
 * the weights do not glue, BlockMultiplicityMismatch when a block cannot be
 * filled with equal weights.
 */
SplitBundle split_to_bundle(FanPtr fan, std::span<const LaurentMatrix> per_cone,
                            const std::optional<BlockStructure>& blocks = std::nullopt);

struct RigidityReport {
    bool homomorphism = false;
    bool off_diagonal_zero = false;
    std::string violation;  ///< the failed projector identity, if any
};

/**
 * For a lower triangular one-variable matrix with a single repeated
 * diagonal entry: a homomorphism must be diagonal.  Returns
 * report.homomorphism; a homomorphism with a nonzero off-diagonal entry would
 * be a counterexample and raises std::logic_error.  Throws NotTriangular or
 * DiagonalEntriesDiffer on bad input.
 */
RigidityReport triangular_rigidity_check(const LaurentMatrix& rho);

struct LimitVerdict {
    /// f(zt) f(z)^{-1} in variables (z, t).
    LaurentMatrix quotient;
    /// No negative power of z in the quotient.
    bool limit_exists = false;
    /// The z^0 part of the quotient as a matrix in t (when the limit exists).
    LaurentMatrix limit;
    bool limit_is_identity = false;
    /// f has no negative powers of z and f(0) is invertible.
    bool extends = false;

    /// limit_is_identity implies extends.
    bool implication_holds() const { return !limit_is_identity || extends; }
};

/**
 * For f: C* -> GL_k given by a one-variable Laurent matrix with monomial
 * determinant: whether lim_{z->0} f(zt) f(z)^{-1} = I, and whether f extends
 * holomorphically over 0 with invertible value.  The first implies the
 * second.  Throws DetNotMonomial when det f is not c z^p.
 */
LimitVerdict monomial_limit_extension(const LaurentMatrix& f);

}  // namespace eqtoric

#endif
