#include "eqtoric/rep.hpp"

#include <functional>
#include <stdexcept>

namespace eqtoric {

namespace {

std::string label(const Character& m) {
    std::string s = "A_(";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i) s += ",";
        s += m[i].str();
    }
    return s + ")";
}

bool is_diagonal_with(const LaurentMatrix& d, std::span<const Character> weights) {
    if (!d.is_diagonal()) return false;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!(d(i, i) == LaurentPoly::monomial(weights[i]))) return false;
    return true;
}

RationalMatrix permute_columns(const RationalMatrix& g, const std::vector<std::size_t>& order) {
    RationalMatrix out(g.rows(), order.size());
    for (std::size_t j = 0; j < order.size(); ++j)
        for (std::size_t i = 0; i < g.rows(); ++i) out(i, j) = g(i, order[j]);
    return out;
}

RationalMatrix permute_rows(const RationalMatrix& g, const std::vector<std::size_t>& order) {
    RationalMatrix out(order.size(), g.cols());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(order[i], j);
    return out;
}

}  // namespace

std::map<Character, RationalMatrix> collect_weights(const LaurentMatrix& rho) {
    std::map<Character, RationalMatrix> out;
    const std::size_t k = rho.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (const auto& [e, c] : rho(i, j).terms()) {
                auto it = out.try_emplace(e, k, k).first;
                it->second(i, j) = c;
            }
    return out;
}

HomomorphismReport verify_homomorphism(const LaurentMatrix& rho) {
    HomomorphismReport report;
    const auto weights = collect_weights(rho);
    const std::size_t k = rho.size();
    RationalMatrix sum(k, k);
    for (const auto& [m, a] : weights) sum += a;
    if (!(sum == RationalMatrix::identity(k))) {
        report.ok = false;
        report.violation = "sum of coefficient matrices != I";
        return report;
    }
    for (auto it = weights.begin(); it != weights.end(); ++it) {
        if (!(it->second * it->second == it->second)) {
            report.ok = false;
            report.violation = label(it->first) + "^2 != " + label(it->first);
            return report;
        }
        for (auto jt = weights.begin(); jt != weights.end(); ++jt) {
            if (jt == it) continue;
            if (!(it->second * jt->second).is_zero()) {
                report.ok = false;
                report.violation = label(it->first) + " * " + label(jt->first) + " != 0";
                return report;
            }
        }
    }
    return report;
}

std::vector<Character> WeightDecomposition::diagonal() const {
    std::vector<Character> d;
    for (const auto& w : weights)
        for (std::size_t i = 0; i < w.multiplicity; ++i) d.push_back(w.character);
    return d;
}

LaurentMatrix conjugate(const LaurentMatrix& rho, const RationalMatrix& g, const RationalMatrix& g_inverse) {
    return g_inverse * (rho * g);
}

WeightDecomposition split(const LaurentMatrix& rho) {
    const HomomorphismReport hom = verify_homomorphism(rho);
    if (!hom.ok) throw Error(ErrorCode::NotHomomorphism, "not a homomorphism: " + hom.violation);
    WeightDecomposition out;
    std::vector<RationalMatrix> bases;
    for (auto& [m, a] : collect_weights(rho)) {
        RationalMatrix basis = column_space_basis(a);
        out.weights.push_back({m, a, basis.cols()});
        bases.push_back(std::move(basis));
    }
    out.conjugator = hconcat(bases, rho.size());
    out.inverse_conjugator = inverse(out.conjugator);
    const auto diag = out.diagonal();
    if (!is_diagonal_with(conjugate(rho, out.conjugator, out.inverse_conjugator), diag))
        throw std::logic_error("weight decomposition failed to diagonalize");
    return out;
}

JointDecomposition joint_split(std::span<const LaurentMatrix> family) {
    if (family.empty()) throw Error(ErrorCode::DimensionMismatch, "empty family of homomorphisms");
    const std::size_t k = family.front().size();
    const std::size_t vars = family.front().vars();
    std::vector<std::map<Character, RationalMatrix>> weights;
    for (const auto& rho : family) {
        if (rho.size() != k || rho.vars() != vars)
            throw Error(ErrorCode::DimensionMismatch, "homomorphisms of different shapes");
        weights.push_back(collect_weights(rho));
    }
    // Commutation first: a family that is not abelian is rejected as such
    // even when some member also fails the homomorphism identities.
    for (std::size_t a = 0; a < weights.size(); ++a)
        for (std::size_t b = a + 1; b < weights.size(); ++b)
            for (const auto& [ma, pa] : weights[a])
                for (const auto& [mb, pb] : weights[b])
                    if (!(pa * pb == pb * pa))
                        throw Error(ErrorCode::ImagesDoNotCommute,
                                    "images do not commute: members " + std::to_string(a) + " and " +
                                        std::to_string(b));
    for (std::size_t i = 0; i < family.size(); ++i) {
        const HomomorphismReport hom = verify_homomorphism(family[i]);
        if (!hom.ok)
            throw Error(ErrorCode::NotHomomorphism,
                        "member " + std::to_string(i) + " is not a homomorphism: " + hom.violation);
    }

    std::vector<JointWeightSpace> spaces{{{}, RationalMatrix::identity(k), k}};
    for (const auto& w : weights) {
        std::vector<JointWeightSpace> refined;
        for (const auto& space : spaces)
            for (const auto& [m, a] : w) {
                RationalMatrix p = space.projector * a;
                if (p.is_zero()) continue;
                auto tuple = space.weights;
                tuple.push_back(m);
                refined.push_back({std::move(tuple), std::move(p), 0});
            }
        spaces = std::move(refined);
    }

    JointDecomposition out;
    std::vector<RationalMatrix> bases;
    for (auto& space : spaces) {
        RationalMatrix basis = column_space_basis(space.projector);
        space.multiplicity = basis.cols();
        bases.push_back(std::move(basis));
    }
    out.conjugator = hconcat(bases, k);
    out.inverse_conjugator = inverse(out.conjugator);
    out.diagonals.resize(family.size());
    for (const auto& space : spaces)
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t c = 0; c < space.multiplicity; ++c) out.diagonals[i].push_back(space.weights[i]);
    for (std::size_t i = 0; i < family.size(); ++i)
        if (!is_diagonal_with(conjugate(family[i], out.conjugator, out.inverse_conjugator), out.diagonals[i]))
            throw std::logic_error("joint conjugator failed to diagonalize member " + std::to_string(i));
    out.spaces = std::move(spaces);
    return out;
}

SplitBundle split_to_bundle(FanPtr fan, std::span<const LaurentMatrix> per_cone,
                            const std::optional<BlockStructure>& blocks) {
    if (!fan) throw Error(ErrorCode::MalformedFan, "no fan");
    if (per_cone.size() != fan->max_cone_count())
        throw Error(ErrorCode::MalformedBundle, "expected one homomorphism per maximal cone (" +
                                                    std::to_string(fan->max_cone_count()) + "), got " +
                                                    std::to_string(per_cone.size()));
    for (const auto& rho : per_cone)
        if (rho.vars() != fan->dim())
            throw Error(ErrorCode::DimensionMismatch, "homomorphism in " + std::to_string(rho.vars()) +
                                                          " variables on a fan of dimension " +
                                                          std::to_string(fan->dim()));
    const JointDecomposition joint = joint_split(per_cone);
    const std::size_t k = per_cone.front().size();
    const std::size_t cones = per_cone.size();

    if (!blocks) {
        std::vector<std::vector<Character>> chars(cones);
        for (std::size_t c = 0; c < cones; ++c) chars[c] = joint.diagonals[c];
        BundleData bundle(fan, BlockStructure::torus(k), std::move(chars));
        if (!check_extension(bundle).ok)
            throw Error(ErrorCode::ExtensionFails, "extension condition fails for the diagonalized characters");
        return {joint.conjugator, joint.inverse_conjugator, std::move(bundle)};
    }

    if (blocks->total() != k)
        throw Error(ErrorCode::MalformedBundle, "block sizes sum to " + std::to_string(blocks->total()) +
                                                    ", matrices have size " + std::to_string(k));
    // Assign each block to a joint weight space with room for it; the first
    // assignment found in (block, space) order wins.
    const auto& parts = blocks->parts();
    std::vector<std::size_t> room;
    std::vector<std::size_t> first_col;
    std::size_t col = 0;
    for (const auto& s : joint.spaces) {
        room.push_back(s.multiplicity);
        first_col.push_back(col);
        col += s.multiplicity;
    }
    std::vector<std::size_t> assignment(parts.size());
    std::function<bool(std::size_t)> assign = [&](std::size_t b) {
        if (b == parts.size()) return true;
        for (std::size_t s = 0; s < room.size(); ++s) {
            if (room[s] < parts[b]) continue;
            room[s] -= parts[b];
            assignment[b] = s;
            if (assign(b + 1)) return true;
            room[s] += parts[b];
        }
        return false;
    };
    if (!assign(0))
        throw Error(ErrorCode::BlockMultiplicityMismatch,
                    "block multiplicity mismatch: weights cannot be grouped into the requested blocks");

    std::vector<std::size_t> used(joint.spaces.size(), 0);
    std::vector<std::size_t> order;
    std::vector<std::vector<Character>> chars(cones);
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const std::size_t s = assignment[b];
        for (std::size_t j = 0; j < parts[b]; ++j) order.push_back(first_col[s] + used[s] + j);
        used[s] += parts[b];
        for (std::size_t c = 0; c < cones; ++c) chars[c].push_back(joint.spaces[s].weights[c]);
    }
    BundleData bundle(fan, *blocks, std::move(chars));
    if (!check_extension(bundle).ok)
        throw Error(ErrorCode::ExtensionFails, "extension condition fails for the diagonalized characters");
    return {permute_columns(joint.conjugator, order), permute_rows(joint.inverse_conjugator, order),
            std::move(bundle)};
}

RigidityReport triangular_rigidity_check(const LaurentMatrix& rho) {
    if (rho.vars() != 1) throw Error(ErrorCode::DimensionMismatch, "rigidity check needs a single variable");
    if (!rho.is_lower_triangular()) throw Error(ErrorCode::NotTriangular, "matrix is not lower triangular");
    for (std::size_t i = 1; i < rho.size(); ++i)
        if (!(rho(i, i) == rho(0, 0))) throw Error(ErrorCode::DiagonalEntriesDiffer, "diagonal entries differ");
    RigidityReport report;
    report.off_diagonal_zero = rho.is_diagonal();
    const HomomorphismReport hom = verify_homomorphism(rho);
    report.homomorphism = hom.ok;
    report.violation = hom.violation;
    if (report.homomorphism && !report.off_diagonal_zero)
        throw std::logic_error("triangular homomorphism with a nonzero off-diagonal entry");
    return report;
}

LimitVerdict monomial_limit_extension(const LaurentMatrix& f) {
    if (f.vars() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a one-variable Laurent matrix");
    const std::size_t k = f.size();
    const LaurentPoly det = f.determinant();
    if (!det.is_monomial()) throw Error(ErrorCode::DetNotMonomial, "det not monomial: f does not map C* into GL_k");
    const auto& [det_exp, det_coeff] = *det.terms().begin();
    const LaurentMatrix f_inverse = LaurentPoly::monomial(-det_exp, 1 / det_coeff) * f.adjugate();

    // Ring C[z^+-1, t^+-1]: z -> z t for f(zt), z -> z for f(z)^{-1}.
    const std::vector<Exponent> scaled{Exponent{1, 1}};
    const std::vector<Exponent> plain{Exponent{1, 0}};
    LimitVerdict v;
    v.quotient = f.substitute(scaled) * f_inverse.substitute(plain);

    v.limit_exists = true;
    for (std::size_t i = 0; i < k && v.limit_exists; ++i)
        for (std::size_t j = 0; j < k && v.limit_exists; ++j)
            for (const auto& [e, c] : v.quotient(i, j).terms())
                if (e[0] < 0) {
                    v.limit_exists = false;
                    break;
                }
    if (v.limit_exists) {
        v.limit = LaurentMatrix(k, 1);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (const auto& [e, c] : v.quotient(i, j).terms())
                    if (e[0] == 0) v.limit(i, j).add_term(Exponent(std::vector<Integer>{e[1]}), c);
        v.limit_is_identity = v.limit == LaurentMatrix::identity(k, 1);
    }

    bool polynomial = true;
    RationalMatrix at_zero(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (const auto& [e, c] : f(i, j).terms()) {
                if (e[0] < 0) polynomial = false;
                if (e[0] == 0) at_zero(i, j) = c;
            }
    v.extends = polynomial && determinant(at_zero) != 0;
    return v;
}

}  // namespace eqtoric
