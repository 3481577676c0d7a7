#include "eqtoric/bundle.hpp"

#include <numeric>
#include <string>

namespace eqtoric {

BlockStructure::BlockStructure(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::MalformedBundle, "block structure needs at least one block");
    for (auto k : parts_)
        if (k == 0) throw Error(ErrorCode::MalformedBundle, "block sizes must be positive");
}

BlockStructure BlockStructure::torus(std::size_t r) { return BlockStructure(std::vector<std::size_t>(r, 1)); }

std::size_t BlockStructure::total() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

BundleData::BundleData(FanPtr fan, BlockStructure blocks, std::vector<std::vector<Character>> chars)
    : fan_(std::move(fan)), blocks_(std::move(blocks)), chars_(std::move(chars)) {
    if (!fan_) throw Error(ErrorCode::MalformedBundle, "bundle without a fan");
    if (!fan_->smooth()) throw Error(ErrorCode::SingularFan, "bundle data requires a smooth fan");
    if (chars_.size() != fan_->max_cone_count())
        throw Error(ErrorCode::MalformedBundle, "expected characters for " + std::to_string(fan_->max_cone_count()) +
                                                    " maximal cones, got " + std::to_string(chars_.size()));
    for (std::size_t c = 0; c < chars_.size(); ++c) {
        if (chars_[c].size() != blocks_.count())
            throw Error(ErrorCode::MalformedBundle, "cone " + std::to_string(c) + " has " +
                                                        std::to_string(chars_[c].size()) + " characters, expected " +
                                                        std::to_string(blocks_.count()));
        for (const auto& m : chars_[c])
            if (m.dim() != fan_->dim())
                throw Error(ErrorCode::MalformedBundle, "cone " + std::to_string(c) + " has a character of dimension " +
                                                            std::to_string(m.dim()));
    }
}

BundleData BundleData::trivial(FanPtr fan, BlockStructure blocks, std::vector<Character> global) {
    if (!fan) throw Error(ErrorCode::MalformedBundle, "bundle without a fan");
    const std::size_t m = fan->max_cone_count();
    std::vector<std::vector<Character>> chars(m, global);
    return BundleData(std::move(fan), std::move(blocks), std::move(chars));
}

BundleData BundleData::zero(FanPtr fan, BlockStructure blocks) {
    if (!fan) throw Error(ErrorCode::MalformedBundle, "bundle without a fan");
    std::vector<Character> global(blocks.count(), Character(fan->dim()));
    return trivial(std::move(fan), std::move(blocks), std::move(global));
}

BundleData BundleData::inverse() const {
    auto chars = chars_;
    for (auto& row : chars)
        for (auto& m : row) m = -m;
    return BundleData(fan_, blocks_, std::move(chars));
}

bool same_fan(const Fan& a, const Fan& b) { return &a == &b || a == b; }

bool operator==(const BundleData& a, const BundleData& b) {
    return same_fan(*a.fan_, *b.fan_) && a.blocks_ == b.blocks_ && a.chars_ == b.chars_;
}

bool operator==(const RayValues& a, const RayValues& b) {
    return same_fan(*a.fan, *b.fan) && a.blocks == b.blocks && a.values == b.values;
}

ExtensionReport check_extension(const BundleData& data) {
    ExtensionReport report;
    const Fan& fan = data.fan();
    const std::size_t m = fan.max_cone_count();
    const std::size_t r = data.block_count();
    for (std::size_t s = 0; s < m; ++s) {
        if (fan.max_cone(s).dim() == fan.dim()) continue;
        const StabilizerSplitting split = stabilizer_splitting(fan.max_cone(s));
        for (std::size_t i = 0; i < r; ++i)
            for (const auto& w : split.complement) {
                Integer value = pairing(data.character(s, i), w);
                if (value != 0)
                    report.violations.push_back(
                        {ExtensionViolation::Kind::NotFactoring, s, s, i, w, std::nullopt, std::move(value)});
            }
    }
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t) {
            const Cone& face = fan.common_face(s, t);
            for (std::size_t i = 0; i < r; ++i) {
                const Character diff = data.character(s, i) - data.character(t, i);
                for (std::size_t j = 0; j < face.dim(); ++j) {
                    Integer value = pairing(diff, face.generators()[j]);
                    if (value != 0)
                        report.violations.push_back({ExtensionViolation::Kind::NotPerpendicular, s, t, i,
                                                     face.generators()[j], face.rays()[j], std::move(value)});
                }
            }
        }
    report.ok = report.violations.empty();
    return report;
}

BundleData from_ray_values(const RayValues& rv) {
    if (!rv.fan) throw Error(ErrorCode::MalformedBundle, "ray values without a fan");
    const Fan& fan = *rv.fan;
    const std::size_t r = rv.blocks.count();
    if (!fan.smooth()) throw Error(ErrorCode::SingularFan, "ray values require a smooth fan");
    if (rv.values.size() != fan.ray_count())
        throw Error(ErrorCode::MalformedBundle, "expected values for " + std::to_string(fan.ray_count()) +
                                                    " rays, got " + std::to_string(rv.values.size()));
    for (std::size_t ray = 0; ray < rv.values.size(); ++ray)
        if (rv.values[ray].size() != r)
            throw Error(ErrorCode::MalformedBundle, "ray " + std::to_string(ray) + " has " +
                                                        std::to_string(rv.values[ray].size()) + " values, expected " +
                                                        std::to_string(r));
    std::vector<std::vector<Character>> chars(fan.max_cone_count());
    for (std::size_t c = 0; c < fan.max_cone_count(); ++c) {
        const Cone& cone = fan.max_cone(c);
        if (cone.dim() != fan.dim())
            throw Error(ErrorCode::FanNotComplete,
                        "maximal cone " + std::to_string(c) + " is not full-dimensional");
        // The dual basis is cached by the fan; sum_j a_j m_j is the dual solve.
        const auto& dual = fan.cone_dual_basis(c);
        chars[c].reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            Character m(fan.dim());
            for (std::size_t j = 0; j < cone.dim(); ++j) {
                const Integer& a = rv.values[cone.rays()[j]][i];
                if (a != 0) m += a * dual[j];
            }
            chars[c].push_back(std::move(m));
        }
    }
    return BundleData(rv.fan, rv.blocks, std::move(chars));
}

RayValues to_ray_values(const BundleData& data) {
    const Fan& fan = data.fan();
    const std::size_t r = data.block_count();
    RayValues rv{data.fan_ptr(), data.blocks(), {}};
    rv.values.resize(fan.ray_count());
    for (std::size_t ray = 0; ray < fan.ray_count(); ++ray) {
        const auto& cones = fan.cones_with_ray(ray);
        const LatticePoint& v = fan.rays()[ray];
        rv.values[ray].reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            Integer value = pairing(data.character(cones.front(), i), v);
            for (std::size_t k = 1; k < cones.size(); ++k)
                if (pairing(data.character(cones[k], i), v) != value)
                    throw Error(ErrorCode::Inconsistent,
                                "cones " + std::to_string(cones.front()) + " and " + std::to_string(cones[k]) +
                                    " disagree on ray " + std::to_string(ray) + " in block " + std::to_string(i));
            rv.values[ray].push_back(std::move(value));
        }
    }
    return rv;
}

namespace {

void require_comparable(const BundleData& a, const BundleData& b) {
    if (!same_fan(a.fan(), b.fan())) throw Error(ErrorCode::Incomparable, "bundles live on different fans");
    if (!(a.blocks() == b.blocks())) throw Error(ErrorCode::Incomparable, "bundles have different block structures");
}

}  // namespace

bool is_isomorphic(const BundleData& a, const BundleData& b) {
    require_comparable(a, b);
    return a.chars() == b.chars();
}

BundleData tensor(const BundleData& a, const BundleData& b) {
    require_comparable(a, b);
    auto chars = a.chars();
    for (std::size_t c = 0; c < chars.size(); ++c)
        for (std::size_t i = 0; i < chars[c].size(); ++i) chars[c][i] += b.character(c, i);
    return BundleData(a.fan_ptr(), a.blocks(), std::move(chars));
}

std::vector<Character> induced_on_face(const BundleData& data, const Cone& face) {
    const auto cones = data.fan().cones_containing(face);
    if (cones.empty() || face.ambient_dim() != data.fan().dim())
        throw Error(ErrorCode::NotAFace, "cone is not a face of any maximal cone");
    std::vector<Character> out;
    out.reserve(data.block_count());
    for (std::size_t i = 0; i < data.block_count(); ++i) {
        Character chi(face.dim());
        for (std::size_t j = 0; j < face.dim(); ++j) chi[j] = pairing(data.character(cones.front(), i), face.generators()[j]);
        for (std::size_t k = 1; k < cones.size(); ++k)
            for (std::size_t j = 0; j < face.dim(); ++j)
                if (pairing(data.character(cones[k], i), face.generators()[j]) != chi[j])
                    throw Error(ErrorCode::Inconsistent, "cones " + std::to_string(cones.front()) + " and " +
                                                             std::to_string(cones[k]) + " induce different characters");
        out.push_back(std::move(chi));
    }
    return out;
}

const std::vector<Character>& TransitionCocycle::at(std::size_t tau, std::size_t sigma) const {
    auto it = transitions.find({tau, sigma});
    if (it == transitions.end())
        throw Error(ErrorCode::MalformedBundle,
                    "no transition for (" + std::to_string(tau) + ", " + std::to_string(sigma) + ")");
    return it->second;
}

TransitionCocycle transition_cocycle(const BundleData& data) {
    const ExtensionReport ext = check_extension(data);
    if (!ext.ok) throw Error(ErrorCode::ExtensionFails, "collection violates the extension condition");
    TransitionCocycle c{data.fan_ptr(), data.block_count(), {}};
    const std::size_t m = data.fan().max_cone_count();
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < m; ++s) {
            std::vector<Character> e;
            e.reserve(c.blocks);
            for (std::size_t i = 0; i < c.blocks; ++i) e.push_back(data.character(t, i) - data.character(s, i));
            c.transitions.emplace(std::make_pair(t, s), std::move(e));
        }
    return c;
}

CocycleReport verify_cocycle(const TransitionCocycle& cocycle, const BundleData* source) {
    using Kind = CocycleViolation::Kind;
    CocycleReport report;
    const std::size_t m = cocycle.fan->max_cone_count();
    const std::size_t r = cocycle.blocks;
    const std::size_t n = cocycle.fan->dim();

    // A transition is usable when present with r characters of dimension n.
    std::vector<const std::vector<Character>*> table(m * m, nullptr);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < m; ++s) {
            auto it = cocycle.transitions.find({t, s});
            bool good = it != cocycle.transitions.end() && it->second.size() == r;
            if (good)
                for (const auto& e : it->second) good = good && e.dim() == n;
            if (good)
                table[t * m + s] = &it->second;
            else
                report.violations.push_back({Kind::Missing, t, s, 0, 0});
        }
    auto e = [&](std::size_t t, std::size_t s) { return table[t * m + s]; };

    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t s = 0; s < m; ++s) {
                if (!e(g, s) || !e(g, t) || !e(t, s)) continue;
                for (std::size_t i = 0; i < r; ++i)
                    if ((*e(g, s))[i] != (*e(g, t))[i] + (*e(t, s))[i])
                        report.violations.push_back({Kind::Triple, g, t, s, i});
            }
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = t; s < m; ++s) {
            if (!e(t, s) || !e(s, t)) continue;
            for (std::size_t i = 0; i < r; ++i)
                if ((*e(s, t))[i] != -(*e(t, s))[i]) report.violations.push_back({Kind::Antisymmetry, t, s, 0, i});
        }
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < m; ++s) {
            if (!e(t, s)) continue;
            const Cone& face = cocycle.fan->common_face(t, s);
            for (std::size_t i = 0; i < r; ++i)
                if (!perp_contains(face, (*e(t, s))[i])) report.violations.push_back({Kind::NotInvertible, t, s, 0, i});
        }
    if (source) {
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t s = 0; s < m; ++s) {
                if (!e(t, s)) continue;
                for (std::size_t i = 0; i < r && i < source->block_count(); ++i)
                    if ((*e(t, s))[i] != source->character(t, i) - source->character(s, i))
                        report.violations.push_back({Kind::Equivariance, t, s, 0, i});
            }
    }
    report.ok = report.violations.empty();
    return report;
}

Classification classify(FanPtr fan, BlockStructure blocks, std::uint64_t seed) {
    if (!fan) throw Error(ErrorCode::MalformedFan, "no fan");
    if (!fan->smooth()) throw Error(ErrorCode::SingularFan, "classification requires a smooth fan");
    const CompletenessReport complete = is_complete(*fan, seed);
    if (!complete.complete)
        throw Error(ErrorCode::FanNotComplete, "classification by ray values requires a complete fan");
    const std::size_t d = fan->ray_count();
    const std::size_t r = blocks.count();
    return Classification{std::move(fan), std::move(blocks), d, r, d * r};
}

}  // namespace eqtoric
