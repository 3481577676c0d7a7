#include "eqtoric/cli.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "eqtoric/bundle.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/io.hpp"
#include "eqtoric/report.hpp"
#include "eqtoric/rep.hpp"

namespace eqtoric {

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = kDefaultCoverageSeed;
    std::string output;
};

// A report plus the file that --output writes (null when the command
// produces none).
struct Outcome {
    Report report;
    io::Json artifact;
};

template <class Tag>
std::string show(const IntVector<Tag>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

std::string show_ids(const std::vector<std::size_t>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "}";
}

std::string show_factors(const std::vector<Integer>& factors) {
    std::vector<std::string> nonunit;
    for (const auto& f : factors)
        if (f != 1) nonunit.push_back(f.str());
    std::string s = nonunit.size() == 1 ? "invariant factor " : "invariant factors ";
    for (std::size_t i = 0; i < nonunit.size(); ++i) s += (i ? ", " : "") + nonunit[i];
    return s;
}

std::string compact(const io::Json& j) { return j.dump(); }

BlockStructure parse_blocks(const std::string& text) {
    std::vector<std::size_t> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const Integer k = parse_integer(text.substr(start, comma - start));
        if (k < 1 || k > 1000000) throw Error(ErrorCode::Parse, "block sizes must be positive: '" + text + "'");
        parts.push_back(k.convert_to<std::size_t>());
        start = comma + 1;
    }
    // A single number is the torus block count r; a list gives block sizes.
    if (parts.size() == 1 && text.find(',') == std::string::npos) return BlockStructure::torus(parts[0]);
    return BlockStructure(std::move(parts));
}

std::string show_blocks(const BlockStructure& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.count(); ++i) s += (i ? "," : "") + std::to_string(b.parts()[i]);
    return s + ")";
}

std::filesystem::path parent_dir(const std::string& path) {
    auto dir = std::filesystem::path(path).parent_path();
    return dir.empty() ? std::filesystem::path(".") : dir;
}

std::vector<std::string> describe_bundle(const BundleData& b) {
    std::vector<std::string> lines;
    for (std::size_t c = 0; c < b.chars().size(); ++c) {
        std::string line = "cone " + std::to_string(c) + " " + show_ids(b.fan().max_cone(c).rays()) + ":";
        for (std::size_t i = 0; i < b.block_count(); ++i) line += " " + show(b.character(c, i));
        lines.push_back(line);
    }
    return lines;
}

void require_smooth(const Fan& fan) {
    if (!fan.smooth()) throw Error(ErrorCode::SingularFan, "singular fan: bundles need a smooth fan");
}

// Fails the report unless the fan is complete; returns whether it is.
bool completeness_gate(const Fan& fan, const Options& o, Report& r) {
    const CompletenessReport c = is_complete(fan, o.seed);
    if (c.complete) return true;
    r.status = Status::Fail;
    r.summary = "fan not complete";
    for (auto s : c.lower_dimensional)
        r.findings.push_back({"lower-dimensional", {s}, std::nullopt, "", "cone " + std::to_string(s) + " is not full-dimensional"});
    return false;
}

Outcome fan_check(const std::string& path, const Options& o) {
    Outcome out;
    Report& r = out.report;
    r.command = "fan check";
    const io::Json j = io::read_json_file(path);
    std::optional<Fan> fan;
    try {
        fan.emplace(io::fan_from_json(j));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAFan) throw;
        r.status = Status::Fail;
        r.summary = "valid: no";
        r.findings.push_back({"not-a-fan", {}, std::nullopt, "", e.what()});
        r.result = io::Json{{"valid", false}};
        return out;
    }

    const SmoothnessReport smooth = is_smooth(*fan);
    const CompletenessReport complete = is_complete(*fan, o.seed);

    std::string smooth_text = smooth.smooth ? "yes" : "no (";
    for (std::size_t k = 0; k < smooth.offending.size(); ++k) {
        const auto& s = smooth.offending[k];
        smooth_text += (k ? "; " : "") + std::string("cone ") + std::to_string(s.cone) + ", " +
                       show_factors(s.invariant_factors);
        std::string factors;
        for (std::size_t i = 0; i < s.invariant_factors.size(); ++i)
            factors += (i ? "," : "") + s.invariant_factors[i].str();
        r.findings.push_back({"singular-cone", {s.cone}, std::nullopt, factors,
                              "cone " + std::to_string(s.cone) + " " + show_ids(fan->max_cone(s.cone).rays()) +
                                  " is singular: " + show_factors(s.invariant_factors)});
    }
    if (!smooth.smooth) smooth_text += ")";
    r.summary = "smooth: " + smooth_text + ", complete: " + (complete.complete ? "yes" : "no");
    r.status = smooth.smooth ? Status::Pass : Status::Fail;

    r.details.push_back("valid: yes");
    r.details.push_back("dimension " + std::to_string(fan->dim()) + ", " + std::to_string(fan->ray_count()) +
                        " rays, " + std::to_string(fan->max_cone_count()) + " maximal cones");
    r.details.push_back("facets: " + std::to_string(complete.facet_count) + ", adjacency components: " +
                        std::to_string(complete.components));
    r.details.push_back("coverage: " + std::to_string(complete.samples) + " samples (seed " +
                        std::to_string(complete.seed) + "), " + std::to_string(complete.uncovered.size()) +
                        " uncovered");
    for (auto c : complete.lower_dimensional)
        r.findings.push_back({"lower-dimensional", {c}, std::nullopt, std::to_string(fan->max_cone(c).dim()),
                              "cone " + std::to_string(c) + " has dimension " +
                                  std::to_string(fan->max_cone(c).dim()) + " < " + std::to_string(fan->dim())});
    for (const auto& f : complete.unmatched_facets)
        r.findings.push_back({"unmatched-facet", f.cones, std::nullopt, show_ids(f.rays),
                              "facet " + show_ids(f.rays) + " lies in " + std::to_string(f.cones.size()) +
                                  " maximal cone(s)"});
    const std::size_t shown = std::min<std::size_t>(complete.uncovered.size(), 5);
    for (std::size_t k = 0; k < shown; ++k)
        r.findings.push_back({"uncovered", {}, std::nullopt, show(complete.uncovered[k]),
                              "direction " + show(complete.uncovered[k]) + " lies in no maximal cone"});

    io::Json singular = io::Json::array();
    for (const auto& s : smooth.offending) {
        io::Json factors = io::Json::array();
        for (const auto& f : s.invariant_factors) factors.push_back(io::to_json(f));
        singular.push_back(io::Json{{"cone", s.cone}, {"invariant_factors", std::move(factors)}});
    }
    io::Json unmatched = io::Json::array();
    for (const auto& f : complete.unmatched_facets)
        unmatched.push_back(io::Json{{"rays", f.rays}, {"cones", f.cones}});
    r.result = io::Json{{"valid", true},
                        {"smooth", smooth.smooth},
                        {"complete", complete.complete},
                        {"singular_cones", std::move(singular)},
                        {"lower_dimensional", complete.lower_dimensional},
                        {"unmatched_facets", std::move(unmatched)},
                        {"facet_count", complete.facet_count},
                        {"components", complete.components},
                        {"seed", complete.seed},
                        {"samples", complete.samples},
                        {"uncovered", complete.uncovered.size()}};
    return out;
}

void add_extension_findings(const BundleData& b, const ExtensionReport& e, Report& r) {
    for (const auto& v : e.violations) {
        const std::string block = "block " + std::to_string(v.block + 1);
        if (v.kind == ExtensionViolation::Kind::NotPerpendicular) {
            const Character diff = b.character(v.sigma, v.block) - b.character(v.tau, v.block);
            r.findings.push_back({"extension", {v.sigma, v.tau}, v.block, v.value.str(),
                                  "cones " + std::to_string(v.sigma) + " " +
                                      show_ids(b.fan().max_cone(v.sigma).rays()) + " and " + std::to_string(v.tau) +
                                      " " + show_ids(b.fan().max_cone(v.tau).rays()) + ", " + block +
                                      ": difference " + show(diff) + " pairs to " + v.value.str() +
                                      " with shared ray " + std::to_string(*v.ray) + " " + show(v.witness)});
        } else {
            r.findings.push_back({"not-factoring", {v.sigma}, v.block, v.value.str(),
                                  "cone " + std::to_string(v.sigma) + ", " + block + ": character " +
                                      show(b.character(v.sigma, v.block)) + " pairs to " + v.value.str() +
                                      " with complement vector " + show(v.witness)});
        }
    }
}

Outcome bundle_validate(const std::string& path, const Options&) {
    Outcome out;
    Report& r = out.report;
    r.command = "bundle validate";
    const BundleData b = io::read_bundle(path);
    const ExtensionReport e = check_extension(b);
    add_extension_findings(b, e, r);
    r.status = e.ok ? Status::Pass : Status::Fail;
    r.summary = e.ok ? "extension condition holds"
                     : "extension condition fails (" + std::to_string(e.violations.size()) + " violation" +
                           (e.violations.size() == 1 ? ")" : "s)");
    r.details.push_back(std::to_string(b.fan().max_cone_count()) + " maximal cones, blocks " +
                        show_blocks(b.blocks()));
    r.result = io::Json{{"extension", e.ok}, {"violations", e.violations.size()}};
    return out;
}

Outcome bundle_from_rays(const std::string& path, const std::vector<std::string>& values,
                         const std::string& blocks_text, const Options& o) {
    Outcome out;
    Report& r = out.report;
    r.command = "bundle from-rays";
    const io::Json j = io::read_json_file(path);
    std::optional<RayValues> rv;
    if (j.is_object() && j.contains("ray_values")) {
        if (!values.empty())
            throw Error(ErrorCode::DimensionMismatch, "arity mismatch: values given on the command line and in " + path);
        rv = io::ray_values_from_json(j, parent_dir(path));
        if (!blocks_text.empty() && !(parse_blocks(blocks_text) == rv->blocks))
            throw Error(ErrorCode::DimensionMismatch, "--blocks disagrees with the ray-value file");
    } else {
        auto fan = std::make_shared<const Fan>(io::fan_from_json(j));
        BlockStructure blocks = blocks_text.empty() ? BlockStructure::torus(1) : parse_blocks(blocks_text);
        const std::size_t d = fan->ray_count();
        const std::size_t k = blocks.count();
        if (values.size() != d * k)
            throw Error(ErrorCode::DimensionMismatch,
                        "arity mismatch: expected " + std::to_string(d) + " rays x " + std::to_string(k) +
                            " blocks = " + std::to_string(d * k) + " values (ray-major), got " +
                            std::to_string(values.size()));
        std::vector<std::vector<Integer>> table(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t b = 0; b < k; ++b) table[i].push_back(parse_integer(values[i * k + b]));
        rv = RayValues{std::move(fan), std::move(blocks), std::move(table)};
    }
    require_smooth(*rv->fan);
    if (!completeness_gate(*rv->fan, o, r)) return out;
    const BundleData b = from_ray_values(*rv);
    if (!check_extension(b).ok) throw std::logic_error("from_ray_values produced a non-gluing collection");
    r.status = Status::Pass;
    r.summary = "bundle on " + std::to_string(b.fan().max_cone_count()) + " maximal cones, blocks " +
                show_blocks(b.blocks());
    r.details = describe_bundle(b);
    out.artifact = io::to_json(b);
    r.result = out.artifact;
    return out;
}

Outcome bundle_to_rays(const std::string& path, const Options& o) {
    Outcome out;
    Report& r = out.report;
    r.command = "bundle to-rays";
    const BundleData b = io::read_bundle(path);
    const ExtensionReport e = check_extension(b);
    if (!e.ok) {
        add_extension_findings(b, e, r);
        r.status = Status::Fail;
        r.summary = "extension condition fails; no ray values";
        return out;
    }
    if (!completeness_gate(b.fan(), o, r)) return out;
    const RayValues rv = to_ray_values(b);
    r.status = Status::Pass;
    r.summary = "ray values for " + std::to_string(rv.values.size()) + " rays, " +
                std::to_string(rv.blocks.count()) + " block(s)";
    for (std::size_t i = 0; i < rv.values.size(); ++i) {
        std::string line = "ray " + std::to_string(i) + " " + show(b.fan().rays()[i]) + ":";
        for (const auto& v : rv.values[i]) line += " " + v.str();
        r.details.push_back(line);
    }
    out.artifact = io::to_json(rv);
    r.result = out.artifact;
    return out;
}

Outcome bundle_isom(const std::string& a_path, const std::string& b_path, const Options&) {
    Outcome out;
    Report& r = out.report;
    r.command = "bundle isom";
    const BundleData a = io::read_bundle(a_path);
    const BundleData b = io::read_bundle(b_path);
    const bool iso = is_isomorphic(a, b);
    r.status = iso ? Status::Pass : Status::Fail;
    r.summary = iso ? "isomorphic" : "not isomorphic";
    if (!iso)
        for (std::size_t c = 0; c < a.chars().size(); ++c)
            for (std::size_t i = 0; i < a.block_count(); ++i)
                if (a.character(c, i) != b.character(c, i))
                    r.findings.push_back({"character-differs", {c}, i,
                                          show(a.character(c, i)) + " vs " + show(b.character(c, i)),
                                          "cone " + std::to_string(c) + ", block " + std::to_string(i + 1) + ": " +
                                              show(a.character(c, i)) + " vs " + show(b.character(c, i))});
    r.result = io::Json{{"isomorphic", iso}};
    return out;
}

const char* cocycle_kind(CocycleViolation::Kind k) {
    switch (k) {
        case CocycleViolation::Kind::Missing: return "missing";
        case CocycleViolation::Kind::Triple: return "triple";
        case CocycleViolation::Kind::Antisymmetry: return "antisymmetry";
        case CocycleViolation::Kind::NotInvertible: return "not-invertible";
        case CocycleViolation::Kind::Equivariance: return "equivariance";
    }
    return "unknown";
}

Outcome bundle_cocycle(const std::string& path, const Options&) {
    Outcome out;
    Report& r = out.report;
    r.command = "bundle cocycle";
    const io::Json j = io::read_json_file(path);
    std::optional<BundleData> source;
    TransitionCocycle cocycle;
    if (j.is_object() && j.contains("transitions")) {
        cocycle = io::cocycle_from_json(j, parent_dir(path));
    } else {
        source.emplace(io::bundle_from_json(j, parent_dir(path)));
        cocycle = transition_cocycle(*source);
        out.artifact = io::to_json(cocycle);
    }
    const CocycleReport c = verify_cocycle(cocycle, source ? &*source : nullptr);
    for (const auto& v : c.violations) {
        std::vector<std::size_t> cones{v.first, v.second};
        std::string what = std::string(cocycle_kind(v.kind)) + " identity fails for (" + std::to_string(v.first) +
                           ", " + std::to_string(v.second);
        if (v.kind == CocycleViolation::Kind::Triple) {
            cones.push_back(v.third);
            what += ", " + std::to_string(v.third);
        }
        what += "), block " + std::to_string(v.block + 1);
        if (v.kind == CocycleViolation::Kind::Missing) what = "missing transition (" + std::to_string(v.first) + ", " + std::to_string(v.second) + ")";
        r.findings.push_back({cocycle_kind(v.kind), cones, v.block, "", what});
    }
    r.status = c.ok ? Status::Pass : Status::Fail;
    r.summary = c.ok ? "cocycle condition holds (" + std::to_string(cocycle.transitions.size()) + " transitions)"
                     : "cocycle condition fails (" + std::to_string(c.violations.size()) + " violations)";
    r.result = out.artifact.is_null() ? io::Json{{"cocycle", c.ok}} : out.artifact;
    return out;
}

Outcome classify_fan(const std::string& path, const std::string& blocks_text, const Options& o) {
    Outcome out;
    Report& r = out.report;
    r.command = "classify";
    FanPtr fan = io::read_fan(path);
    const BlockStructure blocks = parse_blocks(blocks_text);
    try {
        const Classification c = classify(fan, blocks, o.seed);
        r.status = Status::Pass;
        r.summary = "classes ≅ ℤ^" + std::to_string(c.rank);
        r.details.push_back(std::to_string(c.ray_count) + " rays, " + std::to_string(c.block_count) +
                            " blocks " + show_blocks(blocks) + ", rank " + std::to_string(c.rank));
        r.details.push_back("coordinates: the value of each block's support function on each ray");
        r.result = io::Json{{"rays", c.ray_count}, {"blocks", c.block_count}, {"rank", c.rank}};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::FanNotComplete && e.code() != ErrorCode::SingularFan) throw;
        r.status = Status::Fail;
        r.summary = std::string(error_code_name(e.code())) + " (" + e.what() + ")";
        r.result = io::Json{{"rank", nullptr}};
    }
    return out;
}

Outcome rep_split(const std::vector<std::string>& paths, const std::string& fan_path, const std::string& blocks_text,
                  const Options&) {
    Outcome out;
    Report& r = out.report;
    r.command = "rep split";
    std::vector<LaurentMatrix> family;
    for (const auto& p : paths)
        for (auto& m : io::laurent_matrices_from_json(io::read_json_file(p))) family.push_back(std::move(m));
    if (!blocks_text.empty() && fan_path.empty())
        throw Error(ErrorCode::DimensionMismatch, "--blocks needs --fan");

    if (!fan_path.empty()) {
        FanPtr fan = io::read_fan(fan_path);
        std::optional<BlockStructure> blocks;
        if (!blocks_text.empty()) blocks = parse_blocks(blocks_text);
        const SplitBundle s = split_to_bundle(fan, family, blocks);
        r.status = Status::Pass;
        r.summary = "reduced to the torus: bundle with blocks " + show_blocks(s.bundle.blocks());
        r.details.push_back("conjugator: " + compact(io::to_json(s.conjugator)));
        for (auto& line : describe_bundle(s.bundle)) r.details.push_back(line);
        out.artifact = io::to_json(s.bundle);
        r.result = io::Json{{"conjugator", io::to_json(s.conjugator)},
                            {"inverse_conjugator", io::to_json(s.inverse_conjugator)},
                            {"bundle", out.artifact}};
        return out;
    }

    if (family.size() == 1) {
        const WeightDecomposition w = split(family.front());
        io::Json weights = io::Json::array();
        std::string list;
        for (const auto& x : w.weights) {
            weights.push_back(io::Json{{"character", io::to_json(x.character)}, {"multiplicity", x.multiplicity}});
            list += (list.empty() ? "" : ", ") + show(x.character) + (x.multiplicity > 1 ? " x" + std::to_string(x.multiplicity) : "");
        }
        io::Json diagonal = io::Json::array();
        for (const auto& d : w.diagonal()) diagonal.push_back(io::to_json(d));
        r.status = Status::Pass;
        r.summary = "weights: " + list;
        r.details.push_back("conjugator: " + compact(io::to_json(w.conjugator)));
        r.details.push_back("diagonal: " + compact(diagonal));
        out.artifact = io::Json{{"conjugator", io::to_json(w.conjugator)},
                                {"inverse_conjugator", io::to_json(w.inverse_conjugator)},
                                {"weights", std::move(weights)},
                                {"diagonal", std::move(diagonal)}};
        r.result = out.artifact;
        return out;
    }

    const JointDecomposition jd = joint_split(family);
    io::Json spaces = io::Json::array();
    for (const auto& s : jd.spaces) {
        io::Json ws = io::Json::array();
        std::string line = "joint weight";
        for (const auto& w : s.weights) {
            ws.push_back(io::to_json(w));
            line += " " + show(w);
        }
        line += " multiplicity " + std::to_string(s.multiplicity);
        r.details.push_back(line);
        spaces.push_back(io::Json{{"weights", std::move(ws)}, {"multiplicity", s.multiplicity}});
    }
    io::Json diagonals = io::Json::array();
    for (const auto& d : jd.diagonals) {
        io::Json row = io::Json::array();
        for (const auto& w : d) row.push_back(io::to_json(w));
        diagonals.push_back(std::move(row));
    }
    r.status = Status::Pass;
    r.summary = "simultaneously diagonalized " + std::to_string(family.size()) + " homomorphisms, " +
                std::to_string(jd.spaces.size()) + " joint weight spaces";
    r.details.insert(r.details.begin(), "conjugator: " + compact(io::to_json(jd.conjugator)));
    out.artifact = io::Json{{"conjugator", io::to_json(jd.conjugator)},
                            {"inverse_conjugator", io::to_json(jd.inverse_conjugator)},
                            {"spaces", std::move(spaces)},
                            {"diagonals", std::move(diagonals)}};
    r.result = out.artifact;
    return out;
}

// Input, shape and precondition problems exit 2; everything else is a
// mathematical verdict and exits 1.
Status status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
        case ErrorCode::Io:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::MalformedFan:
        case ErrorCode::MalformedBundle:
        case ErrorCode::NotAFan:
        case ErrorCode::SingularFan:
            return Status::Error;
        default:
            return Status::Fail;
    }
}

int emit(const Outcome& o, const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.output.empty() && !o.artifact.is_null()) {
        try {
            io::write_file(opt.output, io::dump(o.artifact));
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }
    if (opt.format == "machine")
        out << io::dump(to_json(o.report));
    else
        out << render_text(o.report);
    return exit_code(o.report.status);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant principal bundles with abelian structure group on smooth toric varieties", "eqtoric"};
    app.require_subcommand(1);
    Options opt;
    std::function<Outcome()> action;
    std::string command_name;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--seed", opt.seed, "Seed of the completeness coverage sampler");
        sub->add_option("--output,-o", opt.output, "Write the produced file here");
    };

    std::string path, path_b, fan_path, blocks_text;
    std::vector<std::string> values, paths;

    auto* fan = app.add_subcommand("fan", "Fan commands")->require_subcommand(1);
    auto* fan_check_cmd = fan->add_subcommand("check", "Validity, smoothness and completeness of a fan file");
    fan_check_cmd->add_option("fan", path, "Fan file")->required();
    common(fan_check_cmd);
    fan_check_cmd->callback([&] {
        command_name = "fan check";
        action = [&] { return fan_check(path, opt); };
    });

    auto* bundle = app.add_subcommand("bundle", "Bundle commands")->require_subcommand(1);
    auto* validate = bundle->add_subcommand("validate", "Check the extension condition of a bundle file");
    validate->add_option("bundle", path, "Bundle file")->required();
    common(validate);
    validate->callback([&] {
        command_name = "bundle validate";
        action = [&] { return bundle_validate(path, opt); };
    });

    auto* from_rays = bundle->add_subcommand("from-rays", "Bundle from ray values (ray-major) or a ray-value file");
    from_rays->add_option("input", path, "Fan file or ray-value file")->required();
    from_rays->add_option("values", values, "Integer values, ray-major");
    from_rays->add_option("--blocks", blocks_text, "Block count r or block sizes k1,k2,...");
    common(from_rays);
    from_rays->callback([&] {
        command_name = "bundle from-rays";
        action = [&] { return bundle_from_rays(path, values, blocks_text, opt); };
    });

    auto* to_rays = bundle->add_subcommand("to-rays", "Ray values of a bundle file");
    to_rays->add_option("bundle", path, "Bundle file")->required();
    common(to_rays);
    to_rays->callback([&] {
        command_name = "bundle to-rays";
        action = [&] { return bundle_to_rays(path, opt); };
    });

    auto* isom = bundle->add_subcommand("isom", "Whether two bundle files are isomorphic");
    isom->add_option("first", path, "Bundle file")->required();
    isom->add_option("second", path_b, "Bundle file")->required();
    common(isom);
    isom->callback([&] {
        command_name = "bundle isom";
        action = [&] { return bundle_isom(path, path_b, opt); };
    });

    auto* cocycle = bundle->add_subcommand("cocycle", "Transition cocycle of a bundle, or verify a cocycle file");
    cocycle->add_option("input", path, "Bundle file or cocycle file")->required();
    common(cocycle);
    cocycle->callback([&] {
        command_name = "bundle cocycle";
        action = [&] { return bundle_cocycle(path, opt); };
    });

    auto* classify_cmd = app.add_subcommand("classify", "Rank of the lattice of bundle classes on a fan");
    classify_cmd->add_option("fan", path, "Fan file")->required();
    classify_cmd->add_option("blocks", blocks_text, "Block count r or block sizes k1,k2,...")->required();
    common(classify_cmd);
    classify_cmd->callback([&] {
        command_name = "classify";
        action = [&] { return classify_fan(path, blocks_text, opt); };
    });

    auto* rep = app.add_subcommand("rep", "Representation commands")->require_subcommand(1);
    auto* rep_split_cmd = rep->add_subcommand("split", "Diagonalize Laurent-matrix homomorphisms");
    rep_split_cmd->add_option("matrices", paths, "Laurent-matrix files")->required();
    rep_split_cmd->add_option("--fan", fan_path, "Fan file: one homomorphism per maximal cone, emit a bundle");
    rep_split_cmd->add_option("--blocks", blocks_text, "Block sizes k1,k2,... (with --fan)");
    common(rep_split_cmd);
    rep_split_cmd->callback([&] {
        command_name = "rep split";
        action = [&] { return rep_split(paths, fan_path, blocks_text, opt); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (!action) {
        err << "usage error: no command\n";
        return 2;
    }

    Outcome outcome;
    try {
        outcome = action();
    } catch (const Error& e) {
        outcome.report.command = command_name;
        outcome.report.status = status_for(e.code());
        outcome.report.summary = std::string(outcome.report.status == Status::Error ? "error: " : "") + e.what();
        outcome.report.findings.push_back({error_code_name(e.code()), {}, std::nullopt, "", e.what()});
    }
    if (outcome.report.status == Status::Error && opt.format != "machine") {
        err << outcome.report.summary << "\n";
        return 2;
    }
    return emit(outcome, opt, out, err);
}

}  // namespace eqtoric
