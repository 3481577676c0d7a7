#ifndef EQTORIC_IO_HPP
#define EQTORIC_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eqtoric/bundle.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/laurent.hpp"
#include "eqtoric/rational_matrix.hpp"

namespace eqtoric::io {

using Json = nlohmann::ordered_json;

/**
 * Parses JSON text.  Integer literals outside the 64-bit range are kept as
 * decimal strings so they survive exactly; float literals are kept as floats
 * and rejected later by the field readers.  Syntax errors become
 * Error(Parse) carrying `source` and the line and column.
 */
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

// Field readers.  `where` is the field path used in diagnostics, e.g.
// "rays[2][0]".
Integer integer_from_json(const Json& j, const std::string& where);
Rational rational_from_json(const Json& j, const std::string& where);
std::size_t size_from_json(const Json& j, const std::string& where);

/// Integers that fit in 64 bits are native numbers, larger ones strings.
Json to_json(const Integer& value);
/// "p/q", or "p" when integral.
Json to_json(const Rational& value);

template <class Tag>
Json to_json(const IntVector<Tag>& v) {
    Json out = Json::array();
    for (const auto& x : v.coords()) out.push_back(to_json(x));
    return out;
}

// {"dim": n, "rays": [[...]], "max_cones": [[...]]}
Fan fan_from_json(const Json& j, const std::string& where = "");
Json to_json(const Fan& fan);
FanPtr read_fan(const std::filesystem::path& path);

/// The "fan" field of a bundle or ray-value file: an inline fan object or
/// a path resolved against `base_dir`.
FanPtr fan_field_from_json(const Json& j, const std::filesystem::path& base_dir);

// {"fan": ..., "blocks": [k...], "chars": {"<cone>": [[m]...]}}
BundleData bundle_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json to_json(const BundleData& data);
BundleData read_bundle(const std::filesystem::path& path);

// {"fan": ..., "blocks": r or [k...], "ray_values": [[v per block] per ray]}
RayValues ray_values_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json to_json(const RayValues& rv);
RayValues read_ray_values(const std::filesystem::path& path);

/// "blocks": r (torus blocks) or a list of block sizes.
BlockStructure blocks_from_json(const Json& j, const std::string& where);
Json to_json(const BlockStructure& blocks);

// {"vars": n, "size": k, "entries": [[[[exp...], "num/den"], ...] per entry]}
// with entries given as k rows of k term lists.
LaurentMatrix laurent_matrix_from_json(const Json& j, const std::string& where = "");
Json to_json(const LaurentMatrix& m);
/// A single matrix object, an array of them, or {"matrices": [...]}.
std::vector<LaurentMatrix> laurent_matrices_from_json(const Json& j);

RationalMatrix rational_matrix_from_json(const Json& j, const std::string& where);
Json to_json(const RationalMatrix& m);

// {"fan": ..., "blocks": r, "transitions": [{"to": t, "from": s, "chars": [[e]...]}]}
Json to_json(const TransitionCocycle& cocycle);
TransitionCocycle cocycle_from_json(const Json& j, const std::filesystem::path& base_dir = {});

}  // namespace eqtoric::io

#endif
