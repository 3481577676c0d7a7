#include "eqtoric/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace eqtoric::io {

namespace {

// DOM builder that keeps out-of-range integer literals as strings instead
// of letting them decay to doubles.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<Json> {
public:
    using json_sax_dom_parser::json_sax_dom_parser;

    bool number_float(Json::number_float_t value, const std::string& literal) {
        if (is_integer_literal(literal)) return string(const_cast<std::string&>(literal));
        return json_sax_dom_parser::number_float(value, literal);
    }

private:
    static bool is_integer_literal(const std::string& s) {
        std::size_t i = s.size() > 0 && s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::Parse, (where.empty() ? std::string("document") : "field '" + where + "'") + ": " + what);
}

std::string join(const std::string& where, const std::string& key) {
    return where.empty() ? key : where + "." + key;
}

std::string index(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& where, const char* key) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(join(where, key), "missing");
    return *it;
}

const Json& array_field(const Json& j, const std::string& where, const char* key) {
    const Json& a = field(j, where, key);
    if (!a.is_array()) fail(join(where, key), "expected an array");
    return a;
}

std::string kind(const Json& j) {
    if (j.is_number_float()) return "a float (" + j.dump() + "); only exact integers are allowed";
    return std::string("a ") + j.type_name();
}

std::vector<Integer> integer_row(const Json& j, const std::string& where, std::size_t expected) {
    if (!j.is_array()) fail(where, "expected an array of integers, got " + kind(j));
    if (j.size() != expected)
        fail(where, "expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
    std::vector<Integer> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], index(where, i)));
    return out;
}

std::filesystem::path directory_of(const std::filesystem::path& path) {
    auto dir = path.parent_path();
    return dir.empty() ? std::filesystem::path(".") : dir;
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
    Json out;
    ExactSax sax(out);
    try {
        Json::sax_parse(text.begin(), text.end(), &sax);
    } catch (const Json::parse_error& e) {
        std::string what = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
        if (auto p = what.find("] "); p != std::string::npos) what = what.substr(p + 2);
        throw Error(ErrorCode::Parse, source + ": " + what);
    }
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path.string());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get_ref<const std::string&>());
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer, got " + kind(j));
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(integer_from_json(j, where));
    if (j.is_string()) {
        try {
            return parse_rational(j.get_ref<const std::string&>());
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected a rational \"p/q\" or an integer, got " + kind(j));
}

std::size_t size_from_json(const Json& j, const std::string& where) {
    const Integer v = integer_from_json(j, where);
    if (v < 0 || v > Integer(std::numeric_limits<std::int32_t>::max()))
        fail(where, "expected a nonnegative count, got " + v.str());
    return v.convert_to<std::size_t>();
}

Json to_json(const Integer& value) {
    if (value >= Integer(std::numeric_limits<std::int64_t>::min()) &&
        value <= Integer(std::numeric_limits<std::int64_t>::max()))
        return Json(value.convert_to<std::int64_t>());
    return Json(value.str());
}

Json to_json(const Rational& value) { return Json(eqtoric::to_string(value)); }

Fan fan_from_json(const Json& j, const std::string& where) {
    const std::size_t dim = size_from_json(field(j, where, "dim"), join(where, "dim"));
    const Json& rays_json = array_field(j, where, "rays");
    std::vector<LatticePoint> rays;
    for (std::size_t i = 0; i < rays_json.size(); ++i)
        rays.emplace_back(integer_row(rays_json[i], index(join(where, "rays"), i), dim));
    const Json& cones_json = array_field(j, where, "max_cones");
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t c = 0; c < cones_json.size(); ++c) {
        const std::string at = index(join(where, "max_cones"), c);
        if (!cones_json[c].is_array()) fail(at, "expected an array of ray indices, got " + kind(cones_json[c]));
        std::vector<std::size_t> ids;
        for (std::size_t k = 0; k < cones_json[c].size(); ++k) {
            const std::size_t id = size_from_json(cones_json[c][k], index(at, k));
            if (id >= rays.size()) fail(index(at, k), "ray index " + std::to_string(id) + " out of range");
            ids.push_back(id);
        }
        cones.push_back(std::move(ids));
    }
    return Fan(dim, std::move(rays), std::move(cones));
}

Json to_json(const Fan& fan) {
    Json rays = Json::array();
    for (const auto& v : fan.rays()) rays.push_back(to_json(v));
    Json cones = Json::array();
    for (const auto& c : fan.max_cones()) cones.push_back(c.rays());
    return Json{{"dim", fan.dim()}, {"rays", std::move(rays)}, {"max_cones", std::move(cones)}};
}

FanPtr read_fan(const std::filesystem::path& path) {
    return std::make_shared<const Fan>(fan_from_json(read_json_file(path)));
}

FanPtr fan_field_from_json(const Json& j, const std::filesystem::path& base_dir) {
    const Json& f = field(j, "", "fan");
    if (f.is_string()) {
        std::filesystem::path p = f.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        return read_fan(p);
    }
    if (f.is_object()) return std::make_shared<const Fan>(fan_from_json(f, "fan"));
    fail("fan", "expected a fan object or a path, got " + kind(f));
}

BlockStructure blocks_from_json(const Json& j, const std::string& where) {
    if (j.is_array()) {
        std::vector<std::size_t> parts;
        for (std::size_t i = 0; i < j.size(); ++i) {
            parts.push_back(size_from_json(j[i], index(where, i)));
            if (parts.back() == 0) fail(index(where, i), "block sizes must be positive");
        }
        if (parts.empty()) fail(where, "at least one block is required");
        return BlockStructure(std::move(parts));
    }
    const std::size_t r = size_from_json(j, where);
    if (r == 0) fail(where, "at least one block is required");
    return BlockStructure::torus(r);
}

Json to_json(const BlockStructure& blocks) { return Json(blocks.parts()); }

BundleData bundle_from_json(const Json& j, const std::filesystem::path& base_dir) {
    FanPtr fan = fan_field_from_json(j, base_dir);
    BlockStructure blocks = blocks_from_json(field(j, "", "blocks"), "blocks");
    const Json& chars_json = field(j, "", "chars");
    if (!chars_json.is_object()) fail("chars", "expected an object keyed by cone index");
    const std::size_t m = fan->max_cone_count();
    const std::size_t r = blocks.count();
    std::vector<std::vector<Character>> chars(m);
    std::vector<bool> seen(m, false);
    for (const auto& [key, value] : chars_json.items()) {
        const std::string at = "chars." + key;
        Integer parsed;
        try {
            parsed = parse_integer(key);
        } catch (const Error&) {
            fail(at, "cone keys must be decimal indices");
        }
        if (parsed < 0 || parsed >= Integer(m)) fail(at, "no maximal cone with index " + key);
        const std::size_t c = parsed.convert_to<std::size_t>();
        if (seen[c]) fail(at, "duplicate cone index");
        seen[c] = true;
        if (!value.is_array() || value.size() != r)
            fail(at, "expected " + std::to_string(r) + " characters, one per block");
        for (std::size_t i = 0; i < r; ++i) chars[c].emplace_back(integer_row(value[i], index(at, i), fan->dim()));
    }
    for (std::size_t c = 0; c < m; ++c)
        if (!seen[c]) fail("chars", "missing characters for cone " + std::to_string(c));
    return BundleData(std::move(fan), std::move(blocks), std::move(chars));
}

Json to_json(const BundleData& data) {
    Json chars = Json::object();
    for (std::size_t c = 0; c < data.chars().size(); ++c) {
        Json per_block = Json::array();
        for (const auto& m : data.chars()[c]) per_block.push_back(to_json(m));
        chars[std::to_string(c)] = std::move(per_block);
    }
    return Json{{"fan", to_json(data.fan())}, {"blocks", to_json(data.blocks())}, {"chars", std::move(chars)}};
}

BundleData read_bundle(const std::filesystem::path& path) {
    return bundle_from_json(read_json_file(path), directory_of(path));
}

RayValues ray_values_from_json(const Json& j, const std::filesystem::path& base_dir) {
    FanPtr fan = fan_field_from_json(j, base_dir);
    BlockStructure blocks = blocks_from_json(field(j, "", "blocks"), "blocks");
    const Json& values_json = array_field(j, "", "ray_values");
    if (values_json.size() != fan->ray_count())
        fail("ray_values", "expected one row per ray (" + std::to_string(fan->ray_count()) + "), got " +
                               std::to_string(values_json.size()));
    std::vector<std::vector<Integer>> values;
    for (std::size_t i = 0; i < values_json.size(); ++i)
        values.push_back(integer_row(values_json[i], index("ray_values", i), blocks.count()));
    return RayValues{std::move(fan), std::move(blocks), std::move(values)};
}

Json to_json(const RayValues& rv) {
    Json values = Json::array();
    for (const auto& row : rv.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        values.push_back(std::move(r));
    }
    // Torus blocks are written as the bare count r.
    Json blocks = rv.blocks == BlockStructure::torus(rv.blocks.count()) ? Json(rv.blocks.count()) : to_json(rv.blocks);
    return Json{{"fan", to_json(*rv.fan)}, {"blocks", std::move(blocks)}, {"ray_values", std::move(values)}};
}

RayValues read_ray_values(const std::filesystem::path& path) {
    return ray_values_from_json(read_json_file(path), directory_of(path));
}

LaurentMatrix laurent_matrix_from_json(const Json& j, const std::string& where) {
    const std::size_t vars = size_from_json(field(j, where, "vars"), join(where, "vars"));
    const std::size_t size = size_from_json(field(j, where, "size"), join(where, "size"));
    const Json& rows = array_field(j, where, "entries");
    const std::string at = join(where, "entries");
    if (rows.size() != size) fail(at, "expected " + std::to_string(size) + " rows, got " + std::to_string(rows.size()));
    LaurentMatrix m(size, vars);
    for (std::size_t i = 0; i < size; ++i) {
        const std::string row_at = index(at, i);
        if (!rows[i].is_array() || rows[i].size() != size)
            fail(row_at, "expected a row of " + std::to_string(size) + " term lists");
        for (std::size_t k = 0; k < size; ++k) {
            const std::string entry_at = index(row_at, k);
            const Json& terms = rows[i][k];
            if (!terms.is_array()) fail(entry_at, "expected a list of [exponent, coefficient] terms");
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string term_at = index(entry_at, t);
                if (!terms[t].is_array() || terms[t].size() != 2)
                    fail(term_at, "expected [exponent, coefficient]");
                Exponent e(integer_row(terms[t][0], index(term_at, 0), vars));
                m(i, k).add_term(e, rational_from_json(terms[t][1], index(term_at, 1)));
            }
        }
    }
    return m;
}

Json to_json(const LaurentMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.size(); ++k) {
            Json terms = Json::array();
            for (const auto& [e, c] : m(i, k).terms()) terms.push_back(Json::array({to_json(e), to_json(c)}));
            row.push_back(std::move(terms));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"vars", m.vars()}, {"size", m.size()}, {"entries", std::move(rows)}};
}

std::vector<LaurentMatrix> laurent_matrices_from_json(const Json& j) {
    std::vector<LaurentMatrix> out;
    if (j.is_object() && j.contains("matrices")) {
        const Json& list = array_field(j, "", "matrices");
        for (std::size_t i = 0; i < list.size(); ++i)
            out.push_back(laurent_matrix_from_json(list[i], index("matrices", i)));
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(laurent_matrix_from_json(j[i], index("", i)));
    } else {
        out.push_back(laurent_matrix_from_json(j));
    }
    if (out.empty()) fail("", "no matrices");
    return out;
}

RationalMatrix rational_matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) fail(index(where, i), "rows of unequal length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k], index(index(where, i), k));
    }
    return m;
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const TransitionCocycle& cocycle) {
    Json transitions = Json::array();
    for (const auto& [key, chars] : cocycle.transitions) {
        Json list = Json::array();
        for (const auto& e : chars) list.push_back(to_json(e));
        transitions.push_back(Json{{"to", key.first}, {"from", key.second}, {"chars", std::move(list)}});
    }
    return Json{{"fan", to_json(*cocycle.fan)}, {"blocks", cocycle.blocks}, {"transitions", std::move(transitions)}};
}

TransitionCocycle cocycle_from_json(const Json& j, const std::filesystem::path& base_dir) {
    TransitionCocycle c;
    c.fan = fan_field_from_json(j, base_dir);
    c.blocks = size_from_json(field(j, "", "blocks"), "blocks");
    const Json& list = array_field(j, "", "transitions");
    const std::size_t m = c.fan->max_cone_count();
    for (std::size_t t = 0; t < list.size(); ++t) {
        const std::string at = index("transitions", t);
        const std::size_t to = size_from_json(field(list[t], at, "to"), join(at, "to"));
        const std::size_t from = size_from_json(field(list[t], at, "from"), join(at, "from"));
        if (to >= m || from >= m) fail(at, "cone index out of range");
        const Json& chars = array_field(list[t], at, "chars");
        if (chars.size() != c.blocks) fail(join(at, "chars"), "expected one character per block");
        std::vector<Character> e;
        for (std::size_t i = 0; i < chars.size(); ++i)
            e.emplace_back(integer_row(chars[i], index(join(at, "chars"), i), c.fan->dim()));
        if (!c.transitions.emplace(std::make_pair(to, from), std::move(e)).second)
            fail(at, "duplicate transition");
    }
    return c;
}

}  // namespace eqtoric::io
