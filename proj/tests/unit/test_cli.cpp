#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "eqtoric/cli.hpp"
#include "eqtoric/io.hpp"
#include "eqtoric/report.hpp"
#include "testkit.hpp"

using namespace eqtoric;
using namespace testkit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Report machine(std::vector<std::string> args, int expected_code) {
    args.push_back("--format");
    args.push_back("machine");
    const Run r = run(std::move(args));
    CHECK(r.code == expected_code);
    return report_from_json(io::parse_json(r.out));
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("eqtoric_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("report JSON round trip") {
    Report r{"fan check", Status::Fail, "smooth: no", {"dims: 2"}, {}, io::Json::object()};
    r.findings.push_back({"singular-cone", {0}, std::nullopt, "2", "cone 0"});
    r.findings.push_back({"extension", {0, 1}, 1, "-1", "block 1"});
    CHECK(report_from_json(io::parse_json(io::dump(to_json(r)))) == r);
    io::Json j = to_json(r);
    j["exit_code"] = 0;
    CHECK_THROWS_AS(report_from_json(j), Error);
}

TEST_CASE("fan check") {
    for (const char* f : {"p1.json", "p2.json", "p1xp1.json", "hirzebruch0.json", "hirzebruch3.json"}) {
        const Run r = run({"fan", "check", data_path(f)});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "smooth: yes, complete: yes"));
    }
    const Report singular = machine({"fan", "check", data_path("singular_cone.json")}, 1);
    CHECK(singular.status == Status::Fail);
    CHECK(contains(singular.summary, "invariant factor 2"));
    const Report quadrant = machine({"fan", "check", data_path("quadrant.json")}, 0);
    CHECK(contains(quadrant.summary, "complete: no"));
    const Run truncated = run({"fan", "check", data_path("truncated_fan.json")});
    CHECK(truncated.code == 2);
    CHECK(contains(truncated.err, "line "));
}

TEST_CASE("bundle validate") {
    CHECK(run({"bundle", "validate", data_path("p2_trivial_bundle.json")}).code == 0);
    const Report bad = machine({"bundle", "validate", data_path("p2_counterexample_bundle.json")}, 1);
    REQUIRE_FALSE(bad.findings.empty());
    CHECK(bad.findings[0].kind == "extension");
    CHECK(bad.findings[0].cones == std::vector<std::size_t>{0, 1});
    CHECK(bad.findings[0].block == std::size_t{0});
    CHECK(run({"bundle", "validate", data_path("singular_fan_bundle.json")}).code == 2);
}

TEST_CASE("bundle from-rays and to-rays round trip") {
    const auto bundle_path = temp_file("bundle.json");
    const auto rays_path = temp_file("rays.json");
    CHECK(run({"bundle", "from-rays", data_path("p2.json"), "1", "0", "0", "-o", bundle_path.string()}).code == 0);
    const BundleData b = io::read_bundle(bundle_path);
    CHECK(b.character(2, 0) == character({1, -1}));
    CHECK(run({"bundle", "to-rays", bundle_path.string(), "-o", rays_path.string()}).code == 0);
    const RayValues rv = io::read_ray_values(rays_path);
    CHECK(rv.values == std::vector<std::vector<Integer>>{{Integer(1)}, {Integer(0)}, {Integer(0)}});
    std::filesystem::remove(bundle_path);
    std::filesystem::remove(rays_path);

    CHECK(run({"bundle", "from-rays", data_path("p2.json"), "1", "0"}).code == 2);
    CHECK(run({"bundle", "from-rays", data_path("quadrant.json"), "1", "0"}).code == 1);
    CHECK(run({"bundle", "from-rays", data_path("p1.json"), "-1", "2"}).code == 0);
}

TEST_CASE("bundle isom and cocycle") {
    const auto p = data_path("p2_trivial_bundle.json");
    const Report same = machine({"bundle", "isom", p, p}, 0);
    CHECK(same.summary == "isomorphic");
    const Report cocycle = machine({"bundle", "cocycle", p}, 0);
    CHECK(cocycle.status == Status::Pass);
}

TEST_CASE("classify") {
    const Report p2r3 = machine({"classify", data_path("p2.json"), "3"}, 0);
    CHECK(contains(p2r3.summary, "^9"));
    const Report f2 = machine({"classify", data_path("hirzebruch2.json"), "2"}, 0);
    CHECK(contains(f2.summary, "^8"));
    const Report quadrant = machine({"classify", data_path("quadrant.json"), "1"}, 1);
    CHECK(contains(quadrant.summary, "fan not complete"));
}

TEST_CASE("rep split") {
    const Report r = machine({"rep", "split", data_path("rep_conjugated.json")}, 0);
    CHECK(contains(r.summary + "\n" + io::dump(r.result), "(1,1)"));
    CHECK(run({"rep", "split", data_path("rep_conjugated.json"), "--blocks", "2"}).code != 0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code != 0);
    CHECK(run({"fan", "check"}).code != 0);
    CHECK(run({"bogus"}).code != 0);
    CHECK(run({"fan", "check", data_path("does_not_exist.json")}).code == 2);
}

}  // TEST_SUITE
