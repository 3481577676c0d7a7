// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqtoric/cli.hpp"
#include "testkit.hpp"

using namespace eqtoric;
using namespace testkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

struct NamedFan {
    std::string name;
    FanPtr fan;
};

std::vector<NamedFan> parametrization_fans() {
    return {{"P1", p1()}, {"P2", p2()}, {"P1xP1", p1xp1()}, {"F2", hirzebruch(2)}};
}

// Calls f on the ray-value vectors of the box [-2,2]^len: all of them when
// there are at most 5^6, otherwise 10^4 seeded samples.
template <class F>
std::size_t for_each_ray_vector(std::size_t len, Rng& rng, F&& f) {
    constexpr std::size_t exhaustive_limit = 15625;
    std::size_t points = 1;
    for (std::size_t i = 0; i < len && points <= exhaustive_limit; ++i) points *= 5;
    if (points <= exhaustive_limit) {
        for_each_box_point(len, 2, f);
        return points;
    }
    std::vector<long> v(len);
    for (int s = 0; s < 10000; ++s) {
        for (auto& x : v) x = uniform(rng, -2, 2);
        f(v);
    }
    return 10000;
}

RayValues ray_values(const FanPtr& fan, std::size_t r, const std::vector<long>& flat) {
    RayValues rv{fan, BlockStructure::torus(r), {}};
    for (std::size_t ray = 0; ray < fan->rays().size(); ++ray) {
        std::vector<Integer> row;
        for (std::size_t b = 0; b < r; ++b) row.emplace_back(flat[ray * r + b]);
        rv.values.push_back(std::move(row));
    }
    return rv;
}

Outcome parametrization() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    std::size_t cases = 0, failures = 0;
    for (const auto& [name, fan] : parametrization_fans())
        for (std::size_t r = 1; r <= 3; ++r)
            cases += for_each_ray_vector(fan->rays().size() * r, rng, [&](const std::vector<long>& flat) {
                const RayValues rv = ray_values(fan, r, flat);
                const BundleData b = from_ray_values(rv);
                if (!(to_ray_values(b) == rv) || !(from_ray_values(to_ray_values(b)) == b) ||
                    !check_extension(b).ok || !reproduces_ray_values(b, rv.values))
                    ++failures;
            });
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream note;
    note << cases << " cases, " << failures << " failures, " << seconds << " s";
    return {failures == 0 && seconds < 10.0, note.str()};
}

Outcome extension_oracle_agreement() {
    std::size_t cases = 0, disagreements = 0;
    for (const FanPtr& fan : {p2(), hirzebruch(2)}) {
        const std::size_t cones = fan->max_cone_count();
        for_each_box_point(2 * cones, 1, [&](const std::vector<long>& flat) {
            std::vector<std::vector<Character>> chars;
            for (std::size_t c = 0; c < cones; ++c) chars.push_back({character({flat[2 * c], flat[2 * c + 1]})});
            const BundleData b(fan, BlockStructure::torus(1), std::move(chars));
            ++cases;
            if (check_extension(b).ok != extension_oracle(b)) ++disagreements;
        });
    }
    return {disagreements == 0, std::to_string(cases) + " collections, " + std::to_string(disagreements) + " disagreements"};
}

Outcome splitting_round_trip() {
    Rng rng(1003);
    int failures = 0;
    for (int c = 0; c < 100; ++c) {
        const std::size_t k = uniform(rng, 1, 4), n = uniform(rng, 1, 3);
        const RationalMatrix g = to_rational(random_unimodular(rng, k, 3));
        std::vector<LaurentMatrix> family;
        std::vector<std::vector<Character>> weights;
        for (int m = 0; m < 2; ++m) {
            std::vector<Character> w;
            for (std::size_t i = 0; i < k; ++i) w.push_back(random_character(rng, n, 2));
            family.push_back(conjugated_diagonal(g, w));
            weights.push_back(std::move(w));
        }
        bool ok = true;
        const WeightDecomposition d = split(family[0]);
        ok = ok && multiset(d.diagonal()) == multiset(weights[0]);
        ok = ok && d.conjugator * d.inverse_conjugator == RationalMatrix::identity(k);
        ok = ok && conjugate(family[0], d.conjugator, d.inverse_conjugator) == LaurentMatrix::diagonal(d.diagonal());
        const JointDecomposition j = joint_split(family);
        for (int m = 0; m < 2; ++m) {
            ok = ok && multiset(j.diagonals[m]) == multiset(weights[m]);
            ok = ok && conjugate(family[m], j.conjugator, j.inverse_conjugator) ==
                           LaurentMatrix::diagonal(j.diagonals[m]);
        }
        if (!ok) ++failures;
    }
    return {failures == 0, "100 cases, " + std::to_string(failures) + " failures"};
}

Outcome homomorphism_characterization() {
    Rng rng(1004);
    int disagreements = 0, wrong_verdicts = 0;
    for (int c = 0; c < 200; ++c) {
        const std::size_t k = uniform(rng, 1, 4), n = uniform(rng, 1, 3);
        const RationalMatrix g = to_rational(random_unimodular(rng, k, 3));
        std::vector<Character> w;
        for (std::size_t i = 0; i < k; ++i) w.push_back(random_character(rng, n, 2));
        LaurentMatrix rho = conjugated_diagonal(g, w);
        const bool positive = c < 100;
        if (!positive)
            rho(uniform(rng, 0, k - 1), uniform(rng, 0, k - 1))
                .add_term(random_character(rng, n, 2), random_nonzero_rational(rng));
        const bool verdict = verify_homomorphism(rho).ok;
        if (verdict != functional_equation_holds(rho, rng, 20)) ++disagreements;
        if (verdict != positive) ++wrong_verdicts;
    }
    return {disagreements == 0 && wrong_verdicts == 0,
            "200 cases, " + std::to_string(disagreements) + " oracle disagreements, " +
                std::to_string(wrong_verdicts) + " wrong verdicts"};
}

Outcome triangular_rigidity() {
    Rng rng(1005);
    int exceptions = 0, homomorphisms = 0;
    for (int c = 0; c < 200; ++c) {
        const std::size_t k = uniform(rng, 1, 4);
        const Character d = character({uniform(rng, -2, 2)});
        LaurentMatrix rho(k, 1);
        for (std::size_t i = 0; i < k; ++i) rho(i, i) = LaurentPoly::monomial(d);
        // About a third of the candidates keep zero off-diagonal entries.
        if (uniform(rng, 0, 2) != 0)
            for (std::size_t i = 1; i < k; ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (uniform(rng, 0, 1))
                        rho(i, j).add_term(character({uniform(rng, -2, 2)}), Rational(uniform(rng, -3, 3)));
        try {
            const RigidityReport r = triangular_rigidity_check(rho);
            if (r.homomorphism) ++homomorphisms;
            if (r.homomorphism != r.off_diagonal_zero) ++exceptions;
        } catch (const std::logic_error&) {
            ++exceptions;
        }
    }
    return {exceptions == 0, "200 cases, " + std::to_string(homomorphisms) + " homomorphisms, " +
                                 std::to_string(exceptions) + " exceptions"};
}

Outcome cocycle_suite() {
    Rng rng(1006);
    std::size_t cases = 0, failures = 0, undetected = 0;
    for (const auto& [name, fan] : parametrization_fans()) {
        for (std::size_t r = 1; r <= 3; ++r)
            cases += for_each_ray_vector(fan->rays().size() * r, rng, [&](const std::vector<long>& flat) {
                const BundleData b = from_ray_values(ray_values(fan, r, flat));
                if (!verify_cocycle(transition_cocycle(b), &b).ok) ++failures;
            });
        const BundleData b = from_ray_values(ray_values(fan, 2, std::vector<long>(fan->rays().size() * 2, 1)));
        TransitionCocycle corrupted = transition_cocycle(b);
        auto& e = corrupted.transitions.at({1, 0})[1];
        std::vector<Integer> coords = e.coords();
        coords[0] += 1;
        e = Character(std::move(coords));
        if (verify_cocycle(corrupted).ok) ++undetected;
    }
    return {failures == 0 && undetected == 0, std::to_string(cases) + " cocycles, " + std::to_string(failures) +
                                                  " failures, " + std::to_string(undetected) + " undetected corruptions"};
}

LaurentPoly z_power(long e, const Rational& c = Rational(1)) { return LaurentPoly::monomial(character({e}), c); }

Outcome limit_extension() {
    Rng rng(1007);
    int violations = 0, limit_identity = 0, wrong_negative = 0;
    for (int c = 0; c < 70; ++c) {
        const std::size_t k = uniform(rng, 1, 3);
        const bool extendable = c < 50;
        LaurentMatrix p(k, 1);
        bool has_negative = false;
        for (std::size_t i = 0; i < k; ++i) {
            long e = extendable ? (uniform(rng, 0, 1) ? 0 : uniform(rng, 0, 2)) : uniform(rng, -2, 2);
            if (!extendable && i + 1 == k && !has_negative) e = -uniform(rng, 1, 2);
            has_negative = has_negative || e < 0;
            p(i, i) = z_power(e, Rational(uniform(rng, 1, 3)));
        }
        LaurentMatrix f = p;
        if (extendable) {
            LaurentMatrix u = LaurentMatrix::identity(k, 1);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    for (long e = 0; e <= 2; ++e)
                        if (uniform(rng, 0, 1)) u(i, j).add_term(character({e}), Rational(uniform(rng, -2, 2)));
            f = u * p;
        }
        const LimitVerdict v = monomial_limit_extension(f);
        if (!v.implication_holds()) ++violations;
        if (v.limit_is_identity) ++limit_identity;
        if (!extendable && (v.limit_is_identity || v.extends)) ++wrong_negative;
    }
    return {violations == 0 && wrong_negative == 0,
            "70 cases, " + std::to_string(limit_identity) + " with identity limit, " + std::to_string(violations) +
                " implication failures, " + std::to_string(wrong_negative) + " misreported non-extendable"};
}

std::string run_fan_check(const std::string& file, int& code) {
    std::ostringstream out, err;
    code = run_cli({"fan", "check", data_path(file)}, out, err);
    return out.str() + err.str();
}

Outcome fan_gates() {
    std::vector<std::string> bad;
    for (const char* f : {"p1.json", "p2.json", "p1xp1.json", "hirzebruch0.json", "hirzebruch1.json",
                          "hirzebruch2.json", "hirzebruch3.json"}) {
        int code = 0;
        const std::string out = run_fan_check(f, code);
        if (code != 0 || out.find("smooth: yes, complete: yes") == std::string::npos) bad.push_back(f);
    }
    int code = 0;
    std::string out = run_fan_check("singular_cone.json", code);
    if (code != 1 || out.find("smooth: no (cone 0, invariant factor 2)") == std::string::npos)
        bad.push_back("singular_cone.json");
    out = run_fan_check("quadrant.json", code);
    if (out.find("complete: no") == std::string::npos || is_complete(*make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}})).complete)
        bad.push_back("quadrant.json");
    std::string note = "9 fans";
    for (const auto& b : bad) note += ", wrong verdict: " + b;
    return {bad.empty(), note};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"lattice parametrization of classes by ray values", parametrization},
        {"extension condition agrees with the ray-pairing oracle", extension_oracle_agreement},
        {"splitting round trip", splitting_round_trip},
        {"homomorphism characterization", homomorphism_characterization},
        {"triangular rigidity", triangular_rigidity},
        {"transition cocycle suite", cocycle_suite},
        {"limit implies holomorphic extension", limit_extension},
        {"fan gates", fan_gates},
    };
    bool all = true;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.note << ")\n";
    }
    return all ? 0 : 1;
}
