#include "eqtoric/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

#include "eqtoric/error.hpp"

namespace eqtoric {

namespace {

using Key = std::vector<Rational>;  // coeffs followed by bound

// Scales so that the largest absolute coefficient is 1, keeping the direction.
LinearInequality normalized(LinearInequality row) {
    Rational scale = 0;
    for (const auto& c : row.coeffs) scale = std::max(scale, Rational(abs(c)));
    if (scale == 0) return row;
    for (auto& c : row.coeffs) c /= scale;
    row.bound /= scale;
    return row;
}

bool is_constant(const LinearInequality& row) {
    return std::all_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return c == 0; });
}

// Eliminates variable k.  Returns false when a contradiction 0 >= b > 0 shows up.
bool eliminate(const std::vector<LinearInequality>& in, std::size_t k, std::vector<LinearInequality>& out) {
    std::vector<const LinearInequality*> pos, neg;
    std::set<Key> seen;
    auto push = [&](LinearInequality row) {
        row = normalized(std::move(row));
        if (is_constant(row)) return row.bound <= 0;
        Key key = row.coeffs;
        key.push_back(row.bound);
        if (seen.insert(std::move(key)).second) out.push_back(std::move(row));
        return true;
    };
    for (const auto& row : in) {
        if (row.coeffs[k] > 0)
            pos.push_back(&row);
        else if (row.coeffs[k] < 0)
            neg.push_back(&row);
        else if (!push(row))
            return false;
    }
    for (const auto* p : pos)
        for (const auto* q : neg) {
            const Rational a = p->coeffs[k];
            const Rational b = -q->coeffs[k];
            LinearInequality comb;
            comb.coeffs.resize(p->coeffs.size());
            for (std::size_t j = 0; j < comb.coeffs.size(); ++j)
                comb.coeffs[j] = p->coeffs[j] / a + q->coeffs[j] / b;
            comb.coeffs[k] = 0;
            comb.bound = p->bound / a + q->bound / b;
            if (!push(std::move(comb))) return false;
        }
    return true;
}

}  // namespace

void add_equality(std::vector<LinearInequality>& system, std::vector<Rational> coeffs) {
    LinearInequality ge{coeffs, Rational(0)};
    for (auto& c : coeffs) c = -c;
    system.push_back(std::move(ge));
    system.push_back({std::move(coeffs), Rational(0)});
}

std::optional<std::vector<Rational>> fourier_motzkin_solve(std::span<const LinearInequality> system,
                                                           std::size_t variables) {
    std::vector<std::vector<LinearInequality>> stages(variables + 1);
    for (const auto& row : system) {
        if (row.coeffs.size() != variables)
            throw Error(ErrorCode::DimensionMismatch, "inequality with wrong number of coefficients");
        if (is_constant(row)) {
            if (row.bound > 0) return std::nullopt;
            continue;
        }
        stages[0].push_back(row);
    }
    for (std::size_t k = 0; k < variables; ++k)
        if (!eliminate(stages[k], k, stages[k + 1])) return std::nullopt;

    // Back-substitution: stage k only involves variables k..n-1.
    std::vector<Rational> x(variables);
    for (std::size_t k = variables; k-- > 0;) {
        std::optional<Rational> lo, hi;
        for (const auto& row : stages[k]) {
            const Rational& c = row.coeffs[k];
            if (c == 0) continue;
            Rational rhs = row.bound;
            for (std::size_t j = k + 1; j < variables; ++j) rhs -= row.coeffs[j] * x[j];
            const Rational limit = rhs / c;
            if (c > 0) {
                if (!lo || limit > *lo) lo = limit;
            } else if (!hi || limit < *hi) {
                hi = limit;
            }
        }
        if (lo && hi && *lo > *hi) return std::nullopt;
        Rational v = 0;
        if (lo && v < *lo) v = *lo;
        if (hi && v > *hi) v = *hi;
        x[k] = v;
    }
    for (const auto& row : system) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < variables; ++j) lhs += row.coeffs[j] * x[j];
        if (lhs < row.bound) return std::nullopt;
    }
    return x;
}

}  // namespace eqtoric
