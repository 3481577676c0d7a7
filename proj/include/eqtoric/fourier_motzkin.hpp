#ifndef EQTORIC_FOURIER_MOTZKIN_HPP
#define EQTORIC_FOURIER_MOTZKIN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eqtoric/numeric.hpp"

namespace eqtoric {

/// coeffs . x >= bound
struct LinearInequality {
    std::vector<Rational> coeffs;
    Rational bound;
};

/**
 * Exact feasibility of a system of non-strict rational inequalities by
 * Fourier-Motzkin elimination.  Returns a witness point when feasible.
 *
 * Meant for the handful of variables that occur in fan checks; the number of
 * intermediate constraints can grow quadratically per eliminated variable.
 */
std::optional<std::vector<Rational>> fourier_motzkin_solve(std::span<const LinearInequality> system,
                                                           std::size_t variables);

/// Adds both coeffs . x >= 0 and -coeffs . x >= 0.
void add_equality(std::vector<LinearInequality>& system, std::vector<Rational> coeffs);

}  // namespace eqtoric

#endif
