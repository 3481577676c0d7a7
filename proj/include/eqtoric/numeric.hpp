#ifndef EQTORIC_NUMERIC_HPP
#define EQTORIC_NUMERIC_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace eqtoric {

// Expression templates are off so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses an optionally signed decimal integer; throws Error(Parse) otherwise.
Integer parse_integer(std::string_view text);

/// Parses "p", "p/q" (q != 0); the result is normalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

Integer floor_div(const Integer& a, const Integer& b);

/// Extended gcd: returns g = gcd(a, b) >= 0 together with x, y such that
/// a*x + b*y = g.  When a divides b the coefficients are (sign(a), 0).
struct ExtendedGcd {
    Integer g;
    Integer x;
    Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace eqtoric

#endif
