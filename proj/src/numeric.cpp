#include "eqtoric/numeric.hpp"

#include <cctype>

#include "eqtoric/error.hpp"

namespace eqtoric {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal_integer(text))
        throw Error(ErrorCode::Parse, "not a decimal integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw Error(ErrorCode::Parse, "signed denominator in '" + std::string(text) + "'");
    const Integer den = parse_integer(den_text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    if (a != 0 && b % a == 0) {
        return {abs(a), Integer(a > 0 ? 1 : -1), Integer(0)};
    }
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        const Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "dimension mismatch";
        case ErrorCode::DependentInput: return "dependent input";
        case ErrorCode::NotPartOfBasis: return "not part of a basis";
        case ErrorCode::NotUnimodular: return "not unimodular";
        case ErrorCode::MalformedFan: return "malformed fan";
        case ErrorCode::NotAFan: return "not a fan";
        case ErrorCode::SingularFan: return "singular fan";
        case ErrorCode::FanNotComplete: return "fan not complete";
        case ErrorCode::NotAFace: return "not a face";
        case ErrorCode::MalformedBundle: return "malformed bundle";
        case ErrorCode::Inconsistent: return "inconsistent";
        case ErrorCode::Incomparable: return "incomparable";
        case ErrorCode::ExtensionFails: return "extension condition fails";
        case ErrorCode::BlockMultiplicityMismatch: return "block multiplicity mismatch";
        case ErrorCode::NotHomomorphism: return "not a homomorphism";
        case ErrorCode::ImagesDoNotCommute: return "images do not commute";
        case ErrorCode::NotTriangular: return "not triangular";
        case ErrorCode::DiagonalEntriesDiffer: return "diagonal entries differ";
        case ErrorCode::DetNotMonomial: return "det not monomial";
        case ErrorCode::Parse: return "parse error";
        case ErrorCode::Io: return "i/o error";
    }
    return "error";
}

}  // namespace eqtoric
