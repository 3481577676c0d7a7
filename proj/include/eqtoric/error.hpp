#ifndef EQTORIC_ERROR_HPP
#define EQTORIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eqtoric {

enum class ErrorCode {
    DimensionMismatch,
    DependentInput,
    NotPartOfBasis,
    NotUnimodular,
    MalformedFan,
    NotAFan,
    SingularFan,
    FanNotComplete,
    NotAFace,
    MalformedBundle,
    Inconsistent,
    Incomparable,
    ExtensionFails,
    BlockMultiplicityMismatch,
    NotHomomorphism,
    ImagesDoNotCommute,
    NotTriangular,
    DiagonalEntriesDiffer,
    DetNotMonomial,
    Parse,
    Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace eqtoric

#endif
