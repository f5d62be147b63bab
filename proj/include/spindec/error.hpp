#pragma once

#include <stdexcept>
#include <string>

namespace spindec {

enum class ErrorKind {
    MalformedText,
    NotWeaklyDecreasing,
    SizeMismatch,
    NonIntegralScale,
    NotTwoRegular,
    BoundExceeded,
    NotAStaircase,
    ParameterOutOfRange,
    RowTooShort,
    NotRouquier,
    NotUnitriangular,
    NegativeAdjustment,
    ShapeMismatch,
    ParseError,
    LabelMismatch,
    MixedLevels,
    MixedKinds,
    ZeroCharacter,
    InternalNonIntegral,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedText: return "MalformedText";
    case ErrorKind::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NonIntegralScale: return "NonIntegralScale";
    case ErrorKind::NotTwoRegular: return "NotTwoRegular";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotAStaircase: return "NotAStaircase";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::RowTooShort: return "RowTooShort";
    case ErrorKind::NotRouquier: return "NotRouquier";
    case ErrorKind::NotUnitriangular: return "NotUnitriangular";
    case ErrorKind::NegativeAdjustment: return "NegativeAdjustment";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::MixedLevels: return "MixedLevels";
    case ErrorKind::MixedKinds: return "MixedKinds";
    case ErrorKind::ZeroCharacter: return "ZeroCharacter";
    case ErrorKind::InternalNonIntegral: return "InternalNonIntegral";
    }
    return "Error";
}

// Domain error; the CLI maps this to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace spindec
