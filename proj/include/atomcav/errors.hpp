#ifndef ATOMCAV_ERRORS_HPP
#define ATOMCAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atomcav {

enum class ErrorCode {
    NonPositiveN,
    NegativeEta,
    NonFiniteField,
    StepTooCoarse,
    NonFiniteAmplitude,
    OracleTooLarge,
    InnerDenominatorZero,
    NoMinimaFound,
    NoConvergence,
    EmptyPoleSet,
    NoBoundState,
    PhaseUndefined,
    TrajectoryTooShort,
    ParseError,
    UnknownKey,
    ValidationError,
};

// Single exception type carrying a machine-checkable code. The CLI maps
// NoConvergence and NonFiniteAmplitude to exit status 2, everything else to 1.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonPositiveN: return "NonPositiveN";
        case ErrorCode::NegativeEta: return "NegativeEta";
        case ErrorCode::NonFiniteField: return "NonFiniteField";
        case ErrorCode::StepTooCoarse: return "StepTooCoarse";
        case ErrorCode::NonFiniteAmplitude: return "NonFiniteAmplitude";
        case ErrorCode::OracleTooLarge: return "OracleTooLarge";
        case ErrorCode::InnerDenominatorZero: return "InnerDenominatorZero";
        case ErrorCode::NoMinimaFound: return "NoMinimaFound";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::EmptyPoleSet: return "EmptyPoleSet";
        case ErrorCode::NoBoundState: return "NoBoundState";
        case ErrorCode::PhaseUndefined: return "PhaseUndefined";
        case ErrorCode::TrajectoryTooShort: return "TrajectoryTooShort";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

} // namespace atomcav

#endif
