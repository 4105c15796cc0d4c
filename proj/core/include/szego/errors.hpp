#pragma once

#include <stdexcept>
#include <string>

namespace szego {

// Every failure mode surfaced by the library. The CLI maps these onto
// process exit codes: configuration/input problems -> 2, domain or
// convergence violations -> 3, numerical breakdown -> 4.
enum class ErrorKind {
    // configuration / input
    Config,
    Io,
    UndeclaredArithmeticType,
    // domain / convergence
    ZeroOnCircle,
    PoleOnCircle,
    BadCenter,
    UnknownStructure,
    TailTooLarge,
    OutOfDomain,
    InsufficientDecay,
    AnnulusMismatch,
    ConvergenceConditionViolated,
    OnContour,
    TooCloseToPole,
    NoBulkZeros,
    // numerical breakdown
    QuadratureStall,
    LostPositivity,
    NoConvergence,
    NegativeSquare,
    LeadingCoeffMismatch,
    NewtonDiverged,
};

inline const char* error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return "Config";
        case ErrorKind::Io: return "Io";
        case ErrorKind::UndeclaredArithmeticType: return "UndeclaredArithmeticType";
        case ErrorKind::ZeroOnCircle: return "ZeroOnCircle";
        case ErrorKind::PoleOnCircle: return "PoleOnCircle";
        case ErrorKind::BadCenter: return "BadCenter";
        case ErrorKind::UnknownStructure: return "UnknownStructure";
        case ErrorKind::TailTooLarge: return "TailTooLarge";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::InsufficientDecay: return "InsufficientDecay";
        case ErrorKind::AnnulusMismatch: return "AnnulusMismatch";
        case ErrorKind::ConvergenceConditionViolated: return "ConvergenceConditionViolated";
        case ErrorKind::OnContour: return "OnContour";
        case ErrorKind::TooCloseToPole: return "TooCloseToPole";
        case ErrorKind::NoBulkZeros: return "NoBulkZeros";
        case ErrorKind::QuadratureStall: return "QuadratureStall";
        case ErrorKind::LostPositivity: return "LostPositivity";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NegativeSquare: return "NegativeSquare";
        case ErrorKind::LeadingCoeffMismatch: return "LeadingCoeffMismatch";
        case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    }
    return "Unknown";
}

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config:
        case ErrorKind::Io:
        case ErrorKind::UndeclaredArithmeticType:
            return 2;
        case ErrorKind::QuadratureStall:
        case ErrorKind::LostPositivity:
        case ErrorKind::NoConvergence:
        case ErrorKind::NegativeSquare:
        case ErrorKind::LeadingCoeffMismatch:
        case ErrorKind::NewtonDiverged:
            return 4;
        default:
            return 3;
    }
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace szego
