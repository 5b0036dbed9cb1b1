#pragma once

#include <stdexcept>
#include <string>

namespace catwalk {

enum class ErrorCode {
    ParseError,
    InvalidGraph,
    InvalidArgument,
    SizeCap,
    ExplosionCap,
    NotDivisible,
    DivisionByZero,
    UnboundVariable,
    Unreachable,
    AxiomViolation,
    NotACorridor,
    NotNested,
    LabelMismatch,
    ModeMismatch,
    BadArity,
    IsChamber,
    OddCount,
    NotAcyclic,
    Disconnected,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace catwalk
