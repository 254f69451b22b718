#pragma once

#include <stdexcept>
#include <string>

namespace uqfm {

enum class Err {
    DivisionByZero,
    PoleAtPoint,
    ZeroElement,
    ParamMismatch,
    SingularCharacter,
    DomainViolation,
    VariantUnsupported,
    InvalidPoint,
    CaseMismatch,
    WindowTooSmall,
    BoundaryOverflow,
    ZeroParameter,
    UncertifiedCoproduct,
    DecompositionFailure,
    ZeroVector,
    InvalidData,
    ParseError,
    UsageError,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& msg) { throw Error(code, msg); }

} // namespace uqfm
