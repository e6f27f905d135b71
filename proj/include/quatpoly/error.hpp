#pragma once

#include <stdexcept>
#include <string>

namespace quatpoly {

enum class ErrorCode {
    ZeroDivision,
    IrrationalRepresentative,
    NoConvergence,
    DegenerateEvaluations,
    ChainBroken,
    PreconditionViolated,
    NotCoprime,
    ClassMismatch,
    ClassCollision,
    SingularUpsilon,
    SingularPivot,
    NeedsFloatBackend,
    NonRealResult,
    ParseError,
    Usage,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace quatpoly
