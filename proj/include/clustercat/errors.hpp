#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clustercat {

enum class ErrorCode {
    VariableCountMismatch,
    NotDivisible,
    DivisionByZero,
    LengthMismatch,
    InsufficientPoints,
    InconsistentExtraPoint,
    NonIntegerCoefficients,
    ParseError,
    HasLoop,
    HasTwoCycle,
    VertexOutOfRange,
    NotAcyclic,
    NotPrime,
    QuiverMismatch,
    PathInvalid,
    ShapeMismatch,
    NotTypeA,
    BadInterval,
    NegativeSolution,
    BadDims,
    NotPolynomialCount,
    IsProjective,
    CollisionDetected,
    NotInTable,
    DepthExceeded,
    IdentityFailed,
    InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (CLI exit codes, HTTP status mapping, tests) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace clustercat
