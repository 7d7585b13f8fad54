#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwalk {

enum class ErrorCode {
    ZeroDenominator,
    RootSelectorInconsistent,
    BothConstantInVariable,
    IncompatibleRadicands,
    Unsupported,
    InvalidSupport,
    NonPositiveWeight,
    MalformedInput,
    ResidualNonZero,
    OffCurveInput,
    DegenerateWeights,
    IdenticallyZeroOnCurve,
    OmegaPoint,
    RegimeNotApplicable,
    OrbitRegimeNotReached,
    TableCellMismatch,
    IdentityFailed,
    CoverageGap,
    OracleMismatch,
    EvidenceFailed,
    PreconditionFailed,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

} // namespace qwalk
