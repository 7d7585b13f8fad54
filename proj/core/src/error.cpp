#include "qwalk/error.hpp"

namespace qwalk {

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::RootSelectorInconsistent: return "RootSelectorInconsistent";
    case ErrorCode::BothConstantInVariable: return "BothConstantInVariable";
    case ErrorCode::IncompatibleRadicands: return "IncompatibleRadicands";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidSupport: return "InvalidSupport";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ResidualNonZero: return "ResidualNonZero";
    case ErrorCode::OffCurveInput: return "OffCurveInput";
    case ErrorCode::DegenerateWeights: return "DegenerateWeights";
    case ErrorCode::IdenticallyZeroOnCurve: return "IdenticallyZeroOnCurve";
    case ErrorCode::OmegaPoint: return "OmegaPoint";
    case ErrorCode::RegimeNotApplicable: return "RegimeNotApplicable";
    case ErrorCode::OrbitRegimeNotReached: return "OrbitRegimeNotReached";
    case ErrorCode::TableCellMismatch: return "TableCellMismatch";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::CoverageGap: return "CoverageGap";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::EvidenceFailed: return "EvidenceFailed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    }
    return "Unknown";
}

} // namespace qwalk
