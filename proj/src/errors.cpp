#include "clustercat/errors.hpp"

namespace clustercat {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InsufficientPoints: return "InsufficientPoints";
        case ErrorCode::InconsistentExtraPoint: return "InconsistentExtraPoint";
        case ErrorCode::NonIntegerCoefficients: return "NonIntegerCoefficients";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::HasLoop: return "HasLoop";
        case ErrorCode::HasTwoCycle: return "HasTwoCycle";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::NotAcyclic: return "NotAcyclic";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::QuiverMismatch: return "QuiverMismatch";
        case ErrorCode::PathInvalid: return "PathInvalid";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotTypeA: return "NotTypeA";
        case ErrorCode::BadInterval: return "BadInterval";
        case ErrorCode::NegativeSolution: return "NegativeSolution";
        case ErrorCode::BadDims: return "BadDims";
        case ErrorCode::NotPolynomialCount: return "NotPolynomialCount";
        case ErrorCode::IsProjective: return "IsProjective";
        case ErrorCode::CollisionDetected: return "CollisionDetected";
        case ErrorCode::NotInTable: return "NotInTable";
        case ErrorCode::DepthExceeded: return "DepthExceeded";
        case ErrorCode::IdentityFailed: return "IdentityFailed";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace clustercat
