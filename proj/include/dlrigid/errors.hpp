#pragma once

#include <stdexcept>
#include <string>

namespace dlrigid {

enum class ErrorCode {
    LoopEdge,
    DuplicateTypedEdge,
    DanglingEndpoint,
    DuplicateLabel,
    PreconditionViolated,
    NotANode,
    KindMismatchForPureNode,
    EdgeAlreadyPresent,
    NotASeparation,
    SideNotPure,
    EdgeOfSameTypePresent,
    CoincidentEndpoints,
    TooLargeForExhaustiveOracle,
    SubsetTooSmall,
    InputIndependent,
    NotDependentAfterAdding,
    NotMixed,
    NotMConnected,
    NotTwoConnected,
    NotDirectionBalanced,
    TheoremViolation,
    ReplayPreconditionFailure,
    OutOfTheoremScope,
    NotSingleLengthEdge,
    NoUnbalancedSeparation,
    DegenerateCutLine,
    TooFewVertices,
    ParseError,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateTypedEdge: return "DuplicateTypedEdge";
        case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotANode: return "NotANode";
        case ErrorCode::KindMismatchForPureNode: return "KindMismatchForPureNode";
        case ErrorCode::EdgeAlreadyPresent: return "EdgeAlreadyPresent";
        case ErrorCode::NotASeparation: return "NotASeparation";
        case ErrorCode::SideNotPure: return "SideNotPure";
        case ErrorCode::EdgeOfSameTypePresent: return "EdgeOfSameTypePresent";
        case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
        case ErrorCode::TooLargeForExhaustiveOracle: return "TooLargeForExhaustiveOracle";
        case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
        case ErrorCode::InputIndependent: return "InputIndependent";
        case ErrorCode::NotDependentAfterAdding: return "NotDependentAfterAdding";
        case ErrorCode::NotMixed: return "NotMixed";
        case ErrorCode::NotMConnected: return "NotMConnected";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::NotDirectionBalanced: return "NotDirectionBalanced";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::ReplayPreconditionFailure: return "ReplayPreconditionFailure";
        case ErrorCode::OutOfTheoremScope: return "OutOfTheoremScope";
        case ErrorCode::NotSingleLengthEdge: return "NotSingleLengthEdge";
        case ErrorCode::NoUnbalancedSeparation: return "NoUnbalancedSeparation";
        case ErrorCode::DegenerateCutLine: return "DegenerateCutLine";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

/// Library-wide exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace dlrigid
