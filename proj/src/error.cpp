#include "idc/error.hpp"

namespace idc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::Asymmetric: return "Asymmetric";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::ZeroNormRow: return "ZeroNormRow";
        case ErrorCode::NonPositiveGamma: return "NonPositiveGamma";
        case ErrorCode::MissingPair: return "MissingPair";
        case ErrorCode::IdOutOfRange: return "IdOutOfRange";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::KTooLarge: return "KTooLarge";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DegenerateCluster: return "DegenerateCluster";
        case ErrorCode::NoStrongLinks: return "NoStrongLinks";
        case ErrorCode::NoWeakLinks: return "NoWeakLinks";
        case ErrorCode::EmptyCluster: return "EmptyCluster";
        case ErrorCode::SameCluster: return "SameCluster";
        case ErrorCode::DegenerateStats: return "DegenerateStats";
        case ErrorCode::AllDegenerate: return "AllDegenerate";
        case ErrorCode::NonPositiveInput: return "NonPositiveInput";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

} // namespace idc
