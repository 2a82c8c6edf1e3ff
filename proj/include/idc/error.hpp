#pragma once

#include <stdexcept>
#include <string>

namespace idc {

enum class ErrorCode {
    NonSquare,
    Asymmetric,
    NegativeWeight,
    NonFinite,
    ZeroNormRow,
    NonPositiveGamma,
    MissingPair,
    IdOutOfRange,
    NotSymmetric,
    NoConvergence,
    KTooLarge,
    KTooSmall,
    EmptyInput,
    IndexOutOfRange,
    DegenerateCluster,
    NoStrongLinks,
    NoWeakLinks,
    EmptyCluster,
    SameCluster,
    DegenerateStats,
    AllDegenerate,
    NonPositiveInput,
    LengthMismatch,
    InvalidArgument,
    IoFailure,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a typed error code; all library failures use this.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace idc
