#include "holext/errors.hpp"

namespace holext {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ZeroOnCurve: return "ZeroOnCurve";
        case ErrorCode::Unresolved: return "Unresolved";
        case ErrorCode::PoleTooClose: return "PoleTooClose";
        case ErrorCode::AverageTooSmall: return "AverageTooSmall";
        case ErrorCode::TailNotBounded: return "TailNotBounded";
        case ErrorCode::NoUsablePole: return "NoUsablePole";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::RootNearCircle: return "RootNearCircle";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Schema: return "Schema";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace holext
