#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holext {

enum class ErrorCode {
    InvalidArgument,
    ZeroOnCurve,
    Unresolved,
    PoleTooClose,
    AverageTooSmall,
    TailNotBounded,
    NoUsablePole,
    NotApplicable,
    VerificationFailed,
    NoConvergence,
    RootNearCircle,
    ParseError,
    Schema,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures also remember the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::ParseError, "at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace holext
