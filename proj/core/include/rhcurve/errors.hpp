#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhc {

enum class ErrorKind {
    NotAUnit,
    InnerNotNilpotent,
    PrecisionExhausted,
    IrrationalLeadingCoefficient,
    DuplicateDirection,
    InvalidBranch,
    OrderMismatch,
    SingularInitialValue,
    RankNotSupported,
    InvalidArgument,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Input that does not follow one of the literal or file grammars.
/// `position` is a byte offset into the offending literal, or npos when the
/// failure is structural (missing key, wrong JSON type).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = std::string::npos)
        : Error(ErrorKind::Parse, what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace rhc
