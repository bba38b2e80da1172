#pragma once

#include <stdexcept>
#include <string>

namespace rfh {

enum class ErrorKind {
    DomainError,
    ShapeMismatch,
    InvalidMap,
    InvalidProblem,
    NotAChainComplex,
    NotAChainMap,
    WrongRing,
    WindowTooSmall,
    ParseError,
    Internal,
};

/// Error thrown by library operations. CLI maps ParseError/validation
/// kinds to exit code 1 and Internal to exit code 2.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::NotAChainComplex: return "NotAChainComplex";
    case ErrorKind::NotAChainMap: return "NotAChainMap";
    case ErrorKind::WrongRing: return "WrongRing";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

} // namespace rfh
