#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saxl {

enum class ErrorCode {
    InvalidPartition,
    SizeMismatch,
    CapExceeded,
    NotDominating,
    NotComparable,
    NotAHook,
    BadShape,
    Parse,
    InternalInconsistency,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidPartition: return "invalid partition";
    case ErrorCode::SizeMismatch: return "size mismatch";
    case ErrorCode::CapExceeded: return "cap exceeded";
    case ErrorCode::NotDominating: return "not dominating";
    case ErrorCode::NotComparable: return "not comparable";
    case ErrorCode::NotAHook: return "not a hook";
    case ErrorCode::BadShape: return "bad shape";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::InternalInconsistency: return "internal inconsistency";
    }
    return "unknown error";
}

/// Domain error raised by every saxl operation. The code lets callers (and
/// the CLI exit-code mapping) distinguish failure classes without parsing
/// messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace saxl
