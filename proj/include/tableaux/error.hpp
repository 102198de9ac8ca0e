#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tableaux {

/// Closed vocabulary of failure classes reported by every public operation.
enum class ErrorCode {
    SumMismatch,
    NotDominating,
    NoSuchIndex,
    InvalidFloor,
    ShapeMismatch,
    MixedPoset,
    ZeroCount,
    Overflow,
    CapExceeded,
    NotContained,
    InvalidSequence,
    UsageError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::NotDominating: return "NotDominating";
    case ErrorCode::NoSuchIndex: return "NoSuchIndex";
    case ErrorCode::InvalidFloor: return "InvalidFloor";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::MixedPoset: return "MixedPoset";
    case ErrorCode::ZeroCount: return "ZeroCount";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail)
        , code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tableaux
