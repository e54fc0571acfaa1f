// error.hpp
// One exception type for the whole library, tagged with a machine-readable
// code so the CLI can print a stable one-line reason.

#pragma once

#include <stdexcept>
#include <string>

namespace triality {

enum class ErrorCode {
    ZeroVector,
    NotHermitian,
    NotPositive,
    BadTrace,
    DomainError,
    InconsistentInputs,
    BadRank,
    UnknownFamily,
    EmptyPattern,
    NegativeCorrected,
    ParseError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::BadTrace: return "BadTrace";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::InconsistentInputs: return "InconsistentInputs";
        case ErrorCode::BadRank: return "BadRank";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::EmptyPattern: return "EmptyPattern";
        case ErrorCode::NegativeCorrected: return "NegativeCorrected";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace triality
