#pragma once

#include <stdexcept>
#include <string>

namespace netcoord {

enum class ErrorCode {
    DuplicateNode,
    DuplicateEdge,
    SelfLoop,
    UnknownEndpoint,
    UnknownNode,
    InvalidParams,
    ProfileMismatch,
    ZeroWelfare,
    ZeroState,
    NotAnEquilibrium,
    InvalidUniformState,
    DegenerateRatio,
    PerfectCompatibility,
    InternalRealizationFailure,
    TooLarge,
    EmptyGraph,
    ParseError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateNode: return "DuplicateNode";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::ProfileMismatch: return "ProfileMismatch";
        case ErrorCode::ZeroWelfare: return "ZeroWelfare";
        case ErrorCode::ZeroState: return "ZeroState";
        case ErrorCode::NotAnEquilibrium: return "NotAnEquilibrium";
        case ErrorCode::InvalidUniformState: return "InvalidUniformState";
        case ErrorCode::DegenerateRatio: return "DegenerateRatio";
        case ErrorCode::PerfectCompatibility: return "PerfectCompatibility";
        case ErrorCode::InternalRealizationFailure: return "InternalRealizationFailure";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace netcoord
