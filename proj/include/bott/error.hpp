#pragma once

#include <stdexcept>
#include <string>

namespace bott {

enum class ErrorCode {
    StageTooLarge,
    NonGeneric,
    DegreeTooHigh,
    SingularParameters,
    PoleHit,
    Inconclusive,
    SingularSample,
    SingularSystem,
    InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bott
