#pragma once

#include <stdexcept>
#include <string>

namespace hirzlog {

enum class ErrorCode {
    InvalidArgument,
    SurfaceMismatch,
    Unsupported,
    Semantic,   // well-formed input describing an impossible object
    Internal,   // two independent computations disagreed
    Overflow,
    NotFound,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace hirzlog
