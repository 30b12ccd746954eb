#ifndef ACSF_ERRORS_HPP
#define ACSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acsf {

// Coarse error categories; they map 1:1 onto the C API status codes and
// the CLI exit codes. The message carries the specific condition
// (InvalidSymbol, SearchLimitExceeded, ...).
enum class ErrorCode {
    invalid_argument = 1,
    limit_exceeded = 2,
    invariant_violation = 3,
    io_error = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& message) {
    throw Error(ErrorCode::invalid_argument, message);
}

[[noreturn]] inline void throw_limit(const std::string& message) {
    throw Error(ErrorCode::limit_exceeded, message);
}

} // namespace acsf

#endif
