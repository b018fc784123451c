#pragma once

#include <stdexcept>
#include <string>

namespace hyperell {

// Parse: malformed input. Validation: mathematically invalid datum.
// Internal: an invariant of the pipeline itself was violated.
enum class ErrorKind { Parse, Validation, Internal };

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message,
          ErrorKind kind = ErrorKind::Validation)
        : std::runtime_error(code + ": " + message), code_(std::move(code)), kind_(kind) {}

    const std::string& code() const noexcept { return code_; }
    ErrorKind kind() const noexcept { return kind_; }

private:
    std::string code_;
    ErrorKind kind_;
};

[[noreturn]] inline void internal_error(const std::string& code, const std::string& message) {
    throw Error(code, message, ErrorKind::Internal);
}

}  // namespace hyperell
