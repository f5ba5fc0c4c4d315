#pragma once

#include <stdexcept>
#include <string>

namespace simplexwidth {

enum class ErrorKind {
    invalid_dimension,
    dimension_mismatch,
    domain,
    invalid_argument,
    precondition,
    cap_exceeded,
    oracle_scope,
    empty_input,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind lets front-ends map errors
/// onto exit codes or exception classes without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace simplexwidth
