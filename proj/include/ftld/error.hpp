#pragma once

#include <stdexcept>
#include <string>

namespace ftld {

enum class ErrorCode {
    DegenerateTorus,
    InvalidVertex,
    InvalidPair,
    InvalidArgument,
    UnsupportedModel,
    UndominatedVertex,
    DivisionByZero,
    Overflow,
    UnsupportedRadius,
    NotAProblemCase,
    BudgetExceeded,
    ParseError,
};

/// Library-wide exception carrying a machine-checkable code next to the
/// human-readable message. `detail` holds the offending vertex / value when
/// one exists (-1 otherwise).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, long long detail = -1)
        : std::runtime_error(message), code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    long long detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    long long detail_;
};

} // namespace ftld
