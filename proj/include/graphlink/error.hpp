#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphlink {

enum class ErrorKind {
    SingularMatrix,
    IndexOutOfRange,
    UnknownVertex,
    SameVertex,
    MoveNotApplicable,
    NotAKnot,
    TooLarge,
    BudgetExceeded,
    InternalContradiction,
    ParseError,
    DuplicateName,
    BadLabel,
    NotSymmetric,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures also report a 1-based position in the source text.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    /// The message without kind and position.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

}  // namespace graphlink
