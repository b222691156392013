#include "graphlink/error.hpp"

namespace graphlink {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::SameVertex: return "SameVertex";
        case ErrorKind::MoveNotApplicable: return "MoveNotApplicable";
        case ErrorKind::NotAKnot: return "NotAKnot";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InternalContradiction: return "InternalContradiction";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DuplicateName: return "DuplicateName";
        case ErrorKind::BadLabel: return "BadLabel";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace graphlink
