#ifndef QTREE_ERRORS_HPP
#define QTREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtree {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed text input (polynomial grammar, path syntax, CLI arguments).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/// An operation was called outside its contract (zero divisor, mixed
/// fields, unsupported base field, comparable members in an antichain, ...).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

/// A configurable retry/iteration budget ran out before success.
struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace qtree

#endif
