#pragma once

#include <stdexcept>
#include <string>

namespace lcmid {

/// Operands live in different variable spaces, or an index is out of range.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A model violates one or more ModelSpec invariants.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A model file could not be parsed. Carries 1-based line/column when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// The caller asked for something the operation does not accept
/// (e.g. an io-equation for a compartment that is not an output).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The model is outside the class the rank criterion is stated for
/// (not strongly connected, or no input).
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A search was refused because the instance is larger than the configured cap.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lcmid
