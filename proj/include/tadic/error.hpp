#pragma once

#include <stdexcept>
#include <string>

namespace tadic {

// Base of every error raised by the kernel.  The CLI maps PrecisionExhausted
// to exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand shapes or preconditions do not match (mixed precision, arity, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

class NotMonic : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

class CannotRegularize : public Error {
public:
    using Error::Error;
};

class NotHenselianInstance : public Error {
public:
    using Error::Error;
};

// A relation or value depends on t-digits that are not known.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class DivisionByZeroAtPrecision : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    // The message without the position prefix.
    const std::string& message() const noexcept { return message_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

} // namespace tadic
