#pragma once

#include <stdexcept>
#include <string>

namespace jacsyz {

// User-input or mathematical precondition failures (CLI exit code 2).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource budget (pair count, degree bound) was exhausted.
class BudgetExceeded : public PreconditionError {
public:
    explicit BudgetExceeded(const std::string& what) : PreconditionError(what) {}
};

// A violated internal invariant, i.e. a bug (CLI exit code 1).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public PreconditionError {
public:
    ParseError(const std::string& what, int line, int column)
        : PreconditionError(what + " (line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

} // namespace jacsyz
