#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// Raised by the text parsers. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(std::string const& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::string const& what, std::size_t line, std::size_t column) {
        if (line == 0)
            return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

// Polynomials from different variable tables, unknown variable names, wrong vector lengths.
class ArityError : public Error {
public:
    using Error::Error;
};

class InhomogeneousError : public Error {
public:
    using Error::Error;
};

} // namespace bsv
