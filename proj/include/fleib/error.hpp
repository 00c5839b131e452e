#ifndef FLEIB_ERROR_HPP
#define FLEIB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fleib {

// Base for all library errors. The CLI maps each subclass to a distinct
// exit code.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed scalar strings, bad JSON shapes, unknown formats.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Mismatched variable counts, vector lengths or algebra dimensions.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Division by zero and other domain violations in exact arithmetic.
class ArithmeticError : public Error {
public:
    explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

// A normalization was requested outside its open set; `vanished` names the
// polynomial(s) that vanished.
class OutsideOpenSet : public Error {
public:
    OutsideOpenSet(const std::string& msg, std::vector<std::string> vanished)
        : Error(msg), vanished_(std::move(vanished)) {}
    const std::vector<std::string>& vanished() const { return vanished_; }

private:
    std::vector<std::string> vanished_;
};

// Isomorphism question posed outside the decidable region (generic n
// outside the open set U).
class Undecided : public Error {
public:
    explicit Undecided(const std::string& msg) : Error(msg) {}
};

} // namespace fleib

#endif
