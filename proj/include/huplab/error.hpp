#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace huplab {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset()` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifierError : public ParseError {
public:
    UnknownIdentifierError(const std::string& name, std::size_t offset)
        : ParseError("unknown identifier '" + name + "'", offset), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Evaluation outside a function's domain (log of a nonpositive real, x / 0, ...).
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::string subexpression)
        : Error(what + " in '" + subexpression + "'"), subexpression_(std::move(subexpression)) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

/// Invalid argument or violated precondition on a library call.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Numeric failure: quadrature that did not converge, root search without bracket.
class NumericError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public NumericError {
public:
    QuadratureError(const std::string& what, double panel_lo, double panel_hi)
        : NumericError(what), panel_lo_(panel_lo), panel_hi_(panel_hi) {}

    double panel_lo() const noexcept { return panel_lo_; }
    double panel_hi() const noexcept { return panel_hi_; }

private:
    double panel_lo_;
    double panel_hi_;
};

}  // namespace huplab
