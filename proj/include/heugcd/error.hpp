#pragma once

#include <stdexcept>
#include <string>

namespace heugcd {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Modulus below 3 passed to a symmetric remainder or digit codec.
class invalid_modulus : public error {
public:
    using error::error;
};

class division_by_zero : public error {
public:
    using error::error;
};

/// Operands disagree on ring or variable order, or have the wrong arity.
class structural_error : public error {
public:
    using error::error;
};

/// Input outside the mathematical domain of an operation (e.g. gcd(0, 0)).
class domain_error : public error {
public:
    using error::error;
};

/// Operation not supported for this input shape (e.g. Bezout over Z[i]).
class unsupported : public error {
public:
    using error::error;
};

/// Lexical or syntax error while reading a polynomial. `column` is 1-based.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t column)
        : error(what + " at column " + std::to_string(column)), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// The imaginary unit used while parsing over the integers.
class ring_error : public parse_error {
public:
    using parse_error::parse_error;
};

} // namespace heugcd
