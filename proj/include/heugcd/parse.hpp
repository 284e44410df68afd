#pragma once

// Polynomial expressions: integers, `i` (Gaussian ring only), variable names,
// + - * ^ and parentheses. Precedence from tightest: ^, unary -, *, binary
// + and -. The exponent of ^ must be a nonnegative integer literal and
// multiplication is always written with an explicit *.

#include "heugcd/multipoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace heugcd {

struct PolyExpr {
    enum class Kind { Integer, Imaginary, Variable, Add, Sub, Neg, Mul, Pow };

    Kind kind;
    Int value;          // Integer literal, or exponent of Pow
    std::string name;   // Variable
    std::unique_ptr<PolyExpr> lhs;
    std::unique_ptr<PolyExpr> rhs;
    std::size_t column; // 1-based position of the node's first token
};

std::unique_ptr<PolyExpr> parse_expr(std::string_view src, RingTag ring);

/// Variables in order of first appearance.
std::vector<std::string> collect_variables(std::string_view src, RingTag ring);

/// Parses and expands. Without `var_order` the variables are ordered by
/// first appearance; the last one is the main variable.
MultiPoly parse_poly(std::string_view src, RingTag ring,
                     const std::optional<std::vector<std::string>>& var_order = std::nullopt);

/// Variable order for a pair of expressions: first appearance across both.
std::vector<std::string> shared_variable_order(std::string_view a, std::string_view b,
                                               RingTag ring);

/// Canonical text; parse_poly(format_poly(p), ring, vars) == p.
std::string format_poly(const MultiPoly& p);

} // namespace heugcd
