#pragma once

// Sparse recursive multivariate polynomials.
//
// A polynomial in variables X_0..X_{k-1} is stored as a tree of Nodes. A
// scalar node holds a ring element; a polynomial node in variable v holds
// terms (exponent, coefficient) with strictly decreasing exponents, nonzero
// coefficients that only involve variables < v, and at least one positive
// exponent. The representation is therefore unique: equal polynomials have
// equal trees. The main variable is X_{k-1}.

#include "heugcd/ring.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heugcd {

struct Term;

struct Node {
    int var = -1;            // -1 for a scalar node
    GaussInt scalar;         // meaningful only when var == -1
    std::vector<Term> terms; // meaningful only when var >= 0

    Node() = default;
    Node(GaussInt c) : scalar(std::move(c)) {}

    bool is_scalar() const { return var < 0; }
    bool is_zero() const { return var < 0 && scalar.is_zero(); }
};

struct Term {
    std::uint32_t exp;
    Node coef;
};

bool operator==(const Node& a, const Node& b);

namespace node {

/// Builds a canonical node from terms sorted by decreasing exponent,
/// dropping zero coefficients and collapsing a lone constant term.
Node make(int var, std::vector<Term> terms);

Node neg(Node a);
Node add(const Node& a, const Node& b);
Node sub(const Node& a, const Node& b);
Node mul(const Node& a, const Node& b);
Node scale(const Node& a, const GaussInt& c);
Node monomial(int var, std::uint32_t exp, Node coef);

/// Exact division; nullopt if the quotient is not a polynomial over the ring.
std::optional<Node> divide_exact(const Node& num, const Node& den);
std::optional<Node> divide_scalar(const Node& num, const GaussInt& c);
std::optional<Node> divide_scalar(const Node& num, const Int& c);

/// Substitutes `z` for variable `var`; `var` must be the node's top variable
/// or absent from it.
Node eval_top(const Node& a, int var, const Int& z);

std::uint32_t degree(const Node& a, int var);
const GaussInt& leading_scalar(const Node& a);
std::size_t term_count(const Node& a);

void for_each_scalar(const Node& a, const std::function<void(const GaussInt&)>& f);

} // namespace node

class MultiPoly {
public:
    using VarList = std::vector<std::string>;

    MultiPoly(RingTag ring, VarList vars);
    MultiPoly(RingTag ring, std::shared_ptr<const VarList> vars, Node body = {});

    static MultiPoly constant(RingTag ring, VarList vars, GaussInt c);
    static MultiPoly variable(RingTag ring, VarList vars, std::size_t index);

    RingTag ring() const { return ring_; }
    const VarList& vars() const { return *vars_; }
    const std::shared_ptr<const VarList>& shared_vars() const { return vars_; }
    std::size_t num_vars() const { return vars_->size(); }
    const Node& body() const { return body_; }

    bool is_zero() const { return body_.is_zero(); }
    bool is_constant() const { return body_.is_scalar(); }
    /// Scalar value of a constant polynomial.
    const GaussInt& constant_value() const;

    std::uint32_t main_degree() const;
    std::uint32_t degree(std::size_t var) const;
    std::size_t term_count() const { return node::term_count(body_); }

    /// Coefficients with respect to the main variable, as polynomials in the
    /// remaining variables, highest exponent first.
    std::vector<std::pair<std::uint32_t, MultiPoly>> main_coefficients() const;

    /// Same polynomial viewed over the variable list without its main
    /// variable. Requires main_degree() == 0.
    MultiPoly drop_main_var() const;

    /// Same polynomial over vars() + {name} (new main variable).
    MultiPoly with_new_main_var(const std::string& name) const;

    /// Same ring and variable list (contents compared).
    bool compatible(const MultiPoly& other) const;

    MultiPoly with_body(Node body) const { return {ring_, vars_, std::move(body)}; }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    RingTag ring_;
    std::shared_ptr<const VarList> vars_;
    Node body_;
};

enum class ArithOp { Add, Sub, Mul };

MultiPoly arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

MultiPoly scale(const MultiPoly& p, const GaussInt& c);
MultiPoly pow(const MultiPoly& p, unsigned exp);

/// p(X_0, ..., X_{k-2}, z): a polynomial in one fewer variable.
MultiPoly eval_main(const MultiPoly& p, const Int& z);

/// Largest coeff_height over all scalar coefficients; 0 for the zero polynomial.
Int height(const MultiPoly& p);

/// Unit-normalized gcd of all scalar coefficients.
GaussInt icontent(const MultiPoly& p);
MultiPoly primitive_part(const MultiPoly& p);

using GcdFn = std::function<MultiPoly(const MultiPoly&, const MultiPoly&)>;

/// Gcd of the coefficients of p viewed as a polynomial in its main variable,
/// computed with `gcd_fn`. Returned over the remaining variables. For a
/// univariate p this is the integer content, as a constant.
MultiPoly content_main(const MultiPoly& p, const GcdFn& gcd_fn);

/// q with num == q * den, or nullopt. Throws division_by_zero on den == 0.
std::optional<MultiPoly> try_divide_exact(const MultiPoly& num, const MultiPoly& den);

/// Multiplies by the unit that normalizes the leading scalar coefficient.
MultiPoly normalize_unit(const MultiPoly& p);

/// Equal up to multiplication by a unit of the ring.
bool associate_equal(const MultiPoly& a, const MultiPoly& b);

} // namespace heugcd
