#include "heugcd/multipoly.hpp"

#include "heugcd/error.hpp"

#include <algorithm>
#include <map>

namespace heugcd {

bool operator==(const Node& a, const Node& b) {
    if (a.var != b.var) return false;
    if (a.is_scalar()) return a.scalar == b.scalar;
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].exp != b.terms[i].exp || !(a.terms[i].coef == b.terms[i].coef))
            return false;
    }
    return true;
}

namespace node {

namespace {

bool all_scalar_coefs(const Node& a) {
    return std::all_of(a.terms.begin(), a.terms.end(),
                       [](const Term& t) { return t.coef.is_scalar(); });
}

// a has a variable strictly above every variable of `lo`.
Node add_below(const Node& hi, const Node& lo) {
    std::vector<Term> terms = hi.terms;
    if (terms.back().exp == 0) {
        terms.back().coef = add(terms.back().coef, lo);
        if (terms.back().coef.is_zero()) terms.pop_back();
    } else {
        terms.push_back({0, lo});
    }
    return make(hi.var, std::move(terms));
}

Node mul_below(const Node& hi, const Node& lo) {
    std::vector<Term> terms;
    terms.reserve(hi.terms.size());
    for (const auto& t : hi.terms) terms.push_back({t.exp, mul(t.coef, lo)});
    return make(hi.var, std::move(terms));
}

// den * c * var^e, where den has top variable `var`.
Node mul_shifted(const Node& den, std::uint32_t e, const Node& c) {
    std::vector<Term> terms;
    terms.reserve(den.terms.size());
    for (const auto& t : den.terms) terms.push_back({t.exp + e, mul(t.coef, c)});
    return make(den.var, std::move(terms));
}

Node mul_dense_scalar(const Node& a, const Node& b) {
    const std::uint32_t top = a.terms.front().exp + b.terms.front().exp;
    std::vector<GaussInt> acc(top + 1);
    bool real = true;
    for (const auto& t : a.terms) real = real && t.coef.scalar.is_real();
    for (const auto& t : b.terms) real = real && t.coef.scalar.is_real();
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            GaussInt& slot = acc[ta.exp + tb.exp];
            if (real) {
                mpz_addmul(slot.re.get_mpz_t(), ta.coef.scalar.re.get_mpz_t(),
                           tb.coef.scalar.re.get_mpz_t());
            } else {
                slot += ta.coef.scalar * tb.coef.scalar;
            }
        }
    }
    std::vector<Term> terms;
    for (std::uint32_t e = top + 1; e-- > 0;) {
        if (!acc[e].is_zero()) terms.push_back({e, Node(std::move(acc[e]))});
    }
    return make(a.var, std::move(terms));
}

} // namespace

Node make(int var, std::vector<Term> terms) {
    std::erase_if(terms, [](const Term& t) { return t.coef.is_zero(); });
    if (terms.empty()) return Node{};
    if (terms.size() == 1 && terms.front().exp == 0) return std::move(terms.front().coef);
    Node n;
    n.var = var;
    n.terms = std::move(terms);
    return n;
}

Node neg(Node a) {
    if (a.is_scalar()) {
        a.scalar = -a.scalar;
        return a;
    }
    for (auto& t : a.terms) t.coef = neg(std::move(t.coef));
    return a;
}

Node add(const Node& a, const Node& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.var < b.var) return add_below(b, a);
    if (b.var < a.var) return add_below(a, b);
    if (a.is_scalar()) return Node(a.scalar + b.scalar);

    std::vector<Term> terms;
    terms.reserve(a.terms.size() + b.terms.size());
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->exp > ib->exp)) {
            terms.push_back(*ia++);
        } else if (ia == a.terms.end() || ib->exp > ia->exp) {
            terms.push_back(*ib++);
        } else {
            Node c = add(ia->coef, ib->coef);
            if (!c.is_zero()) terms.push_back({ia->exp, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return make(a.var, std::move(terms));
}

Node sub(const Node& a, const Node& b) { return add(a, neg(b)); }

Node mul(const Node& a, const Node& b) {
    if (a.is_zero() || b.is_zero()) return Node{};
    if (a.is_scalar() && b.is_scalar()) return Node(a.scalar * b.scalar);
    if (a.var < b.var) return mul_below(b, a);
    if (b.var < a.var) return mul_below(a, b);

    const std::uint64_t span = std::uint64_t(a.terms.front().exp) + b.terms.front().exp + 1;
    if (all_scalar_coefs(a) && all_scalar_coefs(b) &&
        span <= 4 * a.terms.size() * b.terms.size() + 16)
        return mul_dense_scalar(a, b);

    std::map<std::uint32_t, Node, std::greater<>> acc;
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            Node& slot = acc[ta.exp + tb.exp];
            slot = add(slot, mul(ta.coef, tb.coef));
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc) terms.push_back({e, std::move(c)});
    return make(a.var, std::move(terms));
}

Node scale(const Node& a, const GaussInt& c) {
    if (c.is_zero() || a.is_zero()) return Node{};
    if (a.is_scalar()) return Node(a.scalar * c);
    Node r;
    r.var = a.var;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.exp, scale(t.coef, c)});
    return r;
}

Node monomial(int var, std::uint32_t exp, Node coef) {
    if (exp == 0 || coef.is_zero()) return coef;
    return make(var, {{exp, std::move(coef)}});
}

std::optional<Node> divide_scalar(const Node& num, const GaussInt& c) {
    if (c.is_zero()) throw division_by_zero("polynomial division by zero");
    if (c.is_real()) return divide_scalar(num, c.re);
    if (num.is_scalar()) {
        auto q = exact_div(num.scalar, c);
        if (!q) return std::nullopt;
        return Node(std::move(*q));
    }
    Node r;
    r.var = num.var;
    r.terms.reserve(num.terms.size());
    for (const auto& t : num.terms) {
        auto q = divide_scalar(t.coef, c);
        if (!q) return std::nullopt;
        r.terms.push_back({t.exp, std::move(*q)});
    }
    return r;
}

std::optional<Node> divide_scalar(const Node& num, const Int& c) {
    if (sgn(c) == 0) throw division_by_zero("polynomial division by zero");
    if (num.is_scalar()) {
        auto q = exact_div(num.scalar, c);
        if (!q) return std::nullopt;
        return Node(std::move(*q));
    }
    Node r;
    r.var = num.var;
    r.terms.reserve(num.terms.size());
    for (const auto& t : num.terms) {
        auto q = divide_scalar(t.coef, c);
        if (!q) return std::nullopt;
        r.terms.push_back({t.exp, std::move(*q)});
    }
    return r;
}

std::optional<Node> divide_exact(const Node& num, const Node& den) {
    if (den.is_zero()) throw division_by_zero("polynomial division by zero");
    if (num.is_zero()) return Node{};
    if (den.is_scalar()) return divide_scalar(num, den.scalar);
    if (num.var < den.var) return std::nullopt;
    if (num.var > den.var) {
        std::vector<Term> terms;
        terms.reserve(num.terms.size());
        for (const auto& t : num.terms) {
            auto q = divide_exact(t.coef, den);
            if (!q) return std::nullopt;
            terms.push_back({t.exp, std::move(*q)});
        }
        return make(num.var, std::move(terms));
    }

    const int v = den.var;
    const std::uint32_t den_exp = den.terms.front().exp;
    const Node& den_lc = den.terms.front().coef;
    if (num.terms.front().exp < den_exp) return std::nullopt;

    std::vector<Term> quotient;
    Node rem = num;
    while (!rem.is_zero()) {
        if (rem.var != v) return std::nullopt;
        const std::uint32_t e = rem.terms.front().exp;
        if (e < den_exp) return std::nullopt;
        auto c = divide_exact(rem.terms.front().coef, den_lc);
        if (!c) return std::nullopt;
        rem = sub(rem, mul_shifted(den, e - den_exp, *c));
        quotient.push_back({e - den_exp, std::move(*c)});
    }
    return make(v, std::move(quotient));
}

Node eval_top(const Node& a, int var, const Int& z) {
    if (a.var != var) return a;
    const auto& terms = a.terms;
    if (all_scalar_coefs(a) && std::all_of(terms.begin(), terms.end(), [](const Term& t) {
            return t.coef.scalar.is_real();
        })) {
        Int acc = terms.front().coef.scalar.re;
        Int zp;
        for (std::size_t i = 1; i < terms.size(); ++i) {
            mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), terms[i - 1].exp - terms[i].exp);
            acc *= zp;
            acc += terms[i].coef.scalar.re;
        }
        mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), terms.back().exp);
        acc *= zp;
        return Node(GaussInt(std::move(acc)));
    }
    Node acc = terms.front().coef;
    Int zp;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), terms[i - 1].exp - terms[i].exp);
        acc = add(scale(acc, GaussInt(zp)), terms[i].coef);
    }
    mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), terms.back().exp);
    return scale(acc, GaussInt(zp));
}

std::uint32_t degree(const Node& a, int var) {
    if (a.var < var) return 0;
    if (a.var == var) return a.terms.front().exp;
    std::uint32_t d = 0;
    for (const auto& t : a.terms) d = std::max(d, degree(t.coef, var));
    return d;
}

const GaussInt& leading_scalar(const Node& a) {
    const Node* n = &a;
    while (!n->is_scalar()) n = &n->terms.front().coef;
    return n->scalar;
}

std::size_t term_count(const Node& a) {
    if (a.is_scalar()) return a.is_zero() ? 0 : 1;
    std::size_t n = 0;
    for (const auto& t : a.terms) n += term_count(t.coef);
    return n;
}

void for_each_scalar(const Node& a, const std::function<void(const GaussInt&)>& f) {
    if (a.is_scalar()) {
        if (!a.is_zero()) f(a.scalar);
        return;
    }
    for (const auto& t : a.terms) for_each_scalar(t.coef, f);
}

} // namespace node

namespace {

std::shared_ptr<const MultiPoly::VarList> drop_last(const MultiPoly::VarList& vars) {
    return std::make_shared<const MultiPoly::VarList>(vars.begin(), vars.end() - 1);
}

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring() != b.ring()) throw structural_error("operands belong to different rings");
    if (!a.compatible(b)) throw structural_error("operands have different variable orders");
}

} // namespace

MultiPoly::MultiPoly(RingTag ring, VarList vars)
    : ring_(ring), vars_(std::make_shared<const VarList>(std::move(vars))) {}

MultiPoly::MultiPoly(RingTag ring, std::shared_ptr<const VarList> vars, Node body)
    : ring_(ring), vars_(std::move(vars)), body_(std::move(body)) {}

MultiPoly MultiPoly::constant(RingTag ring, VarList vars, GaussInt c) {
    if (ring == RingTag::Integers && !c.is_real())
        throw structural_error("Gaussian constant in the integer ring");
    MultiPoly p(ring, std::move(vars));
    p.body_ = Node(std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(RingTag ring, VarList vars, std::size_t index) {
    if (index >= vars.size()) throw structural_error("variable index out of range");
    MultiPoly p(ring, std::move(vars));
    p.body_ = node::monomial(static_cast<int>(index), 1, Node(GaussInt(1)));
    return p;
}

const GaussInt& MultiPoly::constant_value() const {
    if (!is_constant()) throw structural_error("polynomial is not constant");
    return body_.scalar;
}

std::uint32_t MultiPoly::main_degree() const {
    if (num_vars() == 0) return 0;
    return node::degree(body_, static_cast<int>(num_vars()) - 1);
}

std::uint32_t MultiPoly::degree(std::size_t var) const {
    if (var >= num_vars()) throw structural_error("variable index out of range");
    return node::degree(body_, static_cast<int>(var));
}

std::vector<std::pair<std::uint32_t, MultiPoly>> MultiPoly::main_coefficients() const {
    if (num_vars() == 0) throw structural_error("constant polynomial has no main variable");
    std::vector<std::pair<std::uint32_t, MultiPoly>> out;
    if (is_zero()) return out;
    auto lower = drop_last(*vars_);
    const int main = static_cast<int>(num_vars()) - 1;
    if (body_.var != main) {
        out.emplace_back(0, MultiPoly(ring_, lower, body_));
        return out;
    }
    out.reserve(body_.terms.size());
    for (const auto& t : body_.terms) out.emplace_back(t.exp, MultiPoly(ring_, lower, t.coef));
    return out;
}

MultiPoly MultiPoly::drop_main_var() const {
    if (num_vars() == 0) throw structural_error("constant polynomial has no main variable");
    if (main_degree() != 0) throw structural_error("polynomial depends on its main variable");
    return {ring_, drop_last(*vars_), body_};
}

MultiPoly MultiPoly::with_new_main_var(const std::string& name) const {
    auto vars = std::make_shared<VarList>(*vars_);
    vars->push_back(name);
    return {ring_, std::move(vars), body_};
}

bool MultiPoly::compatible(const MultiPoly& other) const {
    return ring_ == other.ring_ && (vars_ == other.vars_ || *vars_ == *other.vars_);
}

MultiPoly arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
    require_compatible(a, b);
    switch (op) {
    case ArithOp::Add: return a.with_body(node::add(a.body(), b.body()));
    case ArithOp::Sub: return a.with_body(node::sub(a.body(), b.body()));
    case ArithOp::Mul: return a.with_body(node::mul(a.body(), b.body()));
    }
    throw structural_error("unknown arithmetic operation");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return arith(a, b, ArithOp::Add); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return arith(a, b, ArithOp::Sub); }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return arith(a, b, ArithOp::Mul); }
MultiPoly operator-(const MultiPoly& a) { return a.with_body(node::neg(a.body())); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.compatible(b) && a.body() == b.body();
}

MultiPoly scale(const MultiPoly& p, const GaussInt& c) {
    return p.with_body(node::scale(p.body(), c));
}

MultiPoly pow(const MultiPoly& p, unsigned exp) {
    MultiPoly result = p.with_body(Node(GaussInt(1)));
    MultiPoly base = p;
    while (exp > 0) {
        if (exp & 1U) result = result * base;
        exp >>= 1U;
        if (exp > 0) base = base * base;
    }
    return result;
}

MultiPoly eval_main(const MultiPoly& p, const Int& z) {
    if (p.num_vars() == 0) throw structural_error("cannot evaluate a polynomial with no variables");
    const int main = static_cast<int>(p.num_vars()) - 1;
    return {p.ring(), drop_last(p.vars()), node::eval_top(p.body(), main, z)};
}

Int height(const MultiPoly& p) {
    Int h = 0;
    node::for_each_scalar(p.body(), [&h](const GaussInt& c) {
        Int ch = coeff_height(c);
        if (ch > h) h = std::move(ch);
    });
    return h;
}

namespace {

// Folds gint_gcd over all scalars, stopping at the first unit.
void fold_content(const Node& n, GaussInt& g) {
    if (g.is_one()) return;
    if (n.is_scalar()) {
        if (!n.is_zero()) g = gint_gcd(g, n.scalar);
        return;
    }
    for (const auto& t : n.terms) {
        fold_content(t.coef, g);
        if (g.is_one()) return;
    }
}

} // namespace

GaussInt icontent(const MultiPoly& p) {
    GaussInt g;
    fold_content(p.body(), g);
    return normalize_unit(g);
}

MultiPoly primitive_part(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const GaussInt c = icontent(p);
    if (c.is_one()) return p;
    return p.with_body(*node::divide_scalar(p.body(), c));
}

MultiPoly content_main(const MultiPoly& p, const GcdFn& gcd_fn) {
    if (p.num_vars() < 2) {
        MultiPoly lower(p.ring(), drop_last(p.vars()));
        if (p.num_vars() == 0) lower = p;
        return lower.with_body(Node(icontent(p)));
    }
    auto coefs = p.main_coefficients();
    if (coefs.empty()) return MultiPoly(p.ring(), drop_last(p.vars()));
    MultiPoly g(p.ring(), coefs.front().second.shared_vars());
    for (const auto& [e, c] : coefs) {
        g = gcd_fn(g, c);
        if (g.is_constant() && g.constant_value().is_unit()) break;
    }
    return g;
}

std::optional<MultiPoly> try_divide_exact(const MultiPoly& num, const MultiPoly& den) {
    require_compatible(num, den);
    auto q = node::divide_exact(num.body(), den.body());
    if (!q) return std::nullopt;
    return num.with_body(std::move(*q));
}

MultiPoly normalize_unit(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const GaussInt u = normalizing_unit(node::leading_scalar(p.body()));
    if (u.is_one()) return p;
    return scale(p, u);
}

bool associate_equal(const MultiPoly& a, const MultiPoly& b) {
    return normalize_unit(a) == normalize_unit(b);
}

} // namespace heugcd
