#include "heugcd/parse.hpp"

#include "heugcd/error.hpp"

#include <algorithm>
#include <cctype>

namespace heugcd {

namespace {

constexpr unsigned long max_exponent = 1UL << 20;

enum class Tok { Integer, Imaginary, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> lex(std::string_view src, RingTag ring) {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < src.size()) {
        const char c = src[pos];
        const std::size_t col = pos + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
            out.push_back({Tok::Integer, std::string(src.substr(pos, end - pos)), col});
            pos = end;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < src.size() && std::isalnum(static_cast<unsigned char>(src[end]))) ++end;
            std::string word(src.substr(pos, end - pos));
            if (word == "i") {
                if (ring != RingTag::GaussianIntegers)
                    throw ring_error("imaginary unit 'i' outside the Gaussian ring", col);
                out.push_back({Tok::Imaginary, word, col});
            } else {
                out.push_back({Tok::Ident, std::move(word), col});
            }
            pos = end;
        } else {
            Tok kind;
            switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: throw parse_error(std::string("unexpected character '") + c + "'", col);
            }
            out.push_back({kind, std::string(1, c), col});
            ++pos;
        }
    }
    out.push_back({Tok::End, "", src.size() + 1});
    return out;
}

using ExprPtr = std::unique_ptr<PolyExpr>;

ExprPtr make_node(PolyExpr::Kind kind, std::size_t column, ExprPtr lhs = nullptr,
                  ExprPtr rhs = nullptr) {
    auto e = std::make_unique<PolyExpr>();
    e->kind = kind;
    e->column = column;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        if (peek().kind != Tok::End) {
            if (peek().kind == Tok::RParen) fail("unbalanced ')'");
            fail("expected an operator before '" + peek().text + "'");
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, peek().column); }

    ExprPtr sum() {
        ExprPtr lhs = product();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = take();
            ExprPtr rhs = product();
            lhs = make_node(op.kind == Tok::Plus ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub,
                            op.column, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr product() {
        ExprPtr lhs = unary();
        while (peek().kind == Tok::Star) {
            const Token& op = take();
            ExprPtr rhs = unary();
            lhs = make_node(PolyExpr::Kind::Mul, op.column, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().kind == Tok::Minus) {
            const Token& op = take();
            return make_node(PolyExpr::Kind::Neg, op.column, unary());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (peek().kind != Tok::Caret) return base;
        const Token& op = take();
        if (peek().kind == Tok::Minus) fail("negative exponent");
        if (peek().kind != Tok::Integer) fail("exponent must be a nonnegative integer literal");
        const Token& lit = take();
        ExprPtr e = make_node(PolyExpr::Kind::Pow, op.column, std::move(base));
        e->value = Int(lit.text);
        if (e->value > max_exponent) throw parse_error("exponent too large", lit.column);
        if (peek().kind == Tok::Caret) fail("exponent must be a nonnegative integer literal");
        return e;
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Integer: {
            take();
            ExprPtr e = make_node(PolyExpr::Kind::Integer, t.column);
            e->value = Int(t.text);
            return e;
        }
        case Tok::Imaginary: take(); return make_node(PolyExpr::Kind::Imaginary, t.column);
        case Tok::Ident: {
            take();
            ExprPtr e = make_node(PolyExpr::Kind::Variable, t.column);
            e->name = t.text;
            return e;
        }
        case Tok::LParen: {
            take();
            ExprPtr e = sum();
            if (peek().kind != Tok::RParen) fail("expected ')'");
            take();
            return e;
        }
        case Tok::End: fail("unexpected end of input");
        default: fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

MultiPoly lower(const PolyExpr& e, const MultiPoly& zero) {
    using K = PolyExpr::Kind;
    switch (e.kind) {
    case K::Integer: return zero.with_body(Node(GaussInt(e.value)));
    case K::Imaginary: return zero.with_body(Node(GaussInt(Int(0), Int(1))));
    case K::Variable: {
        const auto& vars = zero.vars();
        auto it = std::find(vars.begin(), vars.end(), e.name);
        if (it == vars.end()) throw parse_error("unknown variable '" + e.name + "'", e.column);
        const int index = static_cast<int>(it - vars.begin());
        return zero.with_body(node::monomial(index, 1, Node(GaussInt(1))));
    }
    case K::Add: return lower(*e.lhs, zero) + lower(*e.rhs, zero);
    case K::Sub: return lower(*e.lhs, zero) - lower(*e.rhs, zero);
    case K::Neg: return -lower(*e.lhs, zero);
    case K::Mul: return lower(*e.lhs, zero) * lower(*e.rhs, zero);
    case K::Pow: return pow(lower(*e.lhs, zero), static_cast<unsigned>(e.value.get_ui()));
    }
    throw parse_error("unknown expression node", e.column);
}

struct Piece {
    bool negative;
    std::string text;
};

std::string join(const std::vector<Piece>& pieces) {
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) out += pieces[i].negative ? "-" : "";
        else out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].text;
    }
    return out;
}

std::string imaginary_text(const Int& magnitude) {
    return magnitude == 1 ? "i" : magnitude.get_str() + "*i";
}

Piece scalar_piece(const GaussInt& c) {
    if (c.is_real()) return {sgn(c.re) < 0, Int(abs(c.re)).get_str()};
    if (sgn(c.re) == 0) return {sgn(c.im) < 0, imaginary_text(abs(c.im))};
    return {false, "(" + c.re.get_str() + (sgn(c.im) > 0 ? "+" : "-") +
                       imaginary_text(abs(c.im)) + ")"};
}

std::vector<Piece> pieces(const Node& n, const MultiPoly::VarList& vars) {
    if (n.is_scalar()) return {scalar_piece(n.scalar)};
    std::vector<Piece> out;
    const std::string& name = vars[static_cast<std::size_t>(n.var)];
    for (const auto& t : n.terms) {
        std::vector<Piece> sub = pieces(t.coef, vars);
        if (t.exp == 0) {
            out.insert(out.end(), sub.begin(), sub.end());
            continue;
        }
        const std::string power = t.exp == 1 ? name : name + "^" + std::to_string(t.exp);
        if (sub.size() == 1) {
            const Piece& s = sub.front();
            out.push_back({s.negative, s.text == "1" ? power : s.text + "*" + power});
        } else {
            out.push_back({false, "(" + join(sub) + ")*" + power});
        }
    }
    return out;
}

} // namespace

std::unique_ptr<PolyExpr> parse_expr(std::string_view src, RingTag ring) {
    return Parser(lex(src, ring)).parse();
}

std::vector<std::string> collect_variables(std::string_view src, RingTag ring) {
    std::vector<std::string> out;
    for (const auto& t : lex(src, ring)) {
        if (t.kind == Tok::Ident && std::find(out.begin(), out.end(), t.text) == out.end())
            out.push_back(t.text);
    }
    return out;
}

MultiPoly parse_poly(std::string_view src, RingTag ring,
                     const std::optional<std::vector<std::string>>& var_order) {
    auto expr = parse_expr(src, ring);
    std::vector<std::string> vars = var_order ? *var_order : collect_variables(src, ring);
    return lower(*expr, MultiPoly(ring, std::move(vars)));
}

std::vector<std::string> shared_variable_order(std::string_view a, std::string_view b,
                                               RingTag ring) {
    std::vector<std::string> vars = collect_variables(a, ring);
    for (auto& v : collect_variables(b, ring))
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(std::move(v));
    return vars;
}

std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    return join(pieces(p.body(), p.vars()));
}

} // namespace heugcd
