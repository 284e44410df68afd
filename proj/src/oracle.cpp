#include "heugcd/oracle.hpp"

#include "heugcd/error.hpp"
#include "heugcd/zadic.hpp"

#include <algorithm>

namespace heugcd {

namespace {

int main_var(const MultiPoly& p) { return static_cast<int>(p.num_vars()) - 1; }

Node main_leading_coef(const Node& n, int var) {
    if (n.var != var) return n;
    return n.terms.front().coef;
}

MultiPoly lift(const MultiPoly& lower, const MultiPoly& like) {
    return like.with_body(lower.body());
}

// Dense rational univariate polynomials, index = exponent.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

QPoly to_qpoly(const MultiPoly& p) {
    QPoly out;
    if (p.is_zero()) return out;
    out.resize(p.main_degree() + 1);
    for (const auto& [e, c] : p.main_coefficients()) out[e] = mpq_class(c.constant_value().re);
    return out;
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    QPoly out = a;
    if (!q.empty() && !b.empty()) {
        out.resize(std::max(a.size(), q.size() + b.size() - 1));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

// Quotient and remainder of a / b over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
        a.back() = 0;
        trim(a);
    }
    trim(q);
    return {q, a};
}

MultiPoly from_integers(const std::vector<Int>& c, const MultiPoly& like) {
    MultiPoly x = MultiPoly::variable(like.ring(), like.vars(), 0);
    MultiPoly out(like.ring(), like.shared_vars());
    for (std::size_t e = c.size(); e-- > 0;) {
        out = out * x + like.with_body(Node(GaussInt(c[e])));
    }
    return out;
}

void require_univariate_integer(const MultiPoly& p, const MultiPoly& q) {
    if (!p.compatible(q)) throw structural_error("operands have different variable orders");
    if (p.ring() != RingTag::Integers)
        throw unsupported("Bezout diagnostics support integer coefficients only");
    if (p.num_vars() != 1) throw unsupported("Bezout diagnostics support univariate input only");
    if (p.is_zero() && q.is_zero()) throw domain_error("gcd(0, 0) is undefined");
}

} // namespace

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b) {
    if (!a.compatible(b)) throw structural_error("operands have different variable orders");
    const int var = main_var(b);
    const std::uint32_t db = b.main_degree();
    if (b.num_vars() == 0 || db == 0) throw domain_error("pseudo-division needs a nonconstant divisor");
    const Node lcb = main_leading_coef(b.body(), var);
    Node r = a.body();
    while (!r.is_zero() && node::degree(r, var) >= db) {
        const std::uint32_t e = r.terms.front().exp;
        const Node lcr = r.terms.front().coef;
        r = node::sub(node::mul(r, lcb), node::mul(b.body(), node::monomial(var, e - db, lcr)));
    }
    return a.with_body(std::move(r));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a == quotient * b + remainder.
MultiPoly full_pseudo_remainder(const MultiPoly& a, const MultiPoly& b) {
    const int var = main_var(b);
    const std::uint32_t da = a.main_degree(), db = b.main_degree();
    const Node lcb = main_leading_coef(b.body(), var);
    Node r = a.body();
    std::uint32_t steps = 0;
    while (!r.is_zero() && node::degree(r, var) >= db) {
        const std::uint32_t e = r.terms.front().exp;
        const Node lcr = r.terms.front().coef;
        r = node::sub(node::mul(r, lcb), node::mul(b.body(), node::monomial(var, e - db, lcr)));
        ++steps;
    }
    for (; steps < da - db + 1; ++steps) r = node::mul(r, lcb);
    return a.with_body(std::move(r));
}

// Leading coefficient in the main variable, over the remaining variables.
MultiPoly main_leading(const MultiPoly& p) {
    return p.main_coefficients().front().second;
}

} // namespace

MultiPoly main_primitive_part(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const MultiPoly c = content_main(p, prs_gcd);
    return *try_divide_exact(p, lift(c, p));
}

MultiPoly prs_gcd(const MultiPoly& p0, const MultiPoly& q0) {
    if (!p0.compatible(q0)) throw structural_error("gcd operands have different variable orders");
    if (p0.is_zero() && q0.is_zero()) throw domain_error("gcd(0, 0) is undefined");
    if (p0.is_zero()) return normalize_unit(q0);
    if (q0.is_zero()) return normalize_unit(p0);
    if (p0.is_constant()) return p0.with_body(Node(gint_gcd(p0.constant_value(), icontent(q0))));
    if (q0.is_constant()) return q0.with_body(Node(gint_gcd(q0.constant_value(), icontent(p0))));

    const GaussInt int_content = gint_gcd(icontent(p0), icontent(q0));
    MultiPoly p = primitive_part(p0);
    MultiPoly q = primitive_part(q0);

    MultiPoly poly_content = p.with_body(Node(GaussInt(1)));
    if (p.num_vars() >= 2) {
        const MultiPoly cp = content_main(p, prs_gcd);
        const MultiPoly cq = content_main(q, prs_gcd);
        poly_content = lift(prs_gcd(cp, cq), p);
        p = *try_divide_exact(p, lift(cp, p));
        q = *try_divide_exact(q, lift(cq, q));
    }

    MultiPoly g = p.with_body(Node(GaussInt(1)));
    if (p.main_degree() > 0 && q.main_degree() > 0) {
        if (p.main_degree() < q.main_degree()) std::swap(p, q);
        // Subresultant PRS: the divisions below are exact, contents are
        // removed once at the end.
        MultiPoly sg = g, sh = g;
        while (true) {
            const std::uint32_t delta = p.main_degree() - q.main_degree();
            MultiPoly r = full_pseudo_remainder(p, q);
            if (r.is_zero()) {
                g = main_primitive_part(q);
                break;
            }
            if (r.main_degree() == 0) break;
            const MultiPoly divisor = sg * pow(sh, delta);
            p = std::move(q);
            q = *try_divide_exact(r, divisor);
            sg = lift(main_leading(p), p);
            if (delta == 0) continue;
            sh = *try_divide_exact(pow(sg, delta), pow(sh, delta - 1));
        }
        g = primitive_part(g);
    }
    return normalize_unit(scale(poly_content * g, int_content));
}

mpq_class cauchy_root_bound(const std::vector<Int>& coeffs) {
    if (coeffs.size() < 2) throw domain_error("root bound needs a polynomial of degree >= 1");
    const Int& lead = coeffs.back();
    if (sgn(lead) == 0) throw domain_error("leading coefficient must be nonzero");
    Int a = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) a = std::max(a, Int(abs(coeffs[i])));
    mpq_class bound(a, abs(lead));
    bound.canonicalize();
    return bound + 1;
}

BezoutCertificate bezout_gamma(const MultiPoly& p, const MultiPoly& q) {
    require_univariate_integer(p, q);
    const MultiPoly d = prs_gcd(p, q);
    const QPoly p1 = to_qpoly(*try_divide_exact(p, d));
    const QPoly q1 = to_qpoly(*try_divide_exact(q, d));

    QPoly s, t;
    if (p1.size() == 1) {
        s = {mpq_class(1 / p1[0])};
    } else {
        QPoly r0 = p1, r1 = q1;
        QPoly s0{mpq_class(1)}, s1;
        QPoly t0, t1{mpq_class(1)};
        while (!r1.empty()) {
            auto [quot, rem] = qdivmod(r0, r1);
            QPoly s2 = qsub_mul(s0, quot, s1);
            QPoly t2 = qsub_mul(t0, quot, t1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // p1 and q1 are coprime, so r0 is a nonzero constant.
        const mpq_class c = r0.front();
        s = std::move(s0);
        t = std::move(t0);
        for (auto& x : s) x /= c;
        for (auto& x : t) x /= c;
    }

    Int gamma = 1;
    for (const auto* poly : {&s, &t})
        for (const auto& x : *poly) mpz_lcm(gamma.get_mpz_t(), gamma.get_mpz_t(), x.get_den_mpz_t());

    auto to_integers = [&gamma](const QPoly& a) {
        std::vector<Int> out;
        for (const auto& x : a) {
            mpq_class y = x * gamma;
            y.canonicalize();
            out.push_back(y.get_num());
        }
        return out;
    };
    BezoutCertificate cert{from_integers(to_integers(s), p), from_integers(to_integers(t), p),
                           gamma, d};
    if (!(p * cert.u + q * cert.v == scale(d, GaussInt(gamma))))
        throw error("Bezout certificate failed verification");
    return cert;
}

FirstTryReport verify_first_try_bound(const MultiPoly& p, const MultiPoly& q) {
    BezoutCertificate cert = bezout_gamma(p, q);
    const Int z_theory = 2 * height(cert.d) * cert.gamma + 1;
    const Int z_practical = 2 * Int(std::min(height(p), height(q))) + 2;

    const GaussInt pz = eval_main(p, z_theory).body().scalar;
    const GaussInt qz = eval_main(q, z_theory).body().scalar;
    const MultiPoly g(p.ring(), std::make_shared<const MultiPoly::VarList>(),
                      Node(gint_gcd(pz, qz)));
    const MultiPoly raw = reconstruct(g, z_theory, p.vars().back());
    MultiPoly candidate = normalize_unit(primitive_part(p.with_body(raw.body())));
    const bool success = associate_equal(candidate, primitive_part(cert.d));

    mpq_class ratio(z_theory, z_practical);
    ratio.canonicalize();
    return {std::move(cert), z_theory, z_practical, ratio, std::move(candidate), success};
}

} // namespace heugcd
