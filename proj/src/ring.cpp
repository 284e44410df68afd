#include "heugcd/ring.hpp"

#include "heugcd/error.hpp"

#include <sstream>

namespace heugcd {

std::string_view ring_name(RingTag ring) noexcept {
    return ring == RingTag::Integers ? "z" : "zi";
}

bool GaussInt::is_unit() const {
    if (is_real()) return abs(re) == 1;
    return sgn(re) == 0 && abs(im) == 1;
}

GaussInt& GaussInt::operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
    *this = *this * o;
    return *this;
}

GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    if (a.is_real() && b.is_real()) return GaussInt(Int(a.re * b.re));
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt operator*(const GaussInt& a, const Int& b) {
    return {a.re * b, a.im * b};
}

std::string to_string(const GaussInt& a) {
    if (a.is_real()) return a.re.get_str();
    std::string s;
    if (sgn(a.re) != 0) s = a.re.get_str();
    if (sgn(a.im) > 0 && !s.empty()) s += '+';
    if (a.im == -1) s += '-';
    else if (a.im != 1) s += a.im.get_str() + "*";
    s += 'i';
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussInt& a) {
    return os << to_string(a);
}

Int smod(const Int& a, const Int& z) {
    if (z < 3) throw invalid_modulus("modulus must be at least 3, got " + z.get_str());
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), z.get_mpz_t());
    if (2 * r > z) r -= z;
    return r;
}

GaussInt gsmod(const GaussInt& a, const Int& z) {
    if (a.is_real()) return GaussInt(smod(a.re, z));
    return {smod(a.re, z), smod(a.im, z)};
}

GaussInt normalizing_unit(const GaussInt& a) {
    const int r = sgn(a.re);
    const int i = sgn(a.im);
    if (r > 0 && i >= 0) return GaussInt(1);
    if (r <= 0 && i > 0) return GaussInt(Int(0), Int(-1)); // -i * a
    if (r < 0 && i <= 0) return GaussInt(-1);
    if (r >= 0 && i < 0) return GaussInt(Int(0), Int(1)); // i * a
    return GaussInt(1);                                   // zero
}

GaussInt normalize_unit(const GaussInt& a) {
    if (a.is_real()) return GaussInt(Int(abs(a.re)));
    return normalizing_unit(a) * a;
}

namespace {

// Nearest integer to n/d (d > 0), ties toward -inf: ceil((2n - d) / 2d).
Int round_div(const Int& n, const Int& d) {
    Int num = 2 * n - d;
    Int den = 2 * d;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

GaussInt nearest_quotient(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw division_by_zero("Gaussian division by zero");
    const GaussInt num = a * b.conj();
    const Int n = b.norm();
    return {round_div(num.re, n), round_div(num.im, n)};
}

GaussInt gint_gcd(const GaussInt& a, const GaussInt& b) {
    if (a.is_real() && b.is_real()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
        return GaussInt(std::move(g));
    }
    GaussInt x = a;
    GaussInt y = b;
    while (!y.is_zero()) {
        GaussInt r = x - nearest_quotient(x, y) * y;
        x = std::move(y);
        y = std::move(r);
    }
    return normalize_unit(x);
}

Int coeff_height(const GaussInt& a) {
    if (a.is_real()) return abs(a.re);
    const Int n = a.norm();
    Int s = sqrt(n);
    if (s * s < n) ++s;
    return s;
}

std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw division_by_zero("exact division by zero");
    if (b.is_real()) return exact_div(a, b.re);
    const GaussInt num = a * b.conj();
    const Int n = b.norm();
    if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    return q;
}

std::optional<GaussInt> exact_div(const GaussInt& a, const Int& b) {
    if (sgn(b) == 0) throw division_by_zero("exact division by zero");
    if (!mpz_divisible_p(a.re.get_mpz_t(), b.get_mpz_t()) ||
        !mpz_divisible_p(a.im.get_mpz_t(), b.get_mpz_t()))
        return std::nullopt;
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::size_t bit_length(const Int& z) {
    if (sgn(z) == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

} // namespace heugcd
