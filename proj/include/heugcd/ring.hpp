#pragma once

// Coefficient rings: arbitrary-precision integers and Gaussian integers.
//
// Every coefficient is stored as a GaussInt; over the integers the imaginary
// part is identically zero, so one implementation serves both rings.

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace heugcd {

using Int = mpz_class;

enum class RingTag { Integers, GaussianIntegers };

std::string_view ring_name(RingTag ring) noexcept;

struct GaussInt {
    Int re;
    Int im;

    GaussInt() = default;
    GaussInt(Int r) : re(std::move(r)) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r) : re(r) {}
    GaussInt(int r) : re(r) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return is_real() && re == 1; }
    /// True for the four units 1, -1, i, -i.
    bool is_unit() const;

    GaussInt conj() const { return {re, -im}; }
    /// Euclidean norm re^2 + im^2.
    Int norm() const { return re * re + im * im; }

    GaussInt& operator+=(const GaussInt& o);
    GaussInt& operator-=(const GaussInt& o);
    GaussInt& operator*=(const GaussInt& o);

    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
};

GaussInt operator+(GaussInt a, const GaussInt& b);
GaussInt operator-(GaussInt a, const GaussInt& b);
GaussInt operator-(const GaussInt& a);
GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt operator*(const GaussInt& a, const Int& b);

std::string to_string(const GaussInt& a);
std::ostream& operator<<(std::ostream& os, const GaussInt& a);

/// Symmetric remainder of `a` modulo `z`, in (-z/2, z/2]. Requires z >= 3.
Int smod(const Int& a, const Int& z);

/// Componentwise smod.
GaussInt gsmod(const GaussInt& a, const Int& z);

/// Multiplies by the unit that yields re > 0 and im >= 0; zero stays zero.
GaussInt normalize_unit(const GaussInt& a);

/// The unit u with u * a unit-normalized (1 when a is zero).
GaussInt normalizing_unit(const GaussInt& a);

/// Quotient rounded to the nearest Gaussian integer, ties toward -inf per
/// component. The remainder a - q*b has norm < N(b).
GaussInt nearest_quotient(const GaussInt& a, const GaussInt& b);

/// Unit-normalized gcd; gint_gcd(0, 0) == 0.
GaussInt gint_gcd(const GaussInt& a, const GaussInt& b);

/// |a| over Z, ceil(sqrt(re^2 + im^2)) over Z[i].
Int coeff_height(const GaussInt& a);

/// Exact quotient a / b, or nullopt when b does not divide a.
/// Throws division_by_zero when b == 0.
std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b);

/// Exact division by a nonzero rational integer.
std::optional<GaussInt> exact_div(const GaussInt& a, const Int& b);

/// Number of bits in |z|.
std::size_t bit_length(const Int& z);

} // namespace heugcd
