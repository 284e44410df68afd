#pragma once

// Test-only oracles, independent of the library's Euclidean machinery.

#include "heugcd/ring.hpp"

#include <vector>

namespace heugcd::testing {

/// All Gaussian integers with re^2 + im^2 <= bound.
inline std::vector<GaussInt> gaussians_up_to_norm(long bound) {
    std::vector<GaussInt> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            if (a * a + b * b <= bound) out.push_back(GaussInt(Int(a), Int(b)));
    return out;
}

/// d divides n, checked by solving d*q = n over exact complex division
/// (n * conj(d) / N(d) must be integral).
inline bool brute_divides(const GaussInt& d, const GaussInt& n) {
    if (d.is_zero()) return n.is_zero();
    const Int nd = d.norm();
    const Int re = n.re * d.re + n.im * d.im;
    const Int im = n.im * d.re - n.re * d.im;
    return re % nd == 0 && im % nd == 0;
}

/// A common divisor of maximal norm found by enumeration.
inline GaussInt brute_gcd(const GaussInt& a, const GaussInt& b) {
    if (a.is_zero() && b.is_zero()) return GaussInt(0);
    long bound = 0;
    if (!a.is_zero()) bound = a.norm().get_si();
    if (!b.is_zero() && (bound == 0 || b.norm().get_si() < bound)) bound = b.norm().get_si();
    GaussInt best(1);
    for (const auto& d : gaussians_up_to_norm(bound)) {
        if (d.is_zero()) continue;
        if (brute_divides(d, a) && brute_divides(d, b) && d.norm() > best.norm()) best = d;
    }
    return best;
}

/// Equal up to one of the units 1, -1, i, -i.
inline bool gauss_associates(const GaussInt& a, const GaussInt& b) {
    const GaussInt units[] = {GaussInt(1), GaussInt(-1), GaussInt(Int(0), Int(1)),
                              GaussInt(Int(0), Int(-1))};
    for (const auto& u : units)
        if (u * a == b) return true;
    return false;
}

} // namespace heugcd::testing
