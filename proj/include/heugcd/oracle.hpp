#pragma once

// Reference gcd by subresultant polynomial remainder sequences, plus the
// root-bound and Bezout diagnostics for univariate integer polynomials.

#include "heugcd/multipoly.hpp"

#include <gmpxx.h>

#include <vector>

namespace heugcd {

/// Sparse pseudo-remainder of a by b in the main variable:
/// lc(b)^k * a == quotient * b + remainder, where k <= deg a - deg b + 1 is
/// the number of elimination steps taken. Requires b to have positive main
/// degree.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b);

/// Primitive part with respect to the main variable (PRS-based content).
MultiPoly main_primitive_part(const MultiPoly& p);

/// Unit-normalized gcd by recursion on variables and subresultant PRS.
MultiPoly prs_gcd(const MultiPoly& p, const MultiPoly& q);

/// A / |a_m| + 1 with A = max_{i<m} |a_i|, for coefficients a_0..a_m.
/// Every complex root lies strictly inside this radius.
mpq_class cauchy_root_bound(const std::vector<Int>& coeffs);

/// p*u + q*v == gamma*d, all univariate over Z, gamma > 0.
struct BezoutCertificate {
    MultiPoly u;
    MultiPoly v;
    Int gamma;
    MultiPoly d;
};

/// Extended Euclid over Q on p/d and q/d with denominators cleared.
/// Throws unsupported for multivariate or Gaussian input.
BezoutCertificate bezout_gamma(const MultiPoly& p, const MultiPoly& q);

struct FirstTryReport {
    BezoutCertificate certificate;
    Int z_theory;    // 2 * height(d) * gamma + 1
    Int z_practical; // 2 * min(height(p), height(q)) + 2
    mpq_class ratio; // z_theory / z_practical
    MultiPoly candidate;
    bool success;
};

/// One evaluation/reconstruction pass at z_theory; success when the
/// primitive candidate equals the primitive part of d up to units.
FirstTryReport verify_first_try_bound(const MultiPoly& p, const MultiPoly& q);

} // namespace heugcd
