#pragma once

// Balanced base-z digits and the reconstruction of a polynomial in a new
// variable from its value at z.

#include "heugcd/multipoly.hpp"
#include "heugcd/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heugcd {

/// n = sum(digits[i] * base^i). Every digit has components in (-base/2, base/2];
/// the last digit is nonzero and zero is the empty expansion.
struct DigitExpansion {
    Int base;
    std::vector<GaussInt> digits;

    GaussInt value() const;
};

DigitExpansion symmetric_digits(const GaussInt& n, const Int& z);

/// Peels balanced digits of h coefficientwise: digit j becomes the
/// coefficient of new_var^j. The result G satisfies eval_main(G, z) == h.
MultiPoly reconstruct(const MultiPoly& h, const Int& z, const std::string& new_var);

/// As reconstruct, but gives up (nullopt) once more than `max_digits`
/// digits would be needed.
std::optional<MultiPoly> reconstruct_bounded(const MultiPoly& h, const Int& z,
                                             const std::string& new_var,
                                             std::size_t max_digits);

} // namespace heugcd
