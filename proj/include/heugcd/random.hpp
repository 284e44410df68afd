#pragma once

// Seeded generators for random polynomials and planted-gcd instances.

#include "heugcd/multipoly.hpp"

#include <gmpxx.h>

#include <cstdint>

namespace heugcd {

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Uniform in [lo, hi].
    Int uniform(const Int& lo, const Int& hi);
    unsigned uniform(unsigned lo, unsigned hi);
    bool coin() { return uniform(0U, 1U) == 1; }

private:
    gmp_randclass state_;
};

/// Nonzero scalar of coeff_height <= height (height >= 1).
GaussInt random_scalar(Rng& rng, RingTag ring, const Int& height);

/// Sparse random polynomial with up to `terms` terms, each exponent of
/// variable v at most max_degree[v]. Never zero.
MultiPoly random_poly(Rng& rng, RingTag ring, const MultiPoly::VarList& vars,
                      const std::vector<unsigned>& max_degree, const Int& height,
                      std::size_t terms);

/// Dense univariate polynomial of exact degree `degree`.
MultiPoly random_dense_univariate(Rng& rng, RingTag ring, const std::string& var,
                                  unsigned degree, const Int& height);

struct PlantedSpec {
    RingTag ring = RingTag::Integers;
    std::size_t num_vars = 1;
    unsigned max_degree = 6; // per variable, in p and q
    Int height = 1000;       // of the factors' coefficients
    std::size_t max_terms = 6;
};

/// p = a*h and q = b*h; h is the planted common factor.
struct PlantedInstance {
    MultiPoly a, b, h, p, q;
};

PlantedInstance planted_instance(Rng& rng, const PlantedSpec& spec);

/// Default variable names x, y, z, w, v, u, ...
MultiPoly::VarList default_vars(std::size_t n);

} // namespace heugcd
