#include "heugcd/selftest.hpp"

#include "heugcd/heugcd.hpp"
#include "heugcd/oracle.hpp"
#include "heugcd/random.hpp"
#include "heugcd/zadic.hpp"

namespace heugcd {

namespace {

bool divides(const MultiPoly& d, const MultiPoly& p) {
    return static_cast<bool>(try_divide_exact(p, d));
}

} // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SelftestCheck> out;

    for (RingTag ring : {RingTag::Integers, RingTag::GaussianIntegers}) {
        SelftestCheck c{"oracle agreement (" + std::string(ring_name(ring)) + ")", 0, 100};
        for (std::size_t i = 0; i < c.total; ++i) {
            PlantedSpec spec{ring, 1 + i % 3, 6, 1000, 4};
            const auto inst = planted_instance(rng, spec);
            const GcdResult r = gcd_auto(inst.p, inst.q);
            const MultiPoly d = prs_gcd(inst.p, inst.q);
            c.passed += associate_equal(r.gcd, d) && divides(inst.h, r.gcd);
        }
        out.push_back(c);
    }

    for (RingTag ring : {RingTag::Integers, RingTag::GaussianIntegers}) {
        SelftestCheck c{"codec round trip (" + std::string(ring_name(ring)) + ")", 0, 200};
        for (std::size_t i = 0; i < c.total; ++i) {
            const MultiPoly h = random_poly(rng, ring, default_vars(2), {4, 4},
                                            Int(rng.uniform(1U, 1000000U)), 6);
            const Int z = rng.uniform(Int(3), Int(5000));
            c.passed += eval_main(reconstruct(h, z, "t"), z) == h;
        }
        out.push_back(c);
    }

    {
        SelftestCheck c{"gaussian gcd divides", 0, 300};
        for (std::size_t i = 0; i < c.total; ++i) {
            const GaussInt a = random_scalar(rng, RingTag::GaussianIntegers, 50);
            const GaussInt b = random_scalar(rng, RingTag::GaussianIntegers, 50);
            const GaussInt g = gint_gcd(a, b);
            c.passed += exact_div(a, g) && exact_div(b, g) && normalize_unit(g) == g;
        }
        out.push_back(c);
    }

    {
        SelftestCheck c{"root bound", 0, 100};
        for (std::size_t i = 0; i < c.total; ++i) {
            const unsigned deg = rng.uniform(1U, 8U);
            std::vector<Int> roots, coeffs{Int(1)};
            for (unsigned k = 0; k < deg; ++k) {
                roots.push_back(rng.uniform(Int(-50), Int(50)));
                std::vector<Int> next(coeffs.size() + 1, Int(0));
                for (std::size_t j = 0; j < coeffs.size(); ++j) {
                    next[j + 1] += coeffs[j];
                    next[j] -= roots.back() * coeffs[j];
                }
                coeffs = std::move(next);
            }
            const mpq_class bound = cauchy_root_bound(coeffs);
            bool ok = true;
            for (const auto& r : roots) ok = ok && mpq_class(abs(r)) < bound;
            c.passed += ok;
        }
        out.push_back(c);
    }

    {
        SelftestCheck c{"first-try Bezout bound", 0, 30};
        for (std::size_t i = 0; i < c.total; ++i) {
            PlantedSpec spec{RingTag::Integers, 1, 8, 50, 5};
            const auto inst = planted_instance(rng, spec);
            c.passed += verify_first_try_bound(inst.p, inst.q).success;
        }
        out.push_back(c);
    }

    {
        SelftestCheck c{"prs fallback", 0, 5};
        HeuConfig tiny;
        tiny.size_guard = 8;
        for (std::size_t i = 0; i < c.total; ++i) {
            PlantedSpec spec{RingTag::Integers, 2, 4, Int("1000000000000"), 4};
            const auto inst = planted_instance(rng, spec);
            const GcdResult r = gcd_auto(inst.p, inst.q, tiny);
            c.passed += r.certified && associate_equal(r.gcd, prs_gcd(inst.p, inst.q));
        }
        out.push_back(c);
    }
    return out;
}

} // namespace heugcd
