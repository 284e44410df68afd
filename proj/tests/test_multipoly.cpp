#include "brute_force.hpp"

#include "printing.hpp"

#include "heugcd/error.hpp"
#include "heugcd/multipoly.hpp"
#include "heugcd/oracle.hpp"
#include "heugcd/parse.hpp"
#include "heugcd/random.hpp"

#include <gtest/gtest.h>

using namespace heugcd;

namespace {

MultiPoly zp(const char* s, std::vector<std::string> vars = {"x", "y"}) {
    return parse_poly(s, RingTag::Integers, vars);
}

MultiPoly gp(const char* s, std::vector<std::string> vars = {"x", "y"}) {
    return parse_poly(s, RingTag::GaussianIntegers, vars);
}

GaussInt gi(long re, long im) { return GaussInt(Int(re), Int(im)); }

} // namespace

TEST(Arith, Examples) {
    EXPECT_EQ(zp("x+1") * zp("x-1"), zp("x^2-1"));
    EXPECT_EQ(zp("x*y+2") + zp("-x*y"), zp("2"));
    EXPECT_TRUE((zp("x*y+2") + zp("-x*y")).is_constant());
    EXPECT_TRUE((zp("0") * zp("x^3+y")).is_zero());
    EXPECT_EQ(arith(zp("x"), zp("y"), ArithOp::Sub), zp("x-y"));
}

TEST(Arith, RejectsMismatchedOperands) {
    EXPECT_THROW(zp("x") + zp("x", {"x"}), structural_error);
    EXPECT_THROW(zp("x") * gp("x"), structural_error);
}

TEST(Arith, CanonicalForm) {
    // A cancelled main variable collapses to the lower node.
    const MultiPoly p = zp("x*y + x") - zp("x*y");
    EXPECT_EQ(p.body().var, 0);
    EXPECT_EQ(p.main_degree(), 0u);
    EXPECT_TRUE(zp("y - y").body().is_scalar());
}

TEST(Arith, RingAxiomsRandomized) {
    Rng rng(21);
    const auto vars = default_vars(3);
    for (RingTag ring : {RingTag::Integers, RingTag::GaussianIntegers}) {
        for (int i = 0; i < 600; ++i) {
            auto r = [&] { return random_poly(rng, ring, vars, {2, 2, 2}, 20, 4); };
            const MultiPoly a = r(), b = r(), c = r();
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_TRUE((a - a).is_zero());
        }
    }
}

TEST(EvalMain, Examples) {
    EXPECT_EQ(eval_main(zp("x*y + 2"), 5), zp("5*x + 2", {"x"}));
    EXPECT_EQ(eval_main(zp("x^2 - 1", {"x"}), 3).constant_value(), GaussInt(8));
    const MultiPoly p = zp("3*y^2 + x*y + x^2 - 4");
    EXPECT_EQ(eval_main(p, 0), zp("x^2 - 4", {"x"}));
    EXPECT_THROW(eval_main(MultiPoly(RingTag::Integers, MultiPoly::VarList{}), 1), structural_error);
}

TEST(EvalMain, IsRingHomomorphism) {
    Rng rng(22);
    const auto vars = default_vars(2);
    for (RingTag ring : {RingTag::Integers, RingTag::GaussianIntegers}) {
        for (int i = 0; i < 500; ++i) {
            const MultiPoly a = random_poly(rng, ring, vars, {3, 3}, 50, 5);
            const MultiPoly b = random_poly(rng, ring, vars, {3, 3}, 50, 5);
            const Int z = rng.uniform(Int(-1000), Int(1000));
            EXPECT_EQ(eval_main(a * b, z), eval_main(a, z) * eval_main(b, z));
            EXPECT_EQ(eval_main(a + b, z), eval_main(a, z) + eval_main(b, z));
        }
    }
}

TEST(EvalMain, HeightGrowthBound) {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const MultiPoly p = random_poly(rng, RingTag::Integers, default_vars(2), {4, 4}, 1000, 6);
        const Int z = rng.uniform(Int(3), Int(10000));
        Int bound;
        mpz_pow_ui(bound.get_mpz_t(), Int(z + 1).get_mpz_t(), p.main_degree());
        EXPECT_LE(height(eval_main(p, z)), height(p) * bound);
    }
}

TEST(Height, Examples) {
    EXPECT_EQ(height(zp("3*x^2 - 7*x + 2", {"x"})), 7);
    EXPECT_EQ(height(zp("0")), 0);
    EXPECT_EQ(height(gp("(3+4*i)*x*y - 2")), 5);
}

TEST(Content, Examples) {
    const MultiPoly p = zp("6*x + 9", {"x"});
    EXPECT_EQ(icontent(p), GaussInt(3));
    EXPECT_EQ(primitive_part(p), zp("2*x + 3", {"x"}));
    EXPECT_EQ(icontent(zp("x + 1", {"x"})), GaussInt(1));
    // 2+2i divides -4 (quotient -1+i), so the content is 2+2i itself.
    EXPECT_EQ(icontent(gp("(2+2*i)*x - 4", {"x"})), gi(2, 2));
    EXPECT_TRUE(heugcd::testing::gauss_associates(heugcd::testing::brute_gcd(gi(2, 2), gi(-4, 0)),
                                                  gi(2, 2)));
    EXPECT_EQ(icontent(zp("0")), GaussInt(0));
    EXPECT_TRUE(primitive_part(zp("0")).is_zero());
}

TEST(Content, FactorisationProperty) {
    Rng rng(24);
    for (RingTag ring : {RingTag::Integers, RingTag::GaussianIntegers}) {
        for (int i = 0; i < 500; ++i) {
            MultiPoly p = random_poly(rng, ring, default_vars(2), {3, 3}, 30, 5);
            p = scale(p, random_scalar(rng, ring, 12));
            EXPECT_EQ(scale(primitive_part(p), icontent(p)), p);
            EXPECT_TRUE(icontent(primitive_part(p)).is_unit());
        }
    }
}

TEST(ContentMain, Examples) {
    const std::vector<std::string> yx{"y", "x"};
    EXPECT_EQ(content_main(zp("y*x^2 + y^2*x", yx), prs_gcd), zp("y", {"y"}));
    EXPECT_EQ(content_main(zp("x^2 + 1", yx), prs_gcd), zp("1", {"y"}));
    EXPECT_EQ(content_main(zp("2*y*x + 4*y", yx), prs_gcd), zp("2*y", {"y"}));
    // Univariate: the integer content.
    EXPECT_EQ(content_main(zp("6*x + 4", {"x"}), prs_gcd).constant_value(), GaussInt(2));
}

TEST(TryDivideExact, Examples) {
    EXPECT_EQ(try_divide_exact(zp("x^2 - 1", {"x"}), zp("x + 1", {"x"})), zp("x - 1", {"x"}));
    EXPECT_FALSE(try_divide_exact(zp("x^2 + 1", {"x"}), zp("x + 1", {"x"})).has_value());
    EXPECT_EQ(try_divide_exact(zp("x*y + y"), zp("y")), zp("x + 1"));
    EXPECT_THROW(try_divide_exact(zp("x"), zp("0")), division_by_zero);
    EXPECT_FALSE(try_divide_exact(zp("x"), zp("y")).has_value());
    EXPECT_FALSE(try_divide_exact(zp("3*x"), zp("2")).has_value());
}

TEST(TryDivideExact, ProductsDivideAndRemaindersFail) {
    Rng rng(25);
    for (RingTag ring : {RingTag::Integers, RingTag::GaussianIntegers}) {
        for (int i = 0; i < 400; ++i) {
            const auto vars = default_vars(2);
            const MultiPoly a = random_poly(rng, ring, vars, {3, 3}, 40, 5);
            MultiPoly b = random_poly(rng, ring, vars, {3, 3}, 40, 5);
            EXPECT_EQ(try_divide_exact(a * b, b), a);
            if (b.main_degree() == 0) continue;
            // r of lower main degree than b.
            std::vector<unsigned> deg{3, b.main_degree() - 1};
            const MultiPoly r = random_poly(rng, ring, vars, deg, 40, 3);
            EXPECT_FALSE(try_divide_exact(a * b + r, b).has_value());
        }
    }
}

TEST(NormalizeUnit, Examples) {
    EXPECT_EQ(normalize_unit(zp("-2*x + 4", {"x"})), zp("2*x - 4", {"x"}));
    EXPECT_EQ(normalize_unit(gp("i*x", {"x"})), gp("x", {"x"}));
    EXPECT_TRUE(normalize_unit(zp("0")).is_zero());
    const MultiPoly p = gp("(2-3*i)*x*y + 5");
    EXPECT_EQ(normalize_unit(normalize_unit(p)), normalize_unit(p));
    EXPECT_TRUE(associate_equal(p, scale(p, gi(0, -1))));
}

TEST(MainCoefficients, ViewOverLowerVariables) {
    const auto coefs = zp("(x+1)*y^2 + 3").main_coefficients();
    ASSERT_EQ(coefs.size(), 2u);
    EXPECT_EQ(coefs[0].first, 2u);
    EXPECT_EQ(coefs[0].second, zp("x + 1", {"x"}));
    EXPECT_EQ(coefs[1].first, 0u);
    EXPECT_EQ(coefs[1].second, zp("3", {"x"}));
}
