#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gaussmf/gint.hpp"

using namespace gmf;

namespace {

GaussInt random_gauss(std::mt19937_64& rng, std::int64_t r)
{
    std::uniform_int_distribution<std::int64_t> d(-r, r);
    return {d(rng), d(rng)};
}

const Unit kUnits[] = {Unit::One, Unit::I, Unit::MinusOne, Unit::MinusI};

} // namespace

TEST(GaussInt, NormExamples)
{
    EXPECT_EQ(norm(GaussInt{3, 4}), 25u);
    EXPECT_EQ(norm(GaussInt{0, 0}), 0u);
    EXPECT_EQ(norm(GaussInt{1, 1}), 2u);
    EXPECT_EQ(norm(GaussInt{kCoordBound, -kCoordBound}), 2u * 2147483647ULL * 2147483647ULL);
}

TEST(GaussInt, CoordinateBoundRejected)
{
    EXPECT_THROW((GaussInt{kCoordBound + 1, 0}), DomainError);
    EXPECT_THROW((GaussInt{0, -kCoordBound - 1}), DomainError);
    EXPECT_THROW((void)mul(GaussInt{kCoordBound, 0}, GaussInt{2, 0}), DomainError);
    EXPECT_THROW((void)add(GaussInt{kCoordBound, 0}, GaussInt{1, 0}), DomainError);
}

TEST(GaussInt, ArgConventions)
{
    EXPECT_EQ(arg(GaussInt{1, 0}), 0.0);
    EXPECT_EQ(arg(GaussInt{-1, 0}), -std::numbers::pi);
    EXPECT_EQ(arg(GaussInt{0, 0}), 0.0);
    EXPECT_NEAR(arg(GaussInt{0, 1}), std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(arg(GaussInt{0, -1}), -std::numbers::pi / 2, 1e-15);
}

TEST(GaussInt, CanonicalizeExamples)
{
    EXPECT_EQ(canonicalize(GaussInt{-3, 0}), std::make_pair(Unit::MinusOne, GaussInt{3, 0}));
    EXPECT_EQ(canonicalize(GaussInt{-1, 1}), std::make_pair(Unit::I, GaussInt{1, 1}));
    EXPECT_EQ(canonicalize(GaussInt{7, 0}), std::make_pair(Unit::One, GaussInt{7, 0}));
    EXPECT_THROW((void)canonicalize(GaussInt{0, 0}), DomainError);
}

TEST(GaussInt, CanonicalPartitionProperty)
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20000; ++t) {
        const GaussInt z = random_gauss(rng, 50);
        if (z.is_zero()) continue;
        int in_q1 = 0;
        for (Unit u : kUnits) {
            const GaussInt w = mul(u, z);
            if (w.re() > 0 && w.im() >= 0) ++in_q1;
        }
        ASSERT_EQ(in_q1, 1) << z;
        const auto [u, w] = canonicalize(z);
        ASSERT_EQ(mul(u, w), z);
        ASSERT_TRUE(w.re() > 0 && w.im() >= 0);
    }
}

TEST(GaussInt, RingOperations)
{
    EXPECT_EQ(mul(GaussInt{1, 1}, GaussInt{1, -1}), (GaussInt{2, 0}));
    EXPECT_EQ(exact_div(GaussInt{5, 0}, GaussInt{2, 1}), (GaussInt{2, -1}));
    EXPECT_THROW((void)exact_div(GaussInt{3, 0}, GaussInt{2, 0}), DomainError);
    EXPECT_THROW((void)exact_div(GaussInt{3, 0}, GaussInt{0, 0}), DomainError);
    EXPECT_EQ(add(GaussInt{1, 2}, GaussInt{3, -5}), (GaussInt{4, -3}));
    EXPECT_EQ(sub(GaussInt{1, 2}, GaussInt{3, -5}), (GaussInt{-2, 7}));
}

TEST(GaussInt, DivmodRemainderSmall)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20000; ++t) {
        const GaussInt a = random_gauss(rng, 100000);
        const GaussInt b = random_gauss(rng, 300);
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        ASSERT_EQ(add(mul(q, b), r), a);
        ASSERT_LE(2 * norm(r), norm(b));
    }
}

TEST(GaussInt, DivmodTieRuleTowardMinusInfinity)
{
    // 1/2 and -1/2 both round down.
    EXPECT_EQ(divmod(GaussInt{1, 1}, GaussInt{2, 0}).quotient, (GaussInt{0, 0}));
    EXPECT_EQ(divmod(GaussInt{-1, -1}, GaussInt{2, 0}).quotient, (GaussInt{-1, -1}));
    EXPECT_EQ(divmod(GaussInt{3, 0}, GaussInt{2, 0}).quotient, (GaussInt{1, 0}));
}

TEST(GaussInt, MultiplicativeNorm)
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20000; ++t) {
        const GaussInt a = random_gauss(rng, 30000);
        const GaussInt b = random_gauss(rng, 30000);
        ASSERT_EQ(norm(mul(a, b)), norm(a) * norm(b));
    }
}

TEST(GaussInt, GcdNormExamples)
{
    const GaussInt n{12, 5};
    EXPECT_EQ(gcd_norm(n, n), norm(n));
    EXPECT_EQ(gcd_norm(GaussInt{3, 0}, GaussInt{7, 0}), 1u);
    // 2 = -i (1+i)^2
    EXPECT_EQ(mul(Unit::MinusI, mul(GaussInt{1, 1}, GaussInt{1, 1})), (GaussInt{2, 0}));
    EXPECT_EQ(gcd_norm(GaussInt{2, 0}, GaussInt{1, 1}), 2u);
    EXPECT_EQ(gcd_norm(GaussInt{0, 0}, GaussInt{3, 4}), 25u);
    EXPECT_THROW((void)gcd_norm(GaussInt{0, 0}, GaussInt{0, 0}), DomainError);
}

TEST(GaussInt, GcdContractProperty)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 5000; ++t) {
        const GaussInt a = random_gauss(rng, 2000);
        const GaussInt b = random_gauss(rng, 2000);
        if (a.is_zero() && b.is_zero()) continue;
        const std::uint64_t g = gcd_norm(a, b);
        if (!a.is_zero()) ASSERT_EQ(norm(a) % g, 0u);
        if (!b.is_zero()) ASSERT_EQ(norm(b) % g, 0u);
        ASSERT_EQ(g, gcd_norm(b, a));
        const GaussInt d = gcd(a, b);
        ASSERT_TRUE(divides(d, a) && divides(d, b));
        for (Unit u : kUnits) {
            for (Unit v : kUnits) {
                ASSERT_EQ(gcd_norm(mul(u, a), mul(v, b)), g);
            }
        }
    }
}

TEST(GaussInt, ToString)
{
    EXPECT_EQ(to_string(GaussInt{3, 4}), "3+4i");
    EXPECT_EQ(to_string(GaussInt{2, -1}), "2-i");
    EXPECT_EQ(to_string(GaussInt{0, -3}), "-3i");
    EXPECT_EQ(to_string(GaussInt{-7, 0}), "-7");
}
