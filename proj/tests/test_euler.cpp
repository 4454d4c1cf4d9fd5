#include <gtest/gtest.h>

#include <cmath>

#include "gaussmf/euler.hpp"

using namespace gmf;

namespace {

// Direct product and sum over the test's own prime list.
struct Oracle {
    double product = 1.0;
    double s = 0.0;
};

Oracle direct(const std::function<double(std::uint64_t, bool)>& fp, std::uint64_t bound)
{
    Oracle o;
    auto is_prime = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    };
    for (std::uint64_t p = 2; p < bound; ++p) {
        if (!is_prime(p)) continue;
        if (p == 2 || p % 4 == 1) {
            const int copies = p == 2 ? 1 : 2;
            const double v = fp(p, false);
            for (int c = 0; c < copies; ++c) {
                o.product *= (p - 1.0) / (p - v);
                o.s += std::fabs(1 - v) / p;
            }
        } else if (p * p < bound) {
            const double n = static_cast<double>(p * p);
            const double v = fp(p, true);
            o.product *= (n - 1) / (n - v);
            o.s += std::fabs(1 - v) / n;
        }
    }
    return o;
}

} // namespace

TEST(Euler, ConstantOne)
{
    const auto r = partial_P(constant_one(), 100000);
    EXPECT_EQ(r.partial_value, Complex(1.0, 0.0));
    EXPECT_EQ(r.verdict, Verdict::Converged);
    EXPECT_EQ(r.s_full, 0.0);
    ASSERT_TRUE(r.tail_bound.has_value());
    EXPECT_EQ(*r.tail_bound, 0.0);
    EXPECT_EQ(r.factor_count, sieve_p1(100000).size());
    EXPECT_EQ(rational_euler_value(rational_one(), 100000), 1.0);
    EXPECT_THROW((void)partial_P(constant_one(), 1), DomainError);
}

TEST(Euler, LiouvilleAgainstDirectOracle)
{
    const auto o = direct([](std::uint64_t, bool inert) { return inert ? 1.0 : -1.0; }, 1'000'000);
    const auto r = partial_P(liouville_norm(), 1'000'000);
    EXPECT_NEAR(r.partial_value.real(), o.product, 1e-12);
    EXPECT_EQ(r.partial_value.imag(), 0.0);
    EXPECT_NEAR(r.s_full, o.s, 1e-10);
    EXPECT_GT(r.s_full, 5.0);
    EXPECT_FALSE(r.tail_bound.has_value());
    EXPECT_EQ(r.verdict, Verdict::TendsToZero);
    EXPECT_EQ(vanishing_probe(liouville_norm(), 1'000'000), Verdict::TendsToZero);
}

TEST(Euler, ZeroAtPrimes)
{
    const MultFunc zero("zero", Unit::One, [](const CanonicalPrime&) { return Complex{}; });
    const auto o = direct([](std::uint64_t, bool) { return 0.0; }, 100000);
    const auto small = partial_P(zero, 100000);
    EXPECT_NEAR(small.partial_value.real(), o.product, 1e-12);
    // S grows like log log B; it only crosses the divergence threshold near 1.5e8
    EXPECT_EQ(partial_P(zero, 1'000'000).verdict, Verdict::Inconclusive);
    const auto big = partial_P(zero, 200'000'000);
    EXPECT_GT(big.s_full, 3.0);
    EXPECT_EQ(big.verdict, Verdict::TendsToZero);
}

TEST(Euler, FiniteSupportConverges)
{
    const MultFunc f("finite", Unit::One,
                     [](const CanonicalPrime& p) { return p.norm < 50 ? Complex(-0.5, 0.0) : Complex(1.0, 0.0); },
                     [](std::uint64_t b) { return b >= 50 ? 0.0 : 100.0; });
    const auto r = partial_P(f, 10000);
    EXPECT_EQ(r.verdict, Verdict::Converged);
    EXPECT_EQ(partial_P(f, 10000).partial_value, partial_P(f, 60).partial_value);
}

TEST(Euler, Chi4ClosedForm)
{
    for (std::uint64_t b : {3ULL, 10ULL, 1000ULL, 100000ULL, 1000000ULL}) {
        EXPECT_NEAR(rational_euler_value(rational_chi4(), b), 0.5, 1e-12);
        EXPECT_NEAR(partial_P(chi4_complete(), b).partial_value.real(), 0.5, 1e-12);
    }
    EXPECT_EQ(partial_P(chi4_complete(), 1000).verdict, Verdict::Converged);
}

TEST(Euler, CrossFormulaIdentity)
{
    for (const auto& g : {rational_one(), rational_liouville(), rational_chi4()}) {
        const auto f = from_rational("g", g);
        for (std::uint64_t b : {2ULL, 3ULL, 9ULL, 10ULL, 49ULL, 50ULL, 100000ULL}) {
            EXPECT_NEAR(partial_P(f, b).partial_value.real(), rational_euler_value(g, b), 1e-12) << b;
        }
    }
}

TEST(Euler, LiouvilleClosedFormShrinks)
{
    // 1/3 prod_{p = 1 (4)} ((p-1)/(p+1))^2, inert factors equal 1
    double prev = 1.0;
    for (std::uint64_t b : {100ULL, 10000ULL, 1000000ULL}) {
        const double v = rational_euler_value(rational_liouville(), b);
        EXPECT_LT(v, prev);
        prev = v;
    }
    const auto o = direct([](std::uint64_t, bool inert) { return inert ? 1.0 : -1.0; }, 1'000'000);
    EXPECT_NEAR(prev, o.product, 1e-12);
}

TEST(Euler, MonotoneModulusAndConjugation)
{
    const auto f = random_pm1(11);
    double prev = 2.0;
    for (std::uint64_t b : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
        const double m = std::abs(partial_P(f, b).partial_value);
        EXPECT_LE(m, prev);
        EXPECT_LE(m, 1.0);
        prev = m;
    }
    const MultFunc rot("rot", Unit::I, [](const CanonicalPrime& p) {
        return p.cls == PrimeClass::Split ? Complex(0.0, 1.0) : Complex(-1.0, 0.0);
    });
    const auto a = partial_P(rot, 20000).partial_value;
    const auto b = partial_P(rot.conjugate(), 20000).partial_value;
    EXPECT_LT(std::abs(b - std::conj(a)), 1e-14);
}

TEST(Euler, InfiniteArgumentSetIsInconclusive)
{
    const MultFunc spin("spin", Unit::One, [](const CanonicalPrime& p) {
        return std::polar(1.0, 0.001 * static_cast<double>(p.norm % 5000));
    });
    EXPECT_EQ(partial_P(spin, 100000).verdict, Verdict::Inconclusive);
}

TEST(Euler, QuadrantWeightedLimit)
{
    const auto chi = chi4_complete();
    EXPECT_NEAR(quadrant_limit(chi, JordanRegion::disk(0.3, 0.2, 1), 10000).real(), 0.5, 1e-12);
    const auto flipped = chi.with_value_at_i(Unit::MinusOne);
    EXPECT_LT(std::abs(quadrant_limit(flipped, JordanRegion::rectangle(-1, 1, -1, 1), 10000)), 1e-12);
    const auto turned = chi.with_value_at_i(Unit::I);
    EXPECT_LT(std::abs(quadrant_limit(turned, JordanRegion::rectangle(0, 1, 0, 1), 10000) - Complex(0.5, 0.0)),
              1e-12);
    EXPECT_EQ(quadrant_limit(liouville_norm(), JordanRegion::disk(0, 0, 1), 1'000'000), Complex(0.0, 0.0));
    EXPECT_THROW((void)quadrant_limit(random_pm1(1), JordanRegion::disk(0, 0, 1), 10000), DomainError);
}
