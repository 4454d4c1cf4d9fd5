#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <thread>

#include "gaussmf/multfunc.hpp"

using namespace gmf;

namespace {

const Unit kUnits[] = {Unit::One, Unit::I, Unit::MinusOne, Unit::MinusI};

std::filesystem::path write_temp(const std::string& name, const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

// A function with non-real values and f(i) = i, to exercise unit handling.
MultFunc twisted()
{
    PrimeRule rule = [](const CanonicalPrime& p) {
        return std::polar(1.0, 0.37 * static_cast<double>(p.value.re() - 2 * p.value.im()));
    };
    return MultFunc("twisted", Unit::I, rule);
}

} // namespace

TEST(MultFunc, BuiltinValues)
{
    const auto one = constant_one();
    const auto lam = liouville_norm();
    const auto chi = chi4_complete();
    for (const GaussInt z : {GaussInt{1, 0}, GaussInt{3, 4}, GaussInt{-6, 2}, GaussInt{0, 7}}) {
        EXPECT_EQ(eval(one, z), Complex(1.0, 0.0));
        EXPECT_EQ(eval(lam, z), Complex(std::pow(-1.0, big_omega(norm(z))), 0.0));
    }
    EXPECT_EQ(eval(chi, GaussInt{1, 1}), Complex(0.0, 0.0));
    EXPECT_EQ(eval(chi, GaussInt{3, 0}), Complex(1.0, 0.0));
    EXPECT_EQ(eval(chi, GaussInt{2, 1}), Complex(1.0, 0.0));
    EXPECT_EQ(eval(lam, GaussInt{3, 0}), Complex(1.0, 0.0));
    EXPECT_EQ(eval(lam, GaussInt{2, 1}), Complex(-1.0, 0.0));
    EXPECT_TRUE(one.tail_envelope().has_value());
    EXPECT_FALSE(lam.tail_envelope().has_value());
    EXPECT_TRUE(chi.tail_envelope().has_value());
}

TEST(MultFunc, CompletelyMultiplicative)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> d(-300, 300);
    const MultFunc fs[] = {liouville_norm(), chi4_complete(), random_pm1(5), twisted()};
    for (const auto& f : fs) {
        for (int t = 0; t < 2000; ++t) {
            const GaussInt a{d(rng), d(rng)};
            const GaussInt b{d(rng), d(rng)};
            if (a.is_zero() || b.is_zero()) continue;
            const Complex lhs = eval(f, mul(a, b));
            const Complex rhs = eval(f, a) * eval(f, b);
            ASSERT_LT(std::abs(lhs - rhs), 1e-9) << f.name() << " " << a << " " << b;
        }
    }
}

TEST(MultFunc, UnitCoherence)
{
    const auto f = twisted();
    EXPECT_EQ(f.at_unit(Unit::One), Complex(1.0, 0.0));
    EXPECT_EQ(f.at_unit(Unit::I), Complex(0.0, 1.0));
    EXPECT_EQ(f.at_unit(Unit::MinusOne), Complex(-1.0, 0.0));
    for (Unit u : kUnits) {
        for (Unit v : kUnits) {
            EXPECT_EQ(f.at_unit(u * v), f.at_unit(u) * f.at_unit(v));
        }
    }
    const auto g = f.with_value_at_i(Unit::MinusOne);
    EXPECT_EQ(g.at_unit(Unit::I), Complex(-1.0, 0.0));
    EXPECT_EQ(g.at_unit(Unit::MinusI), Complex(-1.0, 0.0));
    EXPECT_EQ(g.at_unit(Unit::MinusOne), Complex(1.0, 0.0));
}

TEST(MultFunc, FactorizerPathAgrees)
{
    const Factorizer fz(1'000'000);
    const auto f = twisted();
    for (std::int64_t m = -30; m <= 30; ++m) {
        for (std::int64_t n = -30; n <= 30; ++n) {
            if (m == 0 && n == 0) continue;
            ASSERT_LT(std::abs(eval(f, GaussInt{m, n}) - eval(f, GaussInt{m, n}, fz)), 1e-12);
        }
    }
}

TEST(MultFunc, ConjugateFunction)
{
    const auto f = twisted();
    const auto g = f.conjugate();
    EXPECT_EQ(g.value_at_i(), Unit::MinusI);
    for (const GaussInt z : {GaussInt{3, -5}, GaussInt{0, 11}, GaussInt{-8, -1}}) {
        EXPECT_LT(std::abs(eval(g, z) - std::conj(eval(f, z))), 1e-12);
    }
}

TEST(MultFunc, FromRationalMatchesGOfNorm)
{
    const RationalRule rules[] = {rational_liouville(), rational_chi4(), rational_one()};
    for (const auto& g : rules) {
        const auto f = from_rational("g", g);
        for (std::int64_t m = 1; m <= 50; ++m) {
            for (std::int64_t n = 1; n <= 50; ++n) {
                const GaussInt z{m, n};
                ASSERT_EQ(eval(f, z), eval_rational(g, norm(z))) << z;
            }
        }
    }
}

TEST(MultFunc, Chi4VanishesExactlyOnEvenNorms)
{
    const auto chi = chi4_complete();
    for (std::int64_t m = 1; m <= 60; ++m) {
        for (std::int64_t n = 1; n <= 60; ++n) {
            const Complex v = eval(chi, GaussInt{m, n});
            if ((m - n) % 2 == 0) {
                ASSERT_EQ(v, Complex(0.0, 0.0));
            } else {
                ASSERT_EQ(v, Complex(1.0, 0.0));
            }
        }
    }
}

TEST(MultFunc, RandomSignsDeterministicAndBalanced)
{
    const auto a = random_pm1(42);
    const auto b = random_pm1(42);
    const auto c = random_pm1(43);
    const auto primes = sieve_p1(100'000);
    double sum = 0.0;
    int differ = 0;
    for (const auto& p : primes) {
        const Complex v = a.at_prime(p);
        ASSERT_EQ(v, b.at_prime(p));
        ASSERT_TRUE(v == Complex(1.0, 0.0) || v == Complex(-1.0, 0.0));
        sum += v.real();
        differ += v != c.at_prime(p);
    }
    EXPECT_LT(std::fabs(sum / static_cast<double>(primes.size())), 0.02);
    EXPECT_GT(differ, static_cast<int>(primes.size()) / 3);
}

TEST(MultFunc, BoundViolationRejected)
{
    const MultFunc f("big", Unit::One, [](const CanonicalPrime&) { return Complex(1.5, 0.0); });
    EXPECT_THROW((void)eval(f, GaussInt{3, 0}), DomainError);
}

TEST(MultFunc, ArgProfile)
{
    // inert primes take lambda(p^2) = 1
    EXPECT_EQ(arg_profile(liouville_norm(), 1000), std::vector<double>({-std::numbers::pi, 0.0}));
    EXPECT_EQ(arg_profile(constant_one(), 1000), std::vector<double>({0.0}));
    EXPECT_EQ(arg_profile(chi4_complete(), 1000), std::vector<double>({0.0}));
    const MultFunc quarter("quarter", Unit::One, [](const CanonicalPrime& p) {
        return p.cls == PrimeClass::Split ? Complex(0.0, 1.0) : Complex(-1.0, 0.0);
    });
    const auto prof = arg_profile(quarter, 1000);
    ASSERT_EQ(prof.size(), 2u);
    EXPECT_EQ(prof[0], -std::numbers::pi);
    EXPECT_NEAR(prof[1], std::numbers::pi / 2, 1e-15);
}

TEST(MultFunc, SpecNames)
{
    EXPECT_EQ(builtin_spec("one").name(), "one");
    EXPECT_EQ(builtin_spec("random_pm1:7").name(), "random_pm1:7");
    EXPECT_THROW((void)builtin_spec("nope"), DomainError);
    EXPECT_THROW((void)builtin_spec("random_pm1:"), DomainError);
    EXPECT_THROW((void)builtin_spec("random_pm1:x1"), DomainError);
    EXPECT_THROW((void)builtin_spec("rational:/nonexistent/file.csv"), DomainError);
}

TEST(MultFunc, RationalTable)
{
    const auto path = write_temp("gaussmf_rational.csv", "# test table\nprime,value\n2,0\n3,-1\n5,0.5\n");
    const auto f = builtin_spec("rational:" + path.string());
    EXPECT_EQ(eval(f, GaussInt{1, 1}), Complex(0.0, 0.0));
    EXPECT_EQ(eval(f, GaussInt{3, 0}), Complex(1.0, 0.0));
    EXPECT_EQ(eval(f, GaussInt{2, 1}), Complex(0.5, 0.0));
    EXPECT_EQ(eval(f, GaussInt{7, 0}), Complex(1.0, 0.0));
    ASSERT_TRUE(f.tail_envelope().has_value());
    const auto& env = *f.tail_envelope();
    EXPECT_DOUBLE_EQ(env(1), 0.5 + 2 * 0.5 / 5);
    EXPECT_DOUBLE_EQ(env(4), 2 * 0.5 / 5);
    EXPECT_DOUBLE_EQ(env(10), 0.0);

    const auto with_default = write_temp("gaussmf_rational_default.csv", "3,1\ndefault,-1\n");
    const auto g = rational_table(with_default);
    EXPECT_FALSE(g.tail_envelope().has_value());
    EXPECT_EQ(eval(g, GaussInt{2, 1}), Complex(-1.0, 0.0));

    const auto bad_prime = write_temp("gaussmf_rational_bad.csv", "4,0.5\n");
    EXPECT_THROW((void)rational_table(bad_prime), DomainError);
    const auto bad_value = write_temp("gaussmf_rational_big.csv", "3,2\n");
    EXPECT_THROW((void)rational_table(bad_value), DomainError);
    const auto bad_row = write_temp("gaussmf_rational_row.csv", "3\n");
    EXPECT_THROW((void)rational_table(bad_row), DomainError);
    for (const auto& p : {path, with_default, bad_prime, bad_value, bad_row}) std::filesystem::remove(p);
}

TEST(EvalCache, ConcurrentReadersAgree)
{
    EvalCache cache(random_pm1(9));
    const auto& f = cache.function();
    std::vector<std::thread> threads;
    std::vector<int> mismatches(4, 0);
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (std::int64_t m = 1; m <= 80; ++m) {
                for (std::int64_t n = 1; n <= 80; ++n) {
                    const GaussInt z{m + t, n};
                    if (cache.eval(z) != eval(f, z)) ++mismatches[static_cast<std::size_t>(t)];
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    for (int c : mismatches) EXPECT_EQ(c, 0);
    EXPECT_GT(cache.size(), 100u);
}
