#pragma once

// Gaussian primes: sieving the first-quadrant representatives, classifying
// them, factoring Gaussian integers over them, and counting primes in
// angular sectors and annulus neighbourhoods.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gaussmf/gint.hpp"

namespace gmf {

enum class PrimeClass : std::uint8_t { Ramified = 0, Split = 1, Inert = 2 };

[[nodiscard]] const char* to_string(PrimeClass c) noexcept;

struct CanonicalPrime {
    GaussInt value;     // first quadrant: Re > 0, Im >= 0
    std::uint64_t norm = 0;
    PrimeClass cls = PrimeClass::Ramified;

    friend bool operator==(const CanonicalPrime&, const CanonicalPrime&) = default;
};

// Total order by (norm, arg). Within one norm the split pair a+bi, b+ai
// (a > b) sorts a+bi first.
[[nodiscard]] bool prime_order_less(const CanonicalPrime& a, const CanonicalPrime& b) noexcept;

struct PrimePower {
    CanonicalPrime prime;
    int exponent = 0;
};

struct Factorization {
    Unit unit = Unit::One;
    std::vector<PrimePower> factors; // distinct primes, sorted by prime_order_less

    [[nodiscard]] GaussInt reconstruct() const;
};

// Bit mask over PrimeClass values for selective sieving.
enum ClassMask : unsigned {
    kRamifiedMask = 1u << 0,
    kSplitMask = 1u << 1,
    kInertMask = 1u << 2,
    kAllClasses = kRamifiedMask | kSplitMask | kInertMask,
};

// Largest norm bound accepted by the streaming sieve and by the
// materializing sieve_p1 (about 11M records at the latter bound).
inline constexpr std::uint64_t kMaxSieveBound = 4'000'000'000ULL;
inline constexpr std::uint64_t kMaxListBound = 200'000'000ULL;

// Rational primes p < limit.
[[nodiscard]] std::vector<std::uint32_t> rational_primes(std::uint64_t limit);

// Deterministic Miller-Rabin for 64-bit inputs.
[[nodiscard]] bool is_prime_u64(std::uint64_t n) noexcept;

// p = a^2 + b^2 with a > b > 0, for a rational prime p = 1 mod 4.
// Cornacchia above 10^4, exhaustive search below.
[[nodiscard]] std::pair<std::uint32_t, std::uint32_t> two_squares(std::uint64_t p);
[[nodiscard]] std::pair<std::uint32_t, std::uint32_t> two_squares_cornacchia(std::uint64_t p);
[[nodiscard]] std::pair<std::uint32_t, std::uint32_t> two_squares_bruteforce(std::uint64_t p);

// Every element of P1 with norm < norm_bound, each exactly once, in
// (norm, arg) order. Classes outside `mask` are skipped.
[[nodiscard]] std::vector<CanonicalPrime> sieve_p1(std::uint64_t norm_bound,
                                                   unsigned mask = kAllClasses);

// Streaming form of sieve_p1; same order, no materialized list.
void for_each_p1(std::uint64_t norm_bound, const std::function<void(const CanonicalPrime&)>& visit,
                 unsigned mask = kAllClasses);

// Direct primality test: the canonical associate a+bi is prime iff b = 0 and
// a is a rational prime = 3 mod 4, or b > 0 and a^2 + b^2 is a rational prime.
[[nodiscard]] bool is_gaussian_prime(const GaussInt& z);

// Wraps a first-quadrant Gaussian prime with its norm and class.
[[nodiscard]] CanonicalPrime make_canonical_prime(const GaussInt& first_quadrant_value);

// Rational factorization n = prod p^e, primes increasing.
struct RationalPower {
    std::uint64_t prime = 0;
    int exponent = 0;
};
[[nodiscard]] std::vector<RationalPower> factor_rational(std::uint64_t n);

// Exact factorization of n != 0 over P1 with a unit.
[[nodiscard]] Factorization factor(const GaussInt& n);

// Omega(n): rational prime factors with multiplicity.
[[nodiscard]] int big_omega(std::uint64_t n);
// Omega(m^2 + n^2).
[[nodiscard]] int big_omega_norm(std::int64_t m, std::int64_t n);

// Exponent totals of a Gaussian integer's factorization split by prime class.
// Depends only on the norm: v2(N), sum v_p(N) over p = 1 mod 4, and half the
// sum of v_p(N) over p = 3 mod 4.
struct ClassExponents {
    int ramified = 0;
    int split = 0;
    int inert = 0;
};

// Batch factorizer backed by a smallest-prime-factor table. Immutable after
// construction and safe for concurrent use. Norms above the table capacity
// fall back to the general routines.
class Factorizer {
public:
    explicit Factorizer(std::uint64_t max_norm);

    [[nodiscard]] std::uint64_t capacity() const noexcept { return limit_; }
    [[nodiscard]] int big_omega(std::uint64_t n) const;
    [[nodiscard]] ClassExponents class_exponents(std::uint64_t norm) const;
    [[nodiscard]] Factorization factor(const GaussInt& n) const;

    // Calls visit(prime, exponent) for each factor, without allocating.
    // Returns the unit.
    template <typename Visit>
    Unit visit_factors(const GaussInt& n, Visit&& visit) const;

    static constexpr std::uint64_t kMaxTable = 1ULL << 25;

private:
    [[nodiscard]] std::pair<std::uint32_t, std::uint32_t> split_pair(std::uint64_t p) const;
    [[nodiscard]] GaussInt divide_out(GaussInt z, const GaussInt& p, int& count, int limit) const;

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> spf_;     // smallest prime factor, index < limit_
    std::vector<std::uint32_t> split_a_; // a with p = a^2 + b^2, a > b, indexed by p / 4
};

// |{p in P : N(p) < norm_bound, Arg(p) in [arg_lo, arg_hi)}| over all four
// associate quadrants.
[[nodiscard]] std::uint64_t count_primes_sector(std::uint64_t norm_bound, double arg_lo,
                                                double arg_hi);

// Sector counts for consecutive half-open intervals given by edges
// (edges.size() - 1 bins), in one pass over the primes.
[[nodiscard]] std::vector<std::uint64_t> count_primes_sectors(std::uint64_t norm_bound,
                                                              std::span<const double> edges);

// |P cap n*B_eps| where B_eps = {1-eps < |z| < 1+eps, Arg z in (-pi eps, pi eps)}.
[[nodiscard]] std::uint64_t count_primes_neighborhood(const GaussInt& n, double eps);

// On-disk prime table: "GPRIMES1", u64 norm_bound, u64 count, then
// little-endian records (re: i32, im: i32, class: u8).
void write_prime_cache(const std::filesystem::path& path, std::uint64_t norm_bound,
                       std::span<const CanonicalPrime> primes);
struct PrimeCache {
    std::uint64_t norm_bound = 0;
    std::vector<CanonicalPrime> primes;
};
[[nodiscard]] PrimeCache read_prime_cache(const std::filesystem::path& path);

// ---------------------------------------------------------------------------

template <typename Visit>
Unit Factorizer::visit_factors(const GaussInt& n, Visit&& visit) const
{
    if (n.is_zero()) {
        throw DomainError("cannot factor 0");
    }
    std::uint64_t m = norm(n);
    if (m >= limit_) {
        const Factorization f = gmf::factor(n);
        for (const auto& pp : f.factors) {
            visit(pp.prime, pp.exponent);
        }
        return f.unit;
    }
    GaussInt z = n;
    while (m > 1) {
        const std::uint64_t p = spf_[m];
        int e = 0;
        do {
            m /= p;
            ++e;
        } while (m % p == 0);
        if (p == 2) {
            const GaussInt pi{1, 1};
            int c = 0;
            z = divide_out(z, pi, c, e);
            visit(CanonicalPrime{pi, 2, PrimeClass::Ramified}, e);
        } else if (p % 4 == 3) {
            const GaussInt pi{static_cast<std::int64_t>(p), 0};
            int c = 0;
            z = divide_out(z, pi, c, e / 2);
            visit(CanonicalPrime{pi, p * p, PrimeClass::Inert}, e / 2);
        } else {
            const auto [a, b] = split_pair(p);
            const GaussInt first{a, b};
            const GaussInt second{b, a};
            int c1 = 0;
            z = divide_out(z, first, c1, e);
            int c2 = 0;
            z = divide_out(z, second, c2, e - c1);
            if (c1 > 0) {
                visit(CanonicalPrime{first, p, PrimeClass::Split}, c1);
            }
            if (c2 > 0) {
                visit(CanonicalPrime{second, p, PrimeClass::Split}, c2);
            }
        }
    }
    // z is now a unit
    if (z.re() == 1) return Unit::One;
    if (z.re() == -1) return Unit::MinusOne;
    return z.im() == 1 ? Unit::I : Unit::MinusI;
}

} // namespace gmf
