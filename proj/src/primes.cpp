#include "gaussmf/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

namespace gmf {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 isqrt(u64 n)
{
    auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> table = rational_primes(1u << 16);
    return table;
}

u64 gcd_u64(u64 a, u64 b)
{
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Pollard-Brent; n odd composite.
u64 pollard_brent(u64 n)
{
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(u64 n, std::vector<u64>& out)
{
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

void check_bound(u64 bound, u64 max, const char* what)
{
    if (bound > max) {
        throw ResourceError(std::string(what) + ": norm bound " + std::to_string(bound) +
                            " exceeds budget " + std::to_string(max));
    }
}

GaussInt divide_repeatedly(GaussInt z, const GaussInt& p, int& count, int limit)
{
    while (count < limit) {
        const DivMod qr = divmod(z, p);
        if (!qr.remainder.is_zero()) break;
        z = qr.quotient;
        ++count;
    }
    return z;
}

Unit unit_of(const GaussInt& z)
{
    if (z == GaussInt{1, 0}) return Unit::One;
    if (z == GaussInt{0, 1}) return Unit::I;
    if (z == GaussInt{-1, 0}) return Unit::MinusOne;
    if (z == GaussInt{0, -1}) return Unit::MinusI;
    throw DomainError("internal: cofactor " + to_string(z) + " is not a unit");
}

} // namespace

const char* to_string(PrimeClass c) noexcept
{
    switch (c) {
    case PrimeClass::Ramified: return "ramified";
    case PrimeClass::Split: return "split";
    case PrimeClass::Inert: return "inert";
    }
    return "?";
}

bool prime_order_less(const CanonicalPrime& a, const CanonicalPrime& b) noexcept
{
    if (a.norm != b.norm) return a.norm < b.norm;
    return arg(a.value) < arg(b.value);
}

GaussInt Factorization::reconstruct() const
{
    GaussInt z = to_gauss(unit);
    for (const auto& pp : factors) {
        for (int k = 0; k < pp.exponent; ++k) {
            z = mul(z, pp.prime.value);
        }
    }
    return z;
}

std::vector<std::uint32_t> rational_primes(std::uint64_t limit)
{
    check_bound(limit, kMaxSieveBound, "rational_primes");
    std::vector<std::uint32_t> primes;
    if (limit <= 2) return primes;
    primes.push_back(2);
    // odd-only sieve: index i <-> 2i + 1
    const u64 half = limit / 2;
    std::vector<bool> composite(half, false);
    for (u64 i = 1; i < half; ++i) {
        if (composite[i]) continue;
        const u64 p = 2 * i + 1;
        if (p >= limit) break;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (u64 j = p * p / 2; j < half; j += p) composite[j] = true;
    }
    return primes;
}

bool is_prime_u64(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> two_squares_bruteforce(std::uint64_t p)
{
    for (u64 b = 1; 2 * b * b < p; ++b) {
        const u64 a2 = p - b * b;
        const u64 a = isqrt(a2);
        if (a * a == a2) {
            return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
        }
    }
    throw DomainError(std::to_string(p) + " is not a sum of two distinct squares");
}

namespace {

// Cornacchia for a known prime p = 1 mod 4 below 2^32, where products of
// residues fit 64 bits.
std::pair<std::uint32_t, std::uint32_t> cornacchia_small(u64 p)
{
    auto pm = [p](u64 b, u64 e) {
        u64 r = 1;
        b %= p;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    u64 c = 2;
    if (p % 8 != 5) {
        for (c = 3; pm(c, (p - 1) / 2) != p - 1; ++c) {
        }
    }
    u64 r0 = p, r1 = pm(c, (p - 1) / 4);
    while (r1 * r1 > p) {
        const u64 t = r0 % r1;
        r0 = r1;
        r1 = t;
    }
    u64 a = r1;
    u64 b = isqrt(p - a * a);
    if (a < b) std::swap(a, b);
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

} // namespace

std::pair<std::uint32_t, std::uint32_t> two_squares_cornacchia(std::uint64_t p)
{
    if (p % 4 != 1 || !is_prime_u64(p)) {
        throw DomainError(std::to_string(p) + " is not a prime = 1 mod 4");
    }
    if (p < (1ULL << 32)) return cornacchia_small(p);
    // x^2 = -1 mod p from any quadratic non-residue c: x = c^((p-1)/4).
    u64 x = 0;
    for (u64 c = 2;; ++c) {
        if (powmod(c, (p - 1) / 2, p) == p - 1) {
            x = powmod(c, (p - 1) / 4, p);
            break;
        }
    }
    u64 r0 = p, r1 = x;
    while (r1 * r1 > p) {
        const u64 t = r0 % r1;
        r0 = r1;
        r1 = t;
    }
    u64 a = r1;
    u64 b = isqrt(p - a * a);
    if (a * a + b * b != p) {
        throw DomainError("Cornacchia failed for " + std::to_string(p));
    }
    if (a < b) std::swap(a, b);
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

std::pair<std::uint32_t, std::uint32_t> two_squares(std::uint64_t p)
{
    return p < 10'000 ? two_squares_bruteforce(p) : two_squares_cornacchia(p);
}

void for_each_p1(std::uint64_t norm_bound, const std::function<void(const CanonicalPrime&)>& visit,
                 unsigned mask)
{
    check_bound(norm_bound, kMaxSieveBound, "for_each_p1");
    if (norm_bound <= 2) return;

    const u64 root = isqrt(norm_bound) + 1;
    const std::vector<std::uint32_t> base = rational_primes(root + 1);
    // Inert primes: p = 3 mod 4 with p^2 < norm_bound, in increasing order.
    std::vector<u64> inert;
    for (auto p : base) {
        if (p % 4 == 3 && static_cast<u64>(p) * p < norm_bound) inert.push_back(p);
    }
    std::size_t next_inert = 0;

    auto emit_inert_below = [&](u64 limit) {
        while (next_inert < inert.size() && inert[next_inert] * inert[next_inert] < limit) {
            const u64 p = inert[next_inert++];
            if (mask & kInertMask) {
                visit(CanonicalPrime{GaussInt{static_cast<std::int64_t>(p), 0}, p * p,
                                     PrimeClass::Inert});
            }
        }
    };

    // Segmented sieve over [lo, hi) for primes 2 and p = 1 mod 4.
    // Each prime p = 1 mod 4 in a segment is found as the unique a^2 + b^2
    // with a > b > 0 by walking the lattice points of the segment's annulus.
    constexpr u64 kSegment = 1ULL << 20;
    std::vector<std::uint8_t> composite(kSegment);
    std::vector<std::uint32_t> split_a(kSegment);
    for (u64 lo = 2; lo < norm_bound; lo += kSegment) {
        const u64 hi = std::min(norm_bound, lo + kSegment);
        std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(hi - lo), 0);
        for (auto bp : base) {
            const u64 p = bp;
            if (p * p >= hi) break;
            u64 start = std::max(p * p, (lo + p - 1) / p * p);
            for (u64 j = start; j < hi; j += p) composite[j - lo] = 1;
        }
        if (mask & kSplitMask) {
            for (u64 a = 2; a * a < hi; ++a) {
                const u64 a2 = a * a;
                u64 b = 1;
                if (a2 < lo) {
                    b = isqrt(lo - a2);
                    if (a2 + b * b < lo) ++b;
                }
                // opposite parity keeps a^2 + b^2 odd
                if ((a + b) % 2 == 0) ++b;
                for (; b < a && a2 + b * b < hi; b += 2) {
                    const u64 n = a2 + b * b;
                    if (!composite[n - lo]) split_a[n - lo] = static_cast<std::uint32_t>(a);
                }
            }
        }
        for (u64 n = lo; n < hi; ++n) {
            if (composite[n - lo]) continue;
            if (n % 4 == 3) continue;
            emit_inert_below(n);
            if (n == 2) {
                if (mask & kRamifiedMask) {
                    visit(CanonicalPrime{GaussInt{1, 1}, 2, PrimeClass::Ramified});
                }
                continue;
            }
            if (mask & kSplitMask) {
                const auto a = static_cast<std::int64_t>(split_a[n - lo]);
                const auto b = static_cast<std::int64_t>(isqrt(n - static_cast<u64>(a * a)));
                visit(CanonicalPrime{GaussInt{a, b}, n, PrimeClass::Split});
                visit(CanonicalPrime{GaussInt{b, a}, n, PrimeClass::Split});
            }
        }
    }
    emit_inert_below(norm_bound);
}

std::vector<CanonicalPrime> sieve_p1(std::uint64_t norm_bound, unsigned mask)
{
    if (norm_bound < 2) {
        throw DomainError("sieve_p1 requires norm_bound >= 2");
    }
    check_bound(norm_bound, kMaxListBound, "sieve_p1");
    std::vector<CanonicalPrime> out;
    const double est = static_cast<double>(norm_bound) / std::log(static_cast<double>(norm_bound) + 2.0);
    out.reserve(static_cast<std::size_t>(est * 1.2) + 16);
    for_each_p1(norm_bound, [&](const CanonicalPrime& p) { out.push_back(p); }, mask);
    return out;
}

bool is_gaussian_prime(const GaussInt& z)
{
    const auto [u, w] = canonicalize(z);
    (void)u;
    if (w.im() == 0) {
        const auto a = static_cast<u64>(w.re());
        return a % 4 == 3 && is_prime_u64(a);
    }
    return is_prime_u64(norm(w));
}

CanonicalPrime make_canonical_prime(const GaussInt& value)
{
    if (!(value.re() > 0 && value.im() >= 0) || !is_gaussian_prime(value)) {
        throw DomainError(to_string(value) + " is not a first-quadrant Gaussian prime");
    }
    const u64 n = norm(value);
    PrimeClass c = PrimeClass::Split;
    if (n == 2) c = PrimeClass::Ramified;
    else if (value.im() == 0) c = PrimeClass::Inert;
    return {value, n, c};
}

std::vector<RationalPower> factor_rational(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("cannot factor 0");
    }
    std::vector<RationalPower> out;
    for (auto sp : small_primes()) {
        const u64 p = sp;
        if (p * p > n) break;
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) {
        std::vector<u64> rest;
        factor_into(n, rest);
        std::sort(rest.begin(), rest.end());
        for (u64 p : rest) {
            if (!out.empty() && out.back().prime == p) {
                ++out.back().exponent;
            } else {
                out.push_back({p, 1});
            }
        }
    }
    return out;
}

Factorization factor(const GaussInt& n)
{
    if (n.is_zero()) {
        throw DomainError("cannot factor 0");
    }
    Factorization f;
    GaussInt z = n;
    for (const auto& [p, e] : factor_rational(norm(n))) {
        if (p == 2) {
            int c = 0;
            z = divide_repeatedly(z, GaussInt{1, 1}, c, e);
            f.factors.push_back({CanonicalPrime{GaussInt{1, 1}, 2, PrimeClass::Ramified}, e});
        } else if (p % 4 == 3) {
            const GaussInt pi{static_cast<std::int64_t>(p), 0};
            int c = 0;
            z = divide_repeatedly(z, pi, c, e / 2);
            f.factors.push_back({CanonicalPrime{pi, p * p, PrimeClass::Inert}, e / 2});
        } else {
            const auto [a, b] = two_squares(p);
            const GaussInt first{a, b}, second{b, a};
            int c1 = 0, c2 = 0;
            z = divide_repeatedly(z, first, c1, e);
            z = divide_repeatedly(z, second, c2, e - c1);
            if (c1 > 0) f.factors.push_back({CanonicalPrime{first, p, PrimeClass::Split}, c1});
            if (c2 > 0) f.factors.push_back({CanonicalPrime{second, p, PrimeClass::Split}, c2});
        }
    }
    f.unit = unit_of(z);
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& x, const PrimePower& y) { return prime_order_less(x.prime, y.prime); });
    return f;
}

int big_omega(std::uint64_t n)
{
    int total = 0;
    for (const auto& rp : factor_rational(n)) total += rp.exponent;
    return total;
}

int big_omega_norm(std::int64_t m, std::int64_t n)
{
    if (m == 0 && n == 0) {
        throw DomainError("Omega(0) is undefined");
    }
    return big_omega(norm(GaussInt{m, n}));
}

// ---------------------------------------------------------------------------

Factorizer::Factorizer(std::uint64_t max_norm)
{
    limit_ = std::min<u64>(max_norm + 1, kMaxTable);
    limit_ = std::max<u64>(limit_, 3);
    spf_.assign(limit_, 0);
    std::vector<std::uint32_t> primes;
    for (u64 i = 2; i < limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (auto p : primes) {
            if (p > spf_[i] || i * p >= limit_) break;
            spf_[i * p] = p;
        }
    }
    split_a_.assign(limit_ / 4 + 1, 0);
    for (u64 b = 1; 2 * b * b < limit_; ++b) {
        for (u64 a = b + 1; a * a + b * b < limit_; ++a) {
            const u64 n = a * a + b * b;
            if (spf_[n] == n) split_a_[n / 4] = static_cast<std::uint32_t>(a);
        }
    }
}

std::pair<std::uint32_t, std::uint32_t> Factorizer::split_pair(std::uint64_t p) const
{
    if (p < limit_) {
        const u64 a = split_a_[p / 4];
        return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(isqrt(p - a * a))};
    }
    return two_squares(p);
}

GaussInt Factorizer::divide_out(GaussInt z, const GaussInt& p, int& count, int limit) const
{
    return divide_repeatedly(z, p, count, limit);
}

int Factorizer::big_omega(std::uint64_t n) const
{
    if (n == 0) throw DomainError("Omega(0) is undefined");
    if (n >= limit_) return gmf::big_omega(n);
    int total = 0;
    while (n > 1) {
        n /= spf_[n];
        ++total;
    }
    return total;
}

ClassExponents Factorizer::class_exponents(std::uint64_t m) const
{
    if (m == 0) throw DomainError("class exponents of 0 are undefined");
    ClassExponents ce;
    auto add = [&](u64 p, int e) {
        if (p == 2) ce.ramified += e;
        else if (p % 4 == 1) ce.split += e;
        else ce.inert += e / 2;
    };
    if (m >= limit_) {
        for (const auto& rp : factor_rational(m)) add(rp.prime, rp.exponent);
        return ce;
    }
    while (m > 1) {
        const u64 p = spf_[m];
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        add(p, e);
    }
    return ce;
}

Factorization Factorizer::factor(const GaussInt& n) const
{
    Factorization f;
    f.unit = visit_factors(n, [&](const CanonicalPrime& p, int e) { f.factors.push_back({p, e}); });
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& x, const PrimePower& y) { return prime_order_less(x.prime, y.prime); });
    return f;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> count_primes_sectors(std::uint64_t norm_bound, std::span<const double> edges)
{
    if (edges.size() < 2) {
        throw DomainError("sector edges need at least two values");
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1])) throw DomainError("sector edges must increase");
    }
    if (edges.front() < -std::numbers::pi || edges.back() > std::numbers::pi) {
        throw DomainError("sector edges must lie in [-pi, pi]");
    }
    std::vector<std::uint64_t> counts(edges.size() - 1, 0);
    for_each_p1(norm_bound, [&](const CanonicalPrime& p) {
        for (Unit u : {Unit::One, Unit::I, Unit::MinusOne, Unit::MinusI}) {
            const double a = arg(mul(u, p.value));
            if (a < edges.front() || a >= edges.back()) continue;
            const auto it = std::upper_bound(edges.begin(), edges.end(), a);
            ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
        }
    });
    return counts;
}

std::uint64_t count_primes_sector(std::uint64_t norm_bound, double arg_lo, double arg_hi)
{
    if (!(arg_lo >= -std::numbers::pi && arg_lo <= arg_hi && arg_hi <= std::numbers::pi)) {
        throw DomainError("sector interval must satisfy -pi <= lo <= hi <= pi");
    }
    if (arg_lo == arg_hi) return 0;
    const double edges[] = {arg_lo, arg_hi};
    return count_primes_sectors(norm_bound, edges)[0];
}

std::uint64_t count_primes_neighborhood(const GaussInt& n, double eps)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("neighbourhood radius eps must lie in (0, 1)");
    }
    if (n.is_zero()) {
        throw DomainError("neighbourhood centre must be nonzero");
    }
    const double pi = std::numbers::pi;
    const long double nn = static_cast<long double>(norm(n));
    const long double lo2 = (1.0L - eps) * (1.0L - eps) * nn;
    const long double hi2 = (1.0L + eps) * (1.0L + eps) * nn;
    const double theta = arg(n);
    const double half = pi * eps;

    // Bounding box of {r e^{it}: r in [r1, r2], t in theta +- half}.
    const double r1 = std::sqrt(static_cast<double>(lo2));
    const double r2 = std::sqrt(static_cast<double>(hi2));
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto extend = [&](double r, double t) {
        xmin = std::min(xmin, r * std::cos(t));
        xmax = std::max(xmax, r * std::cos(t));
        ymin = std::min(ymin, r * std::sin(t));
        ymax = std::max(ymax, r * std::sin(t));
    };
    for (double r : {r1, r2}) {
        extend(r, theta - half);
        extend(r, theta + half);
    }
    for (int k = -4; k <= 4; ++k) {
        const double t = k * pi / 2;
        if (t > theta - half && t < theta + half) extend(r2, t);
    }
    const auto x0 = static_cast<std::int64_t>(std::floor(xmin)) - 1;
    const auto x1 = static_cast<std::int64_t>(std::ceil(xmax)) + 1;
    const auto y0 = static_cast<std::int64_t>(std::floor(ymin)) - 1;
    const auto y1 = static_cast<std::int64_t>(std::ceil(ymax)) + 1;

    std::uint64_t count = 0;
    for (std::int64_t x = x0; x <= x1; ++x) {
        for (std::int64_t y = y0; y <= y1; ++y) {
            const GaussInt m{x, y};
            const auto mn = static_cast<long double>(norm(m));
            if (!(mn > lo2 && mn < hi2)) continue;
            double d = arg(m) - theta;
            if (d >= pi) d -= 2 * pi;
            if (d < -pi) d += 2 * pi;
            if (!(d > -half && d < half)) continue;
            if (is_gaussian_prime(m)) ++count;
        }
    }
    return count;
}

// ---------------------------------------------------------------------------

namespace {

constexpr char kCacheMagic[8] = {'G', 'P', 'R', 'I', 'M', 'E', 'S', '1'};

void put_le(std::ostream& os, u64 v, int bytes)
{
    for (int i = 0; i < bytes; ++i) {
        os.put(static_cast<char>((v >> (8 * i)) & 0xff));
    }
}

u64 get_le(std::istream& is, int bytes)
{
    u64 v = 0;
    for (int i = 0; i < bytes; ++i) {
        const int c = is.get();
        if (c == std::char_traits<char>::eof()) {
            throw DomainError("prime cache truncated");
        }
        v |= static_cast<u64>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

} // namespace

void write_prime_cache(const std::filesystem::path& path, std::uint64_t norm_bound,
                       std::span<const CanonicalPrime> primes)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw DomainError("cannot open " + path.string() + " for writing");
    }
    os.write(kCacheMagic, sizeof kCacheMagic);
    put_le(os, norm_bound, 8);
    put_le(os, primes.size(), 8);
    for (const auto& p : primes) {
        put_le(os, static_cast<std::uint32_t>(static_cast<std::int32_t>(p.value.re())), 4);
        put_le(os, static_cast<std::uint32_t>(static_cast<std::int32_t>(p.value.im())), 4);
        put_le(os, static_cast<u64>(p.cls), 1);
    }
}

PrimeCache read_prime_cache(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw DomainError("cannot open " + path.string());
    }
    char magic[8];
    is.read(magic, sizeof magic);
    if (!is || std::memcmp(magic, kCacheMagic, sizeof magic) != 0) {
        throw DomainError(path.string() + " is not a GPRIMES1 prime cache");
    }
    PrimeCache cache;
    cache.norm_bound = get_le(is, 8);
    const u64 count = get_le(is, 8);
    cache.primes.reserve(count);
    for (u64 i = 0; i < count; ++i) {
        const auto re = static_cast<std::int32_t>(static_cast<std::uint32_t>(get_le(is, 4)));
        const auto im = static_cast<std::int32_t>(static_cast<std::uint32_t>(get_le(is, 4)));
        const auto cls = get_le(is, 1);
        if (cls > 2) {
            throw DomainError("prime cache record has invalid class byte");
        }
        const GaussInt v{re, im};
        cache.primes.push_back({v, norm(v), static_cast<PrimeClass>(cls)});
    }
    return cache;
}

} // namespace gmf
