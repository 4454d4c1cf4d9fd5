#include "gaussmf/gint.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace gmf {

namespace {

__extension__ using i128 = __int128;

GaussInt checked(i128 re, i128 im)
{
    if (re > kCoordBound || re < -kCoordBound || im > kCoordBound || im < -kCoordBound) {
        throw DomainError("Gaussian integer result outside +-(2^31-1)");
    }
    return {static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)};
}

// floor(n / d) for d > 0
i128 floor_div(i128 n, i128 d)
{
    i128 q = n / d;
    if ((n % d != 0) && (n < 0)) {
        --q;
    }
    return q;
}

// Nearest integer to n/d (d > 0), ties toward -infinity: ceil((2n - d) / 2d).
i128 round_nearest_down(i128 n, i128 d)
{
    return -floor_div(-(2 * n - d), 2 * d);
}

} // namespace

GaussInt to_gauss(Unit u)
{
    switch (u) {
    case Unit::One: return {1, 0};
    case Unit::I: return {0, 1};
    case Unit::MinusOne: return {-1, 0};
    case Unit::MinusI: return {0, -1};
    }
    return {1, 0};
}

std::string to_string(Unit u)
{
    switch (u) {
    case Unit::One: return "1";
    case Unit::I: return "i";
    case Unit::MinusOne: return "-1";
    case Unit::MinusI: return "-i";
    }
    return "?";
}

double arg(const GaussInt& z) noexcept
{
    if (z.is_zero()) {
        return 0.0;
    }
    const double a = std::atan2(static_cast<double>(z.im()), static_cast<double>(z.re()));
    // atan2 lands in (-pi, pi]; the negative real axis maps to -pi.
    return a >= std::numbers::pi ? -std::numbers::pi : a;
}

GaussInt conj(const GaussInt& z) { return {z.re(), -z.im()}; }

GaussInt add(const GaussInt& a, const GaussInt& b)
{
    return checked(static_cast<i128>(a.re()) + b.re(), static_cast<i128>(a.im()) + b.im());
}

GaussInt sub(const GaussInt& a, const GaussInt& b)
{
    return checked(static_cast<i128>(a.re()) - b.re(), static_cast<i128>(a.im()) - b.im());
}

GaussInt mul(const GaussInt& a, const GaussInt& b)
{
    const i128 ar = a.re(), ai = a.im(), br = b.re(), bi = b.im();
    return checked(ar * br - ai * bi, ar * bi + ai * br);
}

GaussInt mul(Unit u, const GaussInt& z)
{
    switch (u) {
    case Unit::One: return z;
    case Unit::I: return {-z.im(), z.re()};
    case Unit::MinusOne: return {-z.re(), -z.im()};
    case Unit::MinusI: return {z.im(), -z.re()};
    }
    return z;
}

DivMod divmod(const GaussInt& a, const GaussInt& b)
{
    if (b.is_zero()) {
        throw DomainError("division by zero Gaussian integer");
    }
    const i128 ar = a.re(), ai = a.im(), br = b.re(), bi = b.im();
    const i128 d = br * br + bi * bi;
    // a * conj(b)
    const i128 nr = ar * br + ai * bi;
    const i128 ni = ai * br - ar * bi;
    const i128 qr = round_nearest_down(nr, d);
    const i128 qi = round_nearest_down(ni, d);
    const GaussInt q = checked(qr, qi);
    const GaussInt r = checked(ar - (qr * br - qi * bi), ai - (qr * bi + qi * br));
    return {q, r};
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b)
{
    const auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw DomainError(to_string(b) + " does not divide " + to_string(a));
    }
    return q;
}

bool divides(const GaussInt& d, const GaussInt& z)
{
    if (d.is_zero()) {
        return z.is_zero();
    }
    // d | z  iff  z * conj(d) is divisible by N(d) coordinate-wise.
    const i128 dr = d.re(), di = d.im(), zr = z.re(), zi = z.im();
    const i128 n = dr * dr + di * di;
    return (zr * dr + zi * di) % n == 0 && (zi * dr - zr * di) % n == 0;
}

std::pair<Unit, GaussInt> canonicalize(const GaussInt& z)
{
    const std::int64_t a = z.re(), b = z.im();
    if (a > 0 && b >= 0) {
        return {Unit::One, z};
    }
    if (a <= 0 && b > 0) {
        return {Unit::I, GaussInt{b, -a}};
    }
    if (a < 0 && b <= 0) {
        return {Unit::MinusOne, GaussInt{-a, -b}};
    }
    if (a >= 0 && b < 0) {
        return {Unit::MinusI, GaussInt{-b, a}};
    }
    throw DomainError("cannot canonicalize 0");
}

GaussInt gcd(GaussInt a, GaussInt b)
{
    while (!b.is_zero()) {
        GaussInt r = divmod(a, b).remainder;
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t gcd_norm(const GaussInt& a, const GaussInt& b)
{
    if (a.is_zero() && b.is_zero()) {
        throw DomainError("gcd of (0, 0) is undefined");
    }
    return norm(gcd(a, b));
}

std::string to_string(const GaussInt& z)
{
    const auto re = z.re(), im = z.im();
    if (im == 0) {
        return std::to_string(re);
    }
    std::string s;
    if (re != 0) {
        s = std::to_string(re);
        s += im < 0 ? "-" : "+";
    } else if (im < 0) {
        s = "-";
    }
    const auto mag = im < 0 ? -im : im;
    if (mag != 1) {
        s += std::to_string(mag);
    }
    s += "i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << to_string(z); }

} // namespace gmf
