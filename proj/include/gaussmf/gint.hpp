#pragma once

// Exact arithmetic over the Gaussian integers Z[i].
//
// Coordinates are bounded by 2^31 - 1 in absolute value so that the norm
// re^2 + im^2 always fits an unsigned 64-bit integer. Products and quotients
// go through 128-bit intermediates and are re-checked against the bound.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "gaussmf/error.hpp"

namespace gmf {

inline constexpr std::int64_t kCoordBound = 2147483647; // 2^31 - 1

class GaussInt {
public:
    constexpr GaussInt() = default;

    constexpr GaussInt(std::int64_t re, std::int64_t im = 0) : re_(re), im_(im)
    {
        if (re > kCoordBound || re < -kCoordBound || im > kCoordBound || im < -kCoordBound) {
            throw DomainError("Gaussian integer coordinate outside +-(2^31-1)");
        }
    }

    [[nodiscard]] constexpr std::int64_t re() const noexcept { return re_; }
    [[nodiscard]] constexpr std::int64_t im() const noexcept { return im_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }

    friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;

private:
    std::int64_t re_ = 0;
    std::int64_t im_ = 0;
};

// Units are stored as the exponent k in i^k.
enum class Unit : std::uint8_t { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

[[nodiscard]] constexpr int unit_exponent(Unit u) noexcept { return static_cast<int>(u); }
[[nodiscard]] constexpr Unit unit_from_exponent(int k) noexcept
{
    return static_cast<Unit>(((k % 4) + 4) % 4);
}
[[nodiscard]] constexpr Unit operator*(Unit a, Unit b) noexcept
{
    return unit_from_exponent(unit_exponent(a) + unit_exponent(b));
}
[[nodiscard]] GaussInt to_gauss(Unit u);
[[nodiscard]] std::string to_string(Unit u);

// Lookup-free integer norm. Valid for every GaussInt by construction.
[[nodiscard]] constexpr std::uint64_t norm(const GaussInt& z) noexcept
{
    const auto a = static_cast<std::uint64_t>(z.re() < 0 ? -z.re() : z.re());
    const auto b = static_cast<std::uint64_t>(z.im() < 0 ? -z.im() : z.im());
    return a * a + b * b;
}

// Principal argument in [-pi, pi); arg(0) = 0 and arg(-1) = -pi.
[[nodiscard]] double arg(const GaussInt& z) noexcept;

[[nodiscard]] GaussInt conj(const GaussInt& z);
[[nodiscard]] GaussInt add(const GaussInt& a, const GaussInt& b);
[[nodiscard]] GaussInt sub(const GaussInt& a, const GaussInt& b);
[[nodiscard]] GaussInt mul(const GaussInt& a, const GaussInt& b);
[[nodiscard]] GaussInt mul(Unit u, const GaussInt& z);

inline GaussInt operator+(const GaussInt& a, const GaussInt& b) { return add(a, b); }
inline GaussInt operator-(const GaussInt& a, const GaussInt& b) { return sub(a, b); }
inline GaussInt operator*(const GaussInt& a, const GaussInt& b) { return mul(a, b); }
inline GaussInt operator*(Unit u, const GaussInt& z) { return mul(u, z); }

struct DivMod {
    GaussInt quotient;
    GaussInt remainder;
};

// Euclidean division: each coordinate of a/b is rounded to the nearest
// integer with ties toward -infinity, so norm(remainder) <= norm(b)/2.
[[nodiscard]] DivMod divmod(const GaussInt& a, const GaussInt& b);

// Returns a/b; throws DomainError unless b divides a exactly.
[[nodiscard]] GaussInt exact_div(const GaussInt& a, const GaussInt& b);

[[nodiscard]] bool divides(const GaussInt& d, const GaussInt& z);

// z = unit * w with Re w > 0 and Im w >= 0. Throws on z = 0.
[[nodiscard]] std::pair<Unit, GaussInt> canonicalize(const GaussInt& z);

[[nodiscard]] GaussInt gcd(GaussInt a, GaussInt b);
// Norm of a greatest common divisor; throws when both arguments are zero.
[[nodiscard]] std::uint64_t gcd_norm(const GaussInt& a, const GaussInt& b);

[[nodiscard]] std::string to_string(const GaussInt& z);
std::ostream& operator<<(std::ostream& os, const GaussInt& z);

} // namespace gmf
