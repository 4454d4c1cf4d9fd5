#pragma once

// Uniquely ergodic model systems and orbit averages along Omega(m^2 + n^2)
// and along class-constant assignments n -> T^{k(n)}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaussmf/folner.hpp"
#include "gaussmf/omega.hpp"

namespace gmf {

using State = std::vector<double>;

class DynamicalSystem {
public:
    enum class Kind { Cyclic, Torus, AffineUnipotent, TwoPoint };

    // x -> x + 1 mod q on {0, ..., q-1}.
    static DynamicalSystem cyclic(int q);
    // x -> x + alpha mod 1.
    static DynamicalSystem torus(double alpha);
    // (x1, ..., xd) -> (x1 + alpha, x2 + x1, ..., xd + x_{d-1}) mod 1. The last
    // coordinate of T^j 0 is alpha * C(j, d).
    static DynamicalSystem affine_unipotent(int d, double alpha);
    // Swap of two points; the same map as cyclic(2).
    static DynamicalSystem two_point();

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] int modulus() const noexcept { return q_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] int dimension() const noexcept { return d_; }
    [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::Cyclic || kind_ == Kind::TwoPoint; }
    [[nodiscard]] std::string describe() const;

    [[nodiscard]] State origin() const { return State(static_cast<std::size_t>(d_), 0.0); }
    // T^j x for j >= 0, in closed form.
    [[nodiscard]] State iterate(const State& x, std::uint64_t j) const;

    // Whether T^power is again uniquely ergodic: gcd(power, q) = 1 for finite
    // systems, power != 0 otherwise (alpha is assumed irrational).
    [[nodiscard]] bool power_uniquely_ergodic(std::int64_t power) const;

private:
    DynamicalSystem(Kind k, int q, double alpha, int d) : kind_(k), q_(q), alpha_(alpha), d_(d) {}

    Kind kind_;
    int q_;
    double alpha_;
    int d_;
};

// Bounded real observables, evaluated on the first coordinate for finite
// systems and on the last coordinate for torus-type systems.
class Observable {
public:
    enum class Kind { Indicator, Parity, Cos, Sin, CosSquared, Interval };

    static Observable indicator(int r);
    static Observable parity();                  // (-1)^x on a finite system
    static Observable cos_mode(int h);           // cos(2 pi h x)
    static Observable sin_mode(int h);           // sin(2 pi h x)
    static Observable cos_squared(int h);        // cos^2(2 pi h x)
    static Observable interval(double a, double b); // 1 on [a, b)
    // indicator:<r>, parity, cos:<h>, sin:<h>, cos2:<h>, interval:<a>:<b>
    static Observable parse(const std::string& text);

    [[nodiscard]] double operator()(const DynamicalSystem& s, const State& x) const;
    [[nodiscard]] std::string describe() const;
    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    // r or h for the one-parameter kinds, the endpoints for an interval.
    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }

private:
    Observable(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}

    Kind kind_;
    double a_;
    double b_;
};

// Integral of F against the unique invariant measure: uniform on finite
// systems, Lebesgue on tori (alpha irrational).
[[nodiscard]] double invariant_integral(const DynamicalSystem& s, const Observable& f);

// (1/N^2) sum_{1 <= m, n <= N} F(T^{Omega(m^2+n^2)} x0), from the Omega
// histogram of the sub-box [1, N]^2 of `table`.
[[nodiscard]] double orbit_average_omega(const DynamicalSystem& s, const State& x0, const Observable& f,
                                         const OmegaTable& table, int n);
[[nodiscard]] double orbit_average_omega(const DynamicalSystem& s, const State& x0, const Observable& f, int n);

// Frequencies of Omega(m^2 + n^2) mod q over [1, N]^2, as exact counts / N^2.
[[nodiscard]] std::vector<double> residue_histogram(int q, const OmegaTable& table, int n);
[[nodiscard]] std::vector<double> residue_histogram(int q, int n);

// Star discrepancy of {Omega(m^2+n^2) alpha mod 1 : 1 <= m, n <= N}.
[[nodiscard]] double delange_discrepancy(double alpha, const OmegaTable& table, int n);
[[nodiscard]] double delange_discrepancy(double alpha, int n);

// Star discrepancy of {Q(Omega(m^2+n^2)) mod 1}, Q(x) = sum_k coeffs[k] x^k.
[[nodiscard]] double weyl_poly_discrepancy(std::span<const double> coeffs, const OmegaTable& table, int n);
[[nodiscard]] double weyl_poly_discrepancy(std::span<const double> coeffs, int n);

// tau(p) = T^{power} for every p of a class; units act trivially. With
// integer powers of one map the images commute, so tau(n) = T^{k(n)} with
// k(n) = ramified * e_R(n) + split * e_S(n) + inert * e_I(n).
struct TauAssignment {
    std::int64_t ramified = 0;
    std::int64_t split = 1;
    std::int64_t inert = 0;
};

// E_{n in Phi_N} F(tau(n) x0). Requires nonnegative powers and T^split
// uniquely ergodic, the only class with divergent sum 1/N(p). OpenMP over
// rows, deterministic row-order reduction.
[[nodiscard]] double tau_orbit_average(const DynamicalSystem& s, const State& x0, const TauAssignment& tau,
                                       const Observable& f, const DilatedFolner& seq, int n);
// Serial reference through factor(n).
[[nodiscard]] double tau_orbit_average_reference(const DynamicalSystem& s, const State& x0,
                                                 const TauAssignment& tau, const Observable& f,
                                                 const DilatedFolner& seq, int n);

} // namespace gmf
