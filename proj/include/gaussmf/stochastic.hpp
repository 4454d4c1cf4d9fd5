#pragma once

// Turan-Kubilius and gcd-moment checks, sign-pattern statistics of random
// multiplicative functions on disks, and the non-dilated Folner example.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gaussmf/folner.hpp"
#include "gaussmf/multfunc.hpp"

namespace gmf {

// Bounded observable a: G -> C with |a| <= 1.
using LatticeObservable = std::function<Complex(const GaussInt&)>;

// E^log_{n,m in F} N(gcd(n, m)) for a list of Gaussian primes, via
// N(gcd(p, q)) = N(p) when q is an associate of p and 1 otherwise.
[[nodiscard]] double gcd_log_moment(std::span<const GaussInt> primes);

// E^log_{n,m in S} N(gcd(n, m)) for an arbitrary finite set of nonzero
// elements, by the direct double sum.
[[nodiscard]] double set_log_moment(std::span<const GaussInt> set);

// The set F1 F2 = {pq : p in F1, q in F2}, duplicates removed, in sorted order.
[[nodiscard]] std::vector<GaussInt> product_set(std::span<const GaussInt> f1, std::span<const GaussInt> f2);

// L(F) = sum 1 / N(n).
[[nodiscard]] double log_weight(std::span<const GaussInt> set);

inline constexpr double kTkSlack = 0.05;

struct TKReport {
    double lhs = 0.0;
    double rhs_bound = 0.0;
    std::vector<GaussInt> b_set;
    int n_used = 0;
    bool violation = false;
};

// lhs = |E_{n in Phi_N} a(n) - E^log_{p in B} E_{n in Phi_N/p} a(pn)|,
// rhs = sqrt(max(0, gcd_log_moment(B) - 1)); flags lhs > rhs + slack.
[[nodiscard]] TKReport tk_check(const LatticeObservable& a, std::span<const GaussInt> b_set,
                                const DilatedFolner& seq, int n, double slack = kTkSlack);

// Values of f on the box [-r, r]^2, f(0) = 0. Built in parallel over rows.
class ValueGrid {
public:
    ValueGrid(const MultFunc& f, std::int64_t radius);

    [[nodiscard]] std::int64_t radius() const noexcept { return r_; }
    [[nodiscard]] Complex at(std::int64_t x, std::int64_t y) const
    {
        return v_[static_cast<std::size_t>((x + r_) * (2 * r_ + 1) + (y + r_))];
    }

private:
    std::int64_t r_;
    std::vector<Complex> v_;
};

struct PatternQuery {
    std::vector<GaussInt> shifts;
    std::vector<int> signs; // each +1 or -1
    std::uint64_t norm_bound = 0;
};

// Frequency of {n : N(n) < bound, f(n + h_j) = eps_j for all j} among the n
// with every n + h_j != 0.
[[nodiscard]] double pattern_frequency(const MultFunc& f, const PatternQuery& query);
[[nodiscard]] double pattern_frequency(const ValueGrid& grid, const PatternQuery& query);

// E_{N(n) < bound} prod_j f(n + h_j), with f(0) = 0.
[[nodiscard]] Complex correlation_statistic(const MultFunc& f, std::span<const GaussInt> shifts,
                                            std::uint64_t norm_bound);
[[nodiscard]] Complex correlation_statistic(const ValueGrid& grid, std::span<const GaussInt> shifts,
                                            std::uint64_t norm_bound);

// Box radius a grid needs for queries at this bound and these shifts.
[[nodiscard]] std::int64_t grid_radius(std::uint64_t norm_bound, std::span<const GaussInt> shifts);

struct AdversarialDemo {
    std::vector<GaussInt> plus_corners;  // lower-left corners of squares where f = +1
    std::vector<GaussInt> minus_corners; // and where f = -1
    std::vector<GaussInt> sequence;      // plus, minus, plus, ... interleaved
    std::vector<double> averages;        // E f over each square of the sequence
    bool exhausted = false;              // budget ran out before count of each
};

// Searches s x s squares {x..x+s-1} x {y..y+s-1} by shells of increasing
// N(corner), lexicographic within a shell, over corners with N < corner_bound.
[[nodiscard]] AdversarialDemo adversarial_folner_demo(const MultFunc& f, int side, int count,
                                                      std::uint64_t corner_bound = 250'000);

} // namespace gmf
