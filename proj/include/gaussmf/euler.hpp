#pragma once

// The Euler product P(f) = prod_{p in P1} (N(p) - 1) / (N(p) - f(p)), the
// closed form for f = g o N, and the numeric form of the criterion
// P(f) = 0 iff sum |1 - f(p)| / N(p) diverges.

#include <cstdint>
#include <optional>
#include <string>

#include "gaussmf/multfunc.hpp"
#include "gaussmf/region.hpp"

namespace gmf {

enum class Verdict { Converged, TendsToZero, Inconclusive };

[[nodiscard]] const char* to_string(Verdict v) noexcept;

// A spec whose prime values take more distinct arguments than this below the
// bound is treated as having an infinite argument set.
inline constexpr std::size_t kMaxArgCount = 256;

struct ProductReport {
    Complex partial_value;
    std::uint64_t norm_bound = 0;
    std::uint64_t factor_count = 0;
    std::optional<double> tail_bound;
    Verdict verdict = Verdict::Inconclusive;
    // S(B) = sum_{N(p) < B} |1 - f(p)| / N(p), and S(B/4).
    double s_full = 0.0;
    double s_quarter = 0.0;
    std::size_t arg_count = 0;
};

// Factors are multiplied in (norm, arg) order in long double; the modulus is
// carried separately as a sum of logs so a vanishing product does not
// underflow.
[[nodiscard]] ProductReport partial_P(const MultFunc& f, std::uint64_t norm_bound);

// 1/(2 - g(2)) prod_{p = 1 (4), p < B} ((p-1)/(p-g(p)))^2
//              prod_{p = 3 (4), p^2 < B} (p^2-1)/(p^2-g(p)^2)
// for real g with |g| <= 1. B is a norm bound, so this equals partial_P of
// g o N factor by factor (the 1/(2 - g(2)) factor needs B > 2).
[[nodiscard]] double rational_euler_value(const RationalRule& g, std::uint64_t norm_bound);

// tends_to_zero when S(B) - S(B/4) >= 0.05 and S(B) > 3; converged when the
// spec carries a tail envelope (or S is identically 0); otherwise
// inconclusive. Thresholds are heuristic.
inline constexpr double kGrowthThreshold = 0.05;
inline constexpr double kDivergenceThreshold = 3.0;

[[nodiscard]] Verdict vanishing_probe(const MultFunc& f, std::uint64_t budget_bound);

// P(f) * sum_k w_k f(i)^k with w the quadrant weights of U. P(f) is taken
// from partial_P at norm_bound; a tends_to_zero verdict gives 0 and an
// inconclusive one throws DomainError.
[[nodiscard]] Complex quadrant_limit(const MultFunc& f, const JordanRegion& region,
                                       std::uint64_t norm_bound = 1'000'000);

} // namespace gmf
