#pragma once

// Star discrepancy D* = sup_t |#{x_j < t} / M - t| of samples in [0, 1).

#include <span>
#include <utility>
#include <vector>

namespace gmf {

// x - floor(x), folded into [0, 1).
[[nodiscard]] double frac(long double x) noexcept;

// Sorted-sample formula: D* = max_j max(|c_j^- - x_j|, |c_j^+ - x_j|) where
// c_j^-, c_j^+ are the empirical masses strictly below and up to x_j.
[[nodiscard]] double star_discrepancy(std::vector<double> samples);

// Same for a finitely supported measure given as (point, weight) pairs;
// weights are normalized by their total.
[[nodiscard]] double weighted_star_discrepancy(std::vector<std::pair<double, double>> atoms);

} // namespace gmf
