#pragma once

// Dilated Folner sequences Phi_N = G* cap k_N U with k_N = c N, and the
// averages taken along them.

#include <cstdint>
#include <span>
#include <vector>

#include "gaussmf/gint.hpp"
#include "gaussmf/multfunc.hpp"
#include "gaussmf/region.hpp"

namespace gmf {

// Largest |Phi_N| that enumerate() materializes, and the largest bounding
// box the streaming kernels scan.
inline constexpr std::uint64_t kMaxEnumerate = 50'000'000ULL;
inline constexpr std::uint64_t kMaxScanCells = 400'000'000ULL;

class DilatedFolner {
public:
    explicit DilatedFolner(JordanRegion region, double scale_factor = 1.0);

    [[nodiscard]] const JordanRegion& region() const noexcept { return region_; }
    [[nodiscard]] double scale_factor() const noexcept { return c_; }
    [[nodiscard]] double scale(int n) const;

    // z in Phi_N: nonzero and z / k_N in U.
    [[nodiscard]] bool contains(std::int64_t x, std::int64_t y, int n) const;
    [[nodiscard]] bool contains(const GaussInt& z, int n) const { return contains(z.re(), z.im(), n); }
    [[nodiscard]] LatticeBox box(int n) const;

private:
    JordanRegion region_;
    double c_;
};

// Phi_N in row order (Re ascending, then Im ascending).
[[nodiscard]] std::vector<GaussInt> enumerate(const DilatedFolner& seq, int n,
                                              std::uint64_t budget = kMaxEnumerate);
[[nodiscard]] std::uint64_t count(const DilatedFolner& seq, int n);

struct AverageResult {
    Complex value;
    std::uint64_t count = 0;
};

// E_{n in Phi_N} f(n). OpenMP over rows of the bounding box with per-row
// compensated partials merged in row order, so the value is bit-identical
// for every worker count.
[[nodiscard]] AverageResult average(const MultFunc& f, const DilatedFolner& seq, int n);
// Serial reference: one compensated sum in row order, general factorization.
[[nodiscard]] AverageResult average_reference(const MultFunc& f, const DilatedFolner& seq, int n);

// (1 / L(A)) sum_{n in A} f(n) / N(n) with L(A) = sum 1 / N(n).
[[nodiscard]] Complex log_average(const MultFunc& f, std::span<const GaussInt> set);

// |(Phi_N + h) symmetric-difference Phi_N| / |Phi_N|.
[[nodiscard]] double folner_defect(const DilatedFolner& seq, int n, const GaussInt& h);

// |Phi_N/a symmetric-difference Phi_N/b| / |Phi_N/a| with A/z = {x : xz in A}.
[[nodiscard]] double dilation_stability(const DilatedFolner& seq, int n, const GaussInt& a, const GaussInt& b);

// {x in G : x p in Phi_N}, row order.
[[nodiscard]] std::vector<GaussInt> divide_set(const DilatedFolner& seq, int n, const GaussInt& p);

} // namespace gmf
