#pragma once

// Batch Omega(m^2 + n^2) over the box 1 <= m, n <= N.

#include <cstdint>
#include <vector>

namespace gmf {

class OmegaTable {
public:
    OmegaTable() = default;
    OmegaTable(int n, std::vector<std::uint8_t> values) : n_(n), values_(std::move(values)) {}

    [[nodiscard]] int size() const noexcept { return n_; }
    // 1-based (m, n)
    [[nodiscard]] int at(int m, int n) const
    {
        return values_[static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(n - 1)];
    }
    [[nodiscard]] const std::vector<std::uint8_t>& values() const noexcept { return values_; }

    // Exact counts of each Omega value over the sub-box [1, sub]^2.
    [[nodiscard]] std::vector<std::uint64_t> histogram(int sub) const;

    friend bool operator==(const OmegaTable&, const OmegaTable&) = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> values_;
};

// Largest box side accepted (N^2 bytes of table).
inline constexpr int kMaxOmegaBox = 20000;

// Row-sieve kernel, OpenMP-parallel over rows. For each row m the values
// m^2 + n^2 are stripped of every rational prime p <= sqrt(2) N by visiting
// only the residue classes n = +-m*sqrt(-1) (mod p); a cofactor > 1 left
// over is prime.
[[nodiscard]] OmegaTable omega_box_table(int n);

// Serial reference: per-cell big_omega_norm by trial division.
[[nodiscard]] OmegaTable omega_box_table_reference(int n);

} // namespace gmf
