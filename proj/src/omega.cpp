#include "gaussmf/omega.hpp"

#include <cmath>

#include "gaussmf/error.hpp"
#include "gaussmf/primes.hpp"

namespace gmf {

namespace {

void check_box(int n)
{
    if (n < 1) throw DomainError("box side N must be >= 1");
    if (n > kMaxOmegaBox) {
        throw ResourceError("box side " + std::to_string(n) + " exceeds " + std::to_string(kMaxOmegaBox));
    }
}

std::uint64_t powmod_small(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

struct SievePrime {
    std::uint32_t p;
    std::uint32_t root; // sqrt(-1) mod p for p = 1 mod 4, else 0
};

std::vector<SievePrime> sieve_primes(int n)
{
    const auto limit = static_cast<std::uint64_t>(std::ceil(std::sqrt(2.0) * n)) + 2;
    std::vector<SievePrime> out;
    for (auto p : rational_primes(limit)) {
        std::uint32_t root = 0;
        if (p % 4 == 1) {
            for (std::uint64_t c = 2;; ++c) {
                if (powmod_small(c, (p - 1) / 2, p) == p - 1) {
                    root = static_cast<std::uint32_t>(powmod_small(c, (p - 1) / 4, p));
                    break;
                }
            }
        }
        out.push_back({p, root});
    }
    return out;
}

} // namespace

std::vector<std::uint64_t> OmegaTable::histogram(int sub) const
{
    if (sub < 1 || sub > n_) throw DomainError("histogram sub-box outside table");
    std::vector<std::uint64_t> counts;
    for (int m = 1; m <= sub; ++m) {
        for (int k = 1; k <= sub; ++k) {
            const auto v = static_cast<std::size_t>(at(m, k));
            if (v >= counts.size()) counts.resize(v + 1, 0);
            ++counts[v];
        }
    }
    return counts;
}

OmegaTable omega_box_table(int n)
{
    check_box(n);
    const auto primes = sieve_primes(n);
    const auto side = static_cast<std::size_t>(n);
    std::vector<std::uint8_t> values(side * side, 0);

#pragma omp parallel
    {
        std::vector<std::uint64_t> rem(side + 1);
        std::vector<std::uint8_t> om(side + 1);

#pragma omp for schedule(dynamic, 8)
        for (int m = 1; m <= n; ++m) {
            const auto mm = static_cast<std::uint64_t>(m);
            for (std::size_t k = 1; k <= side; ++k) {
                rem[k] = mm * mm + k * k;
                om[k] = 0;
            }
            auto strip = [&](std::uint64_t p, std::uint64_t start) {
                for (std::uint64_t k = start; k <= side; k += p) {
                    std::uint64_t r = rem[k];
                    while (r % p == 0) {
                        r /= p;
                        ++om[k];
                    }
                    rem[k] = r;
                }
            };
            for (const auto& sp : primes) {
                const std::uint64_t p = sp.p;
                const std::uint64_t mr = mm % p;
                if (p == 2) {
                    strip(2, mr == 0 ? 2 : 1);
                } else if (mr == 0) {
                    // p | m: need p | n regardless of class
                    strip(p, p);
                } else if (p % 4 == 1) {
                    const std::uint64_t r1 = mr * sp.root % p;
                    const std::uint64_t r2 = p - r1;
                    strip(p, r1);
                    strip(p, r2);
                }
            }
            std::uint8_t* row = values.data() + static_cast<std::size_t>(m - 1) * side;
            for (std::size_t k = 1; k <= side; ++k) {
                row[k - 1] = static_cast<std::uint8_t>(om[k] + (rem[k] > 1 ? 1 : 0));
            }
        }
    }
    return OmegaTable(n, std::move(values));
}

OmegaTable omega_box_table_reference(int n)
{
    check_box(n);
    const auto side = static_cast<std::size_t>(n);
    std::vector<std::uint8_t> values(side * side, 0);
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= n; ++k) {
            values[static_cast<std::size_t>(m - 1) * side + static_cast<std::size_t>(k - 1)] =
                static_cast<std::uint8_t>(big_omega_norm(m, k));
        }
    }
    return OmegaTable(n, std::move(values));
}

} // namespace gmf
