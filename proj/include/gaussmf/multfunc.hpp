#pragma once

// Bounded completely multiplicative functions f: G* -> C, specified by f(i)
// and a rule on the first-quadrant primes.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gaussmf/gint.hpp"
#include "gaussmf/primes.hpp"

namespace gmf {

using Complex = std::complex<double>;
using PrimeRule = std::function<Complex(const CanonicalPrime&)>;
// Value of a completely multiplicative g: N -> C at a rational prime.
using RationalRule = std::function<Complex(std::uint64_t)>;
// e(B) >= sum over p in P1 with N(p) > B of |1 - f(p)| / N(p).
using TailEnvelope = std::function<double(std::uint64_t)>;

class MultFunc {
public:
    MultFunc(std::string name, Unit value_at_i, PrimeRule rule,
             std::optional<TailEnvelope> tail_envelope = std::nullopt);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] Unit value_at_i() const noexcept { return value_at_i_; }
    [[nodiscard]] const std::optional<TailEnvelope>& tail_envelope() const noexcept { return tail_; }

    // f(u) = f(i)^k for u = i^k.
    [[nodiscard]] Complex at_unit(Unit u) const noexcept;
    // f(p); throws DomainError when the rule returns |f(p)| > 1.
    [[nodiscard]] Complex at_prime(const CanonicalPrime& p) const;

    // Same prime rule, different f(i).
    [[nodiscard]] MultFunc with_value_at_i(Unit u) const;
    // n -> conj(f(n)).
    [[nodiscard]] MultFunc conjugate() const;

private:
    std::string name_;
    Unit value_at_i_;
    PrimeRule rule_;
    std::optional<TailEnvelope> tail_;
};

[[nodiscard]] Complex unit_power(Unit u) noexcept;

// f(n) = f(unit) * prod f(p)^e over the factorization of n != 0.
[[nodiscard]] Complex eval(const MultFunc& f, const GaussInt& n);
[[nodiscard]] Complex eval(const MultFunc& f, const GaussInt& n, const Factorizer& fz);

// f = g o N: f(i) = 1, f(p) = g(N(p)) expanded over the rational factorization of N(p).
[[nodiscard]] MultFunc from_rational(std::string name, RationalRule g,
                                     std::optional<TailEnvelope> tail_envelope = std::nullopt);

// Evaluates a rational completely multiplicative g at n >= 1 directly.
[[nodiscard]] Complex eval_rational(const RationalRule& g, std::uint64_t n);

// Builtins.
[[nodiscard]] RationalRule rational_one();
[[nodiscard]] RationalRule rational_liouville();
// g(2) = 0, g(p) = +1 for p = 1 mod 4, -1 for p = 3 mod 4.
[[nodiscard]] RationalRule rational_chi4();

[[nodiscard]] MultFunc constant_one();
[[nodiscard]] MultFunc liouville_norm();
[[nodiscard]] MultFunc chi4_complete();
// f(i) = 1, f(p) = +-1 from a hash of (seed, Re p, Im p): order independent.
[[nodiscard]] MultFunc random_pm1(std::uint64_t seed);
// CSV of "prime,value" rows over rational primes; an optional "default,value"
// row covers unlisted primes (default 1). The function is g o N.
[[nodiscard]] MultFunc rational_table(const std::filesystem::path& csv);

// Resolves one, liouville_norm, chi4_complete, random_pm1:<seed>, rational:<file>.
[[nodiscard]] MultFunc builtin_spec(std::string_view name);

// Distinct values of Arg(f(p)) over p in P1 with N(p) < norm_bound, sorted,
// deduplicated at absolute tolerance 1e-12.
[[nodiscard]] std::vector<double> arg_profile(const MultFunc& f, std::uint64_t norm_bound);

// Memo of prime values; concurrent readers, racing writers keep the first value.
class EvalCache {
public:
    explicit EvalCache(MultFunc f) : f_(std::move(f)) {}

    [[nodiscard]] Complex at_prime(const CanonicalPrime& p);
    [[nodiscard]] Complex eval(const GaussInt& n);
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const MultFunc& function() const noexcept { return f_; }

private:
    MultFunc f_;
    mutable std::shared_mutex mu_;
    std::unordered_map<std::uint64_t, Complex> memo_;
};

} // namespace gmf
