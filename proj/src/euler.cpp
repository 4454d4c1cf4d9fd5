#include "gaussmf/euler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaussmf/parallel.hpp"

namespace gmf {

const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Converged: return "converged";
    case Verdict::TendsToZero: return "tends_to_zero";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

// Distinct arguments seen so far, capped at kMaxArgCount + 1.
class ArgSet {
public:
    void add(const Complex& v)
    {
        if (values_.size() > kMaxArgCount) return;
        double a = v == Complex{} ? 0.0 : std::arg(v) + 0.0;
        if (a >= std::numbers::pi) a = -std::numbers::pi;
        const auto it = std::lower_bound(values_.begin(), values_.end(), a - 1e-12);
        if (it != values_.end() && std::fabs(*it - a) <= 1e-12) return;
        values_.insert(it, a);
    }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

double real_value(const RationalRule& g, std::uint64_t p)
{
    const Complex v = g(p);
    if (v.imag() != 0.0) throw DomainError("rational_euler_value needs a real-valued g");
    if (std::fabs(v.real()) > 1.0 + 1e-12) throw DomainError("rational_euler_value needs |g| <= 1");
    return v.real();
}

} // namespace

ProductReport partial_P(const MultFunc& f, std::uint64_t norm_bound)
{
    if (norm_bound < 2) throw DomainError("partial_P needs norm_bound >= 2");
    ProductReport r;
    r.norm_bound = norm_bound;
    std::complex<long double> product{1.0L, 0.0L};
    long double log_modulus = 0.0L;
    CompensatedSum s_full, s_quarter;
    ArgSet args;
    const double quarter = static_cast<double>(norm_bound) / 4.0;

    for_each_p1(norm_bound, [&](const CanonicalPrime& p) {
        const Complex fp = f.at_prime(p);
        const auto n = static_cast<long double>(p.norm);
        const std::complex<long double> factor =
            (n - 1.0L) / (n - std::complex<long double>(fp.real(), fp.imag()));
        product *= factor;
        log_modulus += std::log(std::abs(factor));
        const double term = std::abs(1.0 - fp) / static_cast<double>(p.norm);
        s_full.add(term);
        if (static_cast<double>(p.norm) < quarter) s_quarter.add(term);
        args.add(fp);
        ++r.factor_count;
    });

    const long double phase = std::arg(product);
    const long double modulus = std::exp(log_modulus);
    r.partial_value = Complex(static_cast<double>(modulus * std::cos(phase)),
                              static_cast<double>(modulus * std::sin(phase)));
    r.s_full = s_full.value();
    r.s_quarter = s_quarter.value();
    r.arg_count = args.size();
    if (f.tail_envelope()) r.tail_bound = (*f.tail_envelope())(norm_bound);

    if (r.arg_count > kMaxArgCount) {
        r.verdict = Verdict::Inconclusive;
    } else if (r.s_full > kDivergenceThreshold && r.s_full - r.s_quarter >= kGrowthThreshold) {
        r.verdict = Verdict::TendsToZero;
    } else if (f.tail_envelope() || r.s_full == 0.0) {
        r.verdict = Verdict::Converged;
    } else {
        r.verdict = Verdict::Inconclusive;
    }
    return r;
}

double rational_euler_value(const RationalRule& g, std::uint64_t norm_bound)
{
    if (norm_bound < 2) throw DomainError("rational_euler_value needs norm_bound >= 2");
    long double v = 1.0L;
    if (norm_bound > 2) v /= 2.0L - real_value(g, 2);
    for (const std::uint32_t p : rational_primes(norm_bound)) {
        if (p == 2) continue;
        const auto pl = static_cast<long double>(p);
        const long double gp = real_value(g, p);
        if (p % 4 == 1) {
            const long double t = (pl - 1.0L) / (pl - gp);
            v *= t * t;
        } else if (static_cast<std::uint64_t>(p) * p < norm_bound) {
            v *= (pl * pl - 1.0L) / (pl * pl - gp * gp);
        }
    }
    return static_cast<double>(v);
}

Verdict vanishing_probe(const MultFunc& f, std::uint64_t budget_bound)
{
    return partial_P(f, budget_bound).verdict;
}

Complex quadrant_limit(const MultFunc& f, const JordanRegion& region, std::uint64_t norm_bound)
{
    const auto w = quadrant_weights(region);
    Complex s{};
    for (int k = 0; k < 4; ++k) s += w[static_cast<std::size_t>(k)] * f.at_unit(unit_from_exponent(k));
    const ProductReport r = partial_P(f, norm_bound);
    switch (r.verdict) {
    case Verdict::Inconclusive:
        throw DomainError("P(" + f.name() + ") is inconclusive at norm bound " + std::to_string(norm_bound));
    case Verdict::TendsToZero: return {0.0, 0.0};
    case Verdict::Converged: break;
    }
    return r.partial_value * s;
}

} // namespace gmf
