#include "gaussmf/multfunc.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace gmf {

namespace {

constexpr double kBoundSlack = 1e-12;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t prime_key(const GaussInt& p)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.re())) << 32) |
           static_cast<std::uint32_t>(p.im());
}

TailEnvelope zero_envelope()
{
    return [](std::uint64_t) { return 0.0; };
}

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& context)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw DomainError("cannot parse number '" + s + "' in " + context);
    }
}

} // namespace

MultFunc::MultFunc(std::string name, Unit value_at_i, PrimeRule rule,
                   std::optional<TailEnvelope> tail_envelope)
    : name_(std::move(name)), value_at_i_(value_at_i), rule_(std::move(rule)), tail_(std::move(tail_envelope))
{
    if (!rule_) throw DomainError("multiplicative function needs a prime rule");
}

Complex unit_power(Unit u) noexcept
{
    switch (u) {
    case Unit::One: return {1.0, 0.0};
    case Unit::I: return {0.0, 1.0};
    case Unit::MinusOne: return {-1.0, 0.0};
    case Unit::MinusI: return {0.0, -1.0};
    }
    return {1.0, 0.0};
}

Complex MultFunc::at_unit(Unit u) const noexcept
{
    return unit_power(unit_from_exponent(unit_exponent(value_at_i_) * unit_exponent(u)));
}

Complex MultFunc::at_prime(const CanonicalPrime& p) const
{
    const Complex v = rule_(p);
    if (std::abs(v) > 1.0 + kBoundSlack) {
        throw DomainError("spec " + name_ + " has |f(" + to_string(p.value) + ")| > 1");
    }
    return v;
}

MultFunc MultFunc::with_value_at_i(Unit u) const
{
    MultFunc copy = *this;
    copy.value_at_i_ = u;
    copy.name_ = name_ + "[f(i)=" + to_string(u) + "]";
    return copy;
}

MultFunc MultFunc::conjugate() const
{
    // f(i) is a fourth root of unity; conj(i^k) = i^{-k}.
    const Unit ci = unit_from_exponent(-unit_exponent(value_at_i_));
    PrimeRule r = [rule = rule_](const CanonicalPrime& p) { return std::conj(rule(p)); };
    return MultFunc("conj(" + name_ + ")", ci, std::move(r), tail_);
}

Complex eval(const MultFunc& f, const GaussInt& n)
{
    const Factorization fac = factor(n);
    Complex v = f.at_unit(fac.unit);
    for (const auto& pp : fac.factors) {
        const Complex fp = f.at_prime(pp.prime);
        for (int k = 0; k < pp.exponent; ++k) v *= fp;
    }
    return v;
}

Complex eval(const MultFunc& f, const GaussInt& n, const Factorizer& fz)
{
    Complex v{1.0, 0.0};
    const Unit u = fz.visit_factors(n, [&](const CanonicalPrime& p, int e) {
        const Complex fp = f.at_prime(p);
        for (int k = 0; k < e; ++k) v *= fp;
    });
    return v * f.at_unit(u);
}

Complex eval_rational(const RationalRule& g, std::uint64_t n)
{
    if (n == 0) throw DomainError("g(0) is undefined");
    Complex v{1.0, 0.0};
    for (const auto& rp : factor_rational(n)) {
        const Complex gp = g(rp.prime);
        for (int k = 0; k < rp.exponent; ++k) v *= gp;
    }
    return v;
}

MultFunc from_rational(std::string name, RationalRule g, std::optional<TailEnvelope> tail_envelope)
{
    PrimeRule rule = [g = std::move(g)](const CanonicalPrime& p) -> Complex {
        if (p.cls == PrimeClass::Inert) {
            const Complex q = g(static_cast<std::uint64_t>(p.value.re()));
            return q * q;
        }
        return g(p.norm);
    };
    return MultFunc(std::move(name), Unit::One, std::move(rule), std::move(tail_envelope));
}

RationalRule rational_one()
{
    return [](std::uint64_t) { return Complex{1.0, 0.0}; };
}

RationalRule rational_liouville()
{
    return [](std::uint64_t) { return Complex{-1.0, 0.0}; };
}

RationalRule rational_chi4()
{
    return [](std::uint64_t p) {
        if (p == 2) return Complex{0.0, 0.0};
        return p % 4 == 1 ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
    };
}

MultFunc constant_one() { return from_rational("one", rational_one(), zero_envelope()); }

MultFunc liouville_norm() { return from_rational("liouville_norm", rational_liouville()); }

MultFunc chi4_complete()
{
    // f(p) = 1 for every p in P1 other than 1+i.
    return from_rational("chi4_complete", rational_chi4(), zero_envelope());
}

MultFunc random_pm1(std::uint64_t seed)
{
    const std::uint64_t salt = splitmix64(seed);
    PrimeRule rule = [salt](const CanonicalPrime& p) {
        const std::uint64_t h = splitmix64(salt ^ splitmix64(prime_key(p.value)));
        return (h >> 63) ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    };
    return MultFunc("random_pm1:" + std::to_string(seed), Unit::One, std::move(rule));
}

MultFunc rational_table(const std::filesystem::path& csv)
{
    std::ifstream in(csv);
    if (!in) throw DomainError("cannot open rational table " + csv.string());
    std::map<std::uint64_t, double> values;
    double fallback = 1.0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DomainError(csv.string() + ":" + std::to_string(lineno) + ": expected prime,value");
        }
        const std::string key = trim(line.substr(0, comma));
        const std::string val = trim(line.substr(comma + 1));
        if (key == "prime") continue; // header
        const std::string ctx = csv.string() + ":" + std::to_string(lineno);
        const double v = parse_double(val, ctx);
        if (std::fabs(v) > 1.0 + kBoundSlack) throw DomainError(ctx + ": |value| > 1");
        if (key == "default") {
            fallback = v;
            continue;
        }
        std::uint64_t p = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), p);
        if (ec != std::errc{} || ptr != key.data() + key.size() || !is_prime_u64(p)) {
            throw DomainError(ctx + ": '" + key + "' is not a rational prime");
        }
        values[p] = v;
    }
    RationalRule g = [values, fallback](std::uint64_t p) {
        const auto it = values.find(p);
        return Complex{it == values.end() ? fallback : it->second, 0.0};
    };
    std::optional<TailEnvelope> env;
    if (fallback == 1.0) {
        // Exact tail: only listed primes can differ from 1.
        env = [values](std::uint64_t bound) {
            double tail = 0.0;
            for (const auto& [q, v] : values) {
                const double qd = static_cast<double>(q);
                if (q == 2) {
                    if (2 > bound) tail += std::fabs(1.0 - v) / 2.0;
                } else if (q % 4 == 1) {
                    if (q > bound) tail += 2.0 * std::fabs(1.0 - v) / qd;
                } else if (q * q > bound) {
                    tail += std::fabs(1.0 - v * v) / (qd * qd);
                }
            }
            return tail;
        };
    }
    return from_rational("rational:" + csv.string(), std::move(g), std::move(env));
}

MultFunc builtin_spec(std::string_view name)
{
    if (name == "one") return constant_one();
    if (name == "liouville_norm") return liouville_norm();
    if (name == "chi4_complete") return chi4_complete();
    constexpr std::string_view kRandom = "random_pm1:";
    constexpr std::string_view kRational = "rational:";
    if (name.substr(0, kRandom.size()) == kRandom) {
        const auto digits = name.substr(kRandom.size());
        std::uint64_t seed = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw DomainError("bad seed in spec name '" + std::string(name) + "'");
        }
        return random_pm1(seed);
    }
    if (name.substr(0, kRational.size()) == kRational) {
        return rational_table(std::filesystem::path(std::string(name.substr(kRational.size()))));
    }
    throw DomainError("unknown spec '" + std::string(name) + "'");
}

std::vector<double> arg_profile(const MultFunc& f, std::uint64_t norm_bound)
{
    std::vector<double> args;
    for_each_p1(norm_bound, [&](const CanonicalPrime& p) {
        const Complex v = f.at_prime(p);
        double a = v == Complex{} ? 0.0 : std::arg(v) + 0.0;
        if (a >= std::numbers::pi) a = -std::numbers::pi;
        const bool seen = std::any_of(args.begin(), args.end(),
                                      [a](double b) { return std::fabs(a - b) <= 1e-12; });
        if (!seen) args.push_back(a);
    });
    std::sort(args.begin(), args.end());
    return args;
}

Complex EvalCache::at_prime(const CanonicalPrime& p)
{
    const std::uint64_t key = prime_key(p.value);
    {
        std::shared_lock lock(mu_);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const Complex v = f_.at_prime(p);
    std::unique_lock lock(mu_);
    return memo_.try_emplace(key, v).first->second;
}

Complex EvalCache::eval(const GaussInt& n)
{
    const Factorization fac = factor(n);
    Complex v = f_.at_unit(fac.unit);
    for (const auto& pp : fac.factors) {
        const Complex fp = at_prime(pp.prime);
        for (int k = 0; k < pp.exponent; ++k) v *= fp;
    }
    return v;
}

std::size_t EvalCache::size() const
{
    std::shared_lock lock(mu_);
    return memo_.size();
}

} // namespace gmf
