#include "gaussmf/ergodic.hpp"

#include <cmath>
#include <numeric>
#include <numbers>
#include <sstream>

#include "gaussmf/discrepancy.hpp"
#include "gaussmf/parallel.hpp"

namespace gmf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxAffineDim = 6;

long double binomial(std::uint64_t j, int i)
{
    long double c = 1.0L;
    for (int t = 0; t < i; ++t) c = c * static_cast<long double>(j - static_cast<std::uint64_t>(t)) / (t + 1);
    return c;
}

int parse_int(const std::string& s, const std::string& ctx)
{
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("bad integer '" + s + "' in " + ctx);
}

double parse_real(const std::string& s, const std::string& ctx)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("bad number '" + s + "' in " + ctx);
}

void check_box_index(const OmegaTable& table, int n)
{
    if (n < 1 || n > table.size()) throw DomainError("box size outside the Omega table");
}

// (point, weight) atoms of g(Omega) mod 1 over the box.
std::vector<std::pair<double, double>> omega_atoms(const OmegaTable& table, int n,
                                                   const std::function<long double(int)>& g)
{
    check_box_index(table, n);
    const auto hist = table.histogram(n);
    std::vector<std::pair<double, double>> atoms;
    for (std::size_t w = 0; w < hist.size(); ++w) {
        if (hist[w] == 0) continue;
        atoms.emplace_back(frac(g(static_cast<int>(w))), static_cast<double>(hist[w]));
    }
    return atoms;
}

std::uint64_t tau_power(const TauAssignment& tau, const ClassExponents& ce)
{
    return static_cast<std::uint64_t>(tau.ramified * ce.ramified + tau.split * ce.split + tau.inert * ce.inert);
}

void check_tau(const DynamicalSystem& s, const TauAssignment& tau)
{
    if (tau.ramified < 0 || tau.split < 0 || tau.inert < 0) {
        throw DomainError("tau powers must be nonnegative");
    }
    if (!s.power_uniquely_ergodic(tau.split)) {
        throw DomainError("T^" + std::to_string(tau.split) + " is not uniquely ergodic on " + s.describe());
    }
}

// F(T^j x0) for every power reachable below norm 2^64.
std::vector<double> orbit_values(const DynamicalSystem& s, const State& x0, const Observable& f,
                                 const TauAssignment& tau)
{
    const std::int64_t top = 64 * std::max({tau.ramified, tau.split, tau.inert});
    std::vector<double> v(static_cast<std::size_t>(top) + 1);
    for (std::int64_t j = 0; j <= top; ++j) v[static_cast<std::size_t>(j)] = f(s, s.iterate(x0, static_cast<std::uint64_t>(j)));
    return v;
}

struct RowPartial {
    CompensatedSum sum;
    std::uint64_t count = 0;

    void add(const RowPartial& o)
    {
        sum.add(o.sum);
        count += o.count;
    }
};

} // namespace

DynamicalSystem DynamicalSystem::cyclic(int q)
{
    if (q < 1) throw DomainError("cyclic system needs q >= 1");
    return {Kind::Cyclic, q, 0.0, 1};
}

DynamicalSystem DynamicalSystem::torus(double alpha)
{
    if (!std::isfinite(alpha)) throw DomainError("rotation needs a finite alpha");
    return {Kind::Torus, 0, alpha, 1};
}

DynamicalSystem DynamicalSystem::affine_unipotent(int d, double alpha)
{
    if (d < 1 || d > kMaxAffineDim) throw DomainError("affine unipotent system needs 1 <= d <= 6");
    if (!std::isfinite(alpha)) throw DomainError("affine unipotent system needs a finite alpha");
    return {Kind::AffineUnipotent, 0, alpha, d};
}

DynamicalSystem DynamicalSystem::two_point() { return {Kind::TwoPoint, 2, 0.0, 1}; }

std::string DynamicalSystem::describe() const
{
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
    case Kind::Cyclic: os << "cyclic(" << q_ << ")"; break;
    case Kind::Torus: os << "torus(" << alpha_ << ")"; break;
    case Kind::AffineUnipotent: os << "affine_unipotent(" << d_ << ", " << alpha_ << ")"; break;
    case Kind::TwoPoint: os << "two_point"; break;
    }
    return os.str();
}

State DynamicalSystem::iterate(const State& x, std::uint64_t j) const
{
    if (x.size() != static_cast<std::size_t>(d_)) throw DomainError("state has the wrong dimension");
    switch (kind_) {
    case Kind::Cyclic:
    case Kind::TwoPoint: {
        const auto s = static_cast<std::uint64_t>(std::llround(x[0]));
        return {static_cast<double>((s + j) % static_cast<std::uint64_t>(q_))};
    }
    case Kind::Torus: return {frac(static_cast<long double>(x[0]) + static_cast<long double>(j) * alpha_)};
    case Kind::AffineUnipotent: {
        State out(x.size());
        for (int k = 1; k <= d_; ++k) {
            long double v = binomial(j, k) * alpha_;
            for (int i = 0; i < k; ++i) v += binomial(j, i) * x[static_cast<std::size_t>(k - i - 1)];
            out[static_cast<std::size_t>(k - 1)] = frac(v);
        }
        return out;
    }
    }
    return x;
}

bool DynamicalSystem::power_uniquely_ergodic(std::int64_t power) const
{
    if (is_finite()) return std::gcd(power, static_cast<std::int64_t>(q_)) == 1;
    return power != 0;
}

Observable Observable::indicator(int r) { return {Kind::Indicator, static_cast<double>(r), 0}; }
Observable Observable::parity() { return {Kind::Parity, 0, 0}; }
Observable Observable::cos_mode(int h) { return {Kind::Cos, static_cast<double>(h), 0}; }
Observable Observable::sin_mode(int h) { return {Kind::Sin, static_cast<double>(h), 0}; }
Observable Observable::cos_squared(int h) { return {Kind::CosSquared, static_cast<double>(h), 0}; }

Observable Observable::interval(double a, double b)
{
    if (!(a >= 0 && a <= b && b <= 1)) throw DomainError("interval observable needs 0 <= a <= b <= 1");
    return {Kind::Interval, a, b};
}

Observable Observable::parse(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.empty()) throw DomainError("empty observable");
    const std::string& head = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n) throw DomainError("observable '" + text + "' has the wrong number of fields");
    };
    if (head == "parity") {
        want(1);
        return parity();
    }
    if (head == "indicator") {
        want(2);
        return indicator(parse_int(parts[1], text));
    }
    if (head == "cos") {
        want(2);
        return cos_mode(parse_int(parts[1], text));
    }
    if (head == "sin") {
        want(2);
        return sin_mode(parse_int(parts[1], text));
    }
    if (head == "cos2") {
        want(2);
        return cos_squared(parse_int(parts[1], text));
    }
    if (head == "interval") {
        want(3);
        return interval(parse_real(parts[1], text), parse_real(parts[2], text));
    }
    throw DomainError("unknown observable '" + text + "'");
}

std::string Observable::describe() const
{
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
    case Kind::Indicator: os << "indicator:" << a_; break;
    case Kind::Parity: os << "parity"; break;
    case Kind::Cos: os << "cos:" << a_; break;
    case Kind::Sin: os << "sin:" << a_; break;
    case Kind::CosSquared: os << "cos2:" << a_; break;
    case Kind::Interval: os << "interval:" << a_ << ":" << b_; break;
    }
    return os.str();
}

double Observable::operator()(const DynamicalSystem& s, const State& x) const
{
    if (s.is_finite()) {
        const double v = x.front();
        switch (kind_) {
        case Kind::Indicator: return v == a_ ? 1.0 : 0.0;
        case Kind::Parity: return std::llround(v) % 2 == 0 ? 1.0 : -1.0;
        default: break;
        }
        // Trigonometric observables on Z/q use the angle x/q.
        const double t = v / s.modulus();
        switch (kind_) {
        case Kind::Cos: return std::cos(kTwoPi * a_ * t);
        case Kind::Sin: return std::sin(kTwoPi * a_ * t);
        case Kind::CosSquared: {
            const double c = std::cos(kTwoPi * a_ * t);
            return c * c;
        }
        case Kind::Interval: return t >= a_ && t < b_ ? 1.0 : 0.0;
        default: break;
        }
        return 0.0;
    }
    const double t = x.back();
    switch (kind_) {
    case Kind::Indicator: return t == a_ ? 1.0 : 0.0;
    case Kind::Parity: throw DomainError("parity needs a finite system");
    case Kind::Cos: return std::cos(kTwoPi * a_ * t);
    case Kind::Sin: return std::sin(kTwoPi * a_ * t);
    case Kind::CosSquared: {
        const double c = std::cos(kTwoPi * a_ * t);
        return c * c;
    }
    case Kind::Interval: return t >= a_ && t < b_ ? 1.0 : 0.0;
    }
    return 0.0;
}

double invariant_integral(const DynamicalSystem& s, const Observable& f)
{
    if (s.is_finite()) {
        CompensatedSum sum;
        for (int r = 0; r < s.modulus(); ++r) sum.add(f(s, State{static_cast<double>(r)}));
        return sum.value() / s.modulus();
    }
    switch (f.kind()) {
    case Observable::Kind::Indicator: return 0.0;
    case Observable::Kind::Parity: throw DomainError("parity needs a finite system");
    case Observable::Kind::Cos: return f.a() == 0 ? 1.0 : 0.0;
    case Observable::Kind::Sin: return 0.0;
    case Observable::Kind::CosSquared: return f.a() == 0 ? 1.0 : 0.5;
    case Observable::Kind::Interval: return f.b() - f.a();
    }
    return 0.0;
}

double orbit_average_omega(const DynamicalSystem& s, const State& x0, const Observable& f, const OmegaTable& table,
                           int n)
{
    check_box_index(table, n);
    const auto hist = table.histogram(n);
    CompensatedSum sum;
    for (std::size_t w = 0; w < hist.size(); ++w) {
        if (hist[w] == 0) continue;
        sum.add(static_cast<double>(hist[w]) * f(s, s.iterate(x0, w)));
    }
    return sum.value() / (static_cast<double>(n) * static_cast<double>(n));
}

double orbit_average_omega(const DynamicalSystem& s, const State& x0, const Observable& f, int n)
{
    return orbit_average_omega(s, x0, f, omega_box_table(n), n);
}

std::vector<double> residue_histogram(int q, const OmegaTable& table, int n)
{
    if (q < 1) throw DomainError("residue histogram needs q >= 1");
    check_box_index(table, n);
    const auto hist = table.histogram(n);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(q), 0);
    for (std::size_t w = 0; w < hist.size(); ++w) counts[w % static_cast<std::size_t>(q)] += hist[w];
    const double total = static_cast<double>(n) * static_cast<double>(n);
    std::vector<double> out(counts.size());
    for (std::size_t r = 0; r < counts.size(); ++r) out[r] = static_cast<double>(counts[r]) / total;
    return out;
}

std::vector<double> residue_histogram(int q, int n) { return residue_histogram(q, omega_box_table(n), n); }

double delange_discrepancy(double alpha, const OmegaTable& table, int n)
{
    return weighted_star_discrepancy(
        omega_atoms(table, n, [alpha](int w) { return static_cast<long double>(w) * alpha; }));
}

double delange_discrepancy(double alpha, int n) { return delange_discrepancy(alpha, omega_box_table(n), n); }

double weyl_poly_discrepancy(std::span<const double> coeffs, const OmegaTable& table, int n)
{
    const std::vector<double> c(coeffs.begin(), coeffs.end());
    return weighted_star_discrepancy(omega_atoms(table, n, [&c](int w) {
        long double v = 0.0L;
        for (std::size_t k = c.size(); k-- > 0;) v = v * w + c[k];
        return v;
    }));
}

double weyl_poly_discrepancy(std::span<const double> coeffs, int n)
{
    return weyl_poly_discrepancy(coeffs, omega_box_table(n), n);
}

double tau_orbit_average(const DynamicalSystem& s, const State& x0, const TauAssignment& tau, const Observable& f,
                         const DilatedFolner& seq, int n)
{
    check_tau(s, tau);
    const auto values = orbit_values(s, x0, f, tau);
    const LatticeBox b = seq.box(n);
    if (b.empty()) throw DomainError("Phi_N is empty");
    if (b.cells() > kMaxScanCells) throw ResourceError("bounding box exceeds the scan budget");
    const auto ax = static_cast<std::uint64_t>(std::max(std::llabs(b.x0), std::llabs(b.x1)));
    const auto ay = static_cast<std::uint64_t>(std::max(std::llabs(b.y0), std::llabs(b.y1)));
    const Factorizer fz(ax * ax + ay * ay);
    const auto rows = static_cast<std::size_t>(b.x1 - b.x0 + 1);
    std::vector<RowPartial> partials(rows);

#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < rows; ++i) {
        const std::int64_t x = b.x0 + static_cast<std::int64_t>(i);
        RowPartial row;
        for (std::int64_t y = b.y0; y <= b.y1; ++y) {
            if (!seq.contains(x, y, n)) continue;
            const auto nn = static_cast<std::uint64_t>(x * x + y * y);
            row.sum.add(values[tau_power(tau, fz.class_exponents(nn))]);
            ++row.count;
        }
        partials[i] = row;
    }
    const RowPartial total = merge_in_order(partials);
    if (total.count == 0) throw DomainError("Phi_N is empty");
    return total.sum.value() / static_cast<double>(total.count);
}

double tau_orbit_average_reference(const DynamicalSystem& s, const State& x0, const TauAssignment& tau,
                                   const Observable& f, const DilatedFolner& seq, int n)
{
    check_tau(s, tau);
    CompensatedSum sum;
    std::uint64_t c = 0;
    for (const GaussInt& z : enumerate(seq, n)) {
        State x = x0;
        for (const auto& pp : factor(z).factors) {
            std::int64_t power = tau.split;
            if (pp.prime.cls == PrimeClass::Ramified) power = tau.ramified;
            if (pp.prime.cls == PrimeClass::Inert) power = tau.inert;
            x = s.iterate(x, static_cast<std::uint64_t>(power * pp.exponent));
        }
        sum.add(f(s, x));
        ++c;
    }
    if (c == 0) throw DomainError("Phi_N is empty");
    return sum.value() / static_cast<double>(c);
}

} // namespace gmf
