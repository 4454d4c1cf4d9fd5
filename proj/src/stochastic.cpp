#include "gaussmf/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "gaussmf/parallel.hpp"
#include "gaussmf/primes.hpp"

namespace gmf {

namespace {

bool lex_less(const GaussInt& a, const GaussInt& b) noexcept
{
    return std::pair(a.re(), a.im()) < std::pair(b.re(), b.im());
}

std::int64_t disk_radius(std::uint64_t norm_bound)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(norm_bound)));
    while (static_cast<std::uint64_t>(r * r) >= norm_bound && r > 0) --r;
    while (static_cast<std::uint64_t>((r + 1) * (r + 1)) < norm_bound) ++r;
    return r; // largest r with r^2 < bound
}

void check_grid(const ValueGrid& grid, std::uint64_t norm_bound, std::span<const GaussInt> shifts)
{
    if (grid_radius(norm_bound, shifts) > grid.radius()) {
        throw DomainError("value grid too small for this norm bound and these shifts");
    }
}

} // namespace

double log_weight(std::span<const GaussInt> set)
{
    CompensatedSum s;
    for (const GaussInt& z : set) {
        if (z.is_zero()) throw DomainError("log weight of a set containing 0");
        s.add(1.0 / static_cast<double>(norm(z)));
    }
    return s.value();
}

double gcd_log_moment(std::span<const GaussInt> primes)
{
    if (primes.empty()) throw DomainError("gcd_log_moment of an empty set");
    // Associate classes keyed by the first-quadrant representative; each
    // class carries its norm and the weight sum over its members.
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::uint64_t, CompensatedSum>> classes;
    CompensatedSum total;
    for (const GaussInt& p : primes) {
        if (!is_gaussian_prime(p)) throw DomainError(to_string(p) + " is not a Gaussian prime");
        const GaussInt c = canonicalize(p).second;
        const auto n = norm(p);
        auto& entry = classes[{c.re(), c.im()}];
        entry.first = n;
        entry.second.add(1.0 / static_cast<double>(n));
        total.add(1.0 / static_cast<double>(n));
    }
    const double l = total.value();
    CompensatedSum num;
    num.add(l * l);
    for (const auto& [key, entry] : classes) {
        const double w = entry.second.value();
        num.add(static_cast<double>(entry.first - 1) * w * w);
    }
    return num.value() / (l * l);
}

double set_log_moment(std::span<const GaussInt> set)
{
    const double l = log_weight(set);
    if (set.empty()) throw DomainError("set_log_moment of an empty set");
    const auto m = static_cast<std::int64_t>(set.size());
    std::vector<CompensatedSum> rows(set.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < m; ++i) {
        const GaussInt& a = set[static_cast<std::size_t>(i)];
        const double wa = 1.0 / static_cast<double>(norm(a));
        CompensatedSum& row = rows[static_cast<std::size_t>(i)];
        for (const GaussInt& b : set) {
            row.add(wa / static_cast<double>(norm(b)) * static_cast<double>(gcd_norm(a, b)));
        }
    }
    return merge_in_order(rows).value() / (l * l);
}

std::vector<GaussInt> product_set(std::span<const GaussInt> f1, std::span<const GaussInt> f2)
{
    std::vector<GaussInt> out;
    out.reserve(f1.size() * f2.size());
    for (const GaussInt& p : f1) {
        for (const GaussInt& q : f2) out.push_back(p * q);
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TKReport tk_check(const LatticeObservable& a, std::span<const GaussInt> b_set, const DilatedFolner& seq, int n,
                  double slack)
{
    if (b_set.empty()) throw DomainError("tk_check needs a nonempty B");
    TKReport r;
    r.b_set.assign(b_set.begin(), b_set.end());
    r.n_used = n;

    const std::vector<GaussInt> phi = enumerate(seq, n);
    if (phi.empty()) throw DomainError("tk_check: Phi_N is empty");
    ComplexSum direct;
    for (const GaussInt& z : phi) direct.add(a(z));
    const Complex e_direct = direct.value() / static_cast<double>(phi.size());

    ComplexSum weighted;
    CompensatedSum weight;
    for (const GaussInt& p : b_set) {
        const std::vector<GaussInt> quot = divide_set(seq, n, p);
        if (quot.empty()) {
            throw DomainError("tk_check: Phi_N / " + to_string(p) + " is empty, increase N");
        }
        ComplexSum inner;
        for (const GaussInt& x : quot) inner.add(a(p * x));
        const double w = 1.0 / static_cast<double>(norm(p));
        weighted.add(w * inner.value() / static_cast<double>(quot.size()));
        weight.add(w);
    }
    const Complex e_log = weighted.value() / weight.value();

    r.lhs = std::abs(e_direct - e_log);
    r.rhs_bound = std::sqrt(std::max(0.0, gcd_log_moment(b_set) - 1.0));
    r.violation = r.lhs > r.rhs_bound + slack;
    return r;
}

ValueGrid::ValueGrid(const MultFunc& f, std::int64_t radius) : r_(radius)
{
    if (radius < 0) throw DomainError("value grid radius must be >= 0");
    const std::int64_t side = 2 * r_ + 1;
    if (static_cast<std::uint64_t>(side) * static_cast<std::uint64_t>(side) > kMaxScanCells / 4) {
        throw ResourceError("value grid of radius " + std::to_string(radius) + " exceeds the budget");
    }
    v_.assign(static_cast<std::size_t>(side * side), Complex{});
    const Factorizer fz(static_cast<std::uint64_t>(2 * r_ * r_) + 1);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < side; ++i) {
        const std::int64_t x = i - r_;
        for (std::int64_t y = -r_; y <= r_; ++y) {
            if (x == 0 && y == 0) continue;
            v_[static_cast<std::size_t>(i * side + (y + r_))] = eval(f, GaussInt(x, y), fz);
        }
    }
}

std::int64_t grid_radius(std::uint64_t norm_bound, std::span<const GaussInt> shifts)
{
    std::int64_t h = 0;
    for (const GaussInt& s : shifts) h = std::max({h, std::abs(s.re()), std::abs(s.im())});
    return disk_radius(norm_bound) + h;
}

double pattern_frequency(const ValueGrid& grid, const PatternQuery& query)
{
    if (query.shifts.empty() || query.shifts.size() != query.signs.size()) {
        throw DomainError("pattern needs matching nonempty shifts and signs");
    }
    for (const int s : query.signs) {
        if (s != 1 && s != -1) throw DomainError("pattern signs must be +1 or -1");
    }
    if (query.norm_bound < 1) throw DomainError("pattern norm bound must be >= 1");
    check_grid(grid, query.norm_bound, query.shifts);

    const std::int64_t r = disk_radius(query.norm_bound);
    std::uint64_t counted = 0;
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : counted, hits)
    for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
            if (static_cast<std::uint64_t>(x * x + y * y) >= query.norm_bound) continue;
            bool skip = false;
            bool match = true;
            for (std::size_t j = 0; j < query.shifts.size(); ++j) {
                const std::int64_t u = x + query.shifts[j].re();
                const std::int64_t v = y + query.shifts[j].im();
                if (u == 0 && v == 0) {
                    skip = true;
                    break;
                }
                if (grid.at(u, v) != Complex(query.signs[j], 0.0)) match = false;
            }
            if (skip) continue;
            ++counted;
            if (match) ++hits;
        }
    }
    if (counted == 0) throw DomainError("pattern query counts no points");
    return static_cast<double>(hits) / static_cast<double>(counted);
}

double pattern_frequency(const MultFunc& f, const PatternQuery& query)
{
    const ValueGrid grid(f, grid_radius(query.norm_bound, query.shifts));
    return pattern_frequency(grid, query);
}

Complex correlation_statistic(const ValueGrid& grid, std::span<const GaussInt> shifts, std::uint64_t norm_bound)
{
    if (norm_bound < 1) throw DomainError("correlation norm bound must be >= 1");
    check_grid(grid, norm_bound, shifts);
    const std::int64_t r = disk_radius(norm_bound);
    const auto rows = static_cast<std::size_t>(2 * r + 1);
    std::vector<ComplexSum> partial(rows);
    std::vector<std::uint64_t> sizes(rows, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t x = -r; x <= r; ++x) {
        ComplexSum& acc = partial[static_cast<std::size_t>(x + r)];
        std::uint64_t c = 0;
        for (std::int64_t y = -r; y <= r; ++y) {
            if (static_cast<std::uint64_t>(x * x + y * y) >= norm_bound) continue;
            Complex prod{1.0, 0.0};
            for (const GaussInt& h : shifts) prod *= grid.at(x + h.re(), y + h.im());
            acc.add(prod);
            ++c;
        }
        sizes[static_cast<std::size_t>(x + r)] = c;
    }
    std::uint64_t total = 0;
    for (const auto c : sizes) total += c;
    return merge_in_order(partial).value() / static_cast<double>(total);
}

Complex correlation_statistic(const MultFunc& f, std::span<const GaussInt> shifts, std::uint64_t norm_bound)
{
    const ValueGrid grid(f, grid_radius(norm_bound, shifts));
    return correlation_statistic(grid, shifts, norm_bound);
}

AdversarialDemo adversarial_folner_demo(const MultFunc& f, int side, int count, std::uint64_t corner_bound)
{
    if (side < 1) throw DomainError("square side must be >= 1");
    if (count < 1) throw DomainError("count must be >= 1");
    if (corner_bound < 1) throw DomainError("corner bound must be >= 1");
    const std::int64_t r = disk_radius(corner_bound);
    if (static_cast<std::uint64_t>(2 * r + 1) * static_cast<std::uint64_t>(2 * r + 1) > kMaxEnumerate) {
        throw ResourceError("corner search space exceeds the budget");
    }

    std::vector<GaussInt> corners;
    for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
            if (static_cast<std::uint64_t>(x * x + y * y) < corner_bound) corners.emplace_back(x, y);
        }
    }
    std::sort(corners.begin(), corners.end(), [](const GaussInt& a, const GaussInt& b) {
        return std::tuple(norm(a), a.re(), a.im()) < std::tuple(norm(b), b.re(), b.im());
    });

    const std::int64_t reach = r + side;
    const Factorizer fz(static_cast<std::uint64_t>(2 * reach * reach) + 1);
    const auto monochrome = [&](const GaussInt& c) -> int {
        int sign = 0;
        for (std::int64_t dx = 0; dx < side; ++dx) {
            for (std::int64_t dy = 0; dy < side; ++dy) {
                const std::int64_t x = c.re() + dx;
                const std::int64_t y = c.im() + dy;
                if (x == 0 && y == 0) return 0;
                const Complex v = eval(f, GaussInt(x, y), fz);
                int s = 0;
                if (v == Complex(1.0, 0.0)) s = 1;
                else if (v == Complex(-1.0, 0.0)) s = -1;
                if (s == 0 || (sign != 0 && s != sign)) return 0;
                sign = s;
            }
        }
        return sign;
    };

    AdversarialDemo demo;
    const auto want = static_cast<std::size_t>(count);
    for (const GaussInt& c : corners) {
        if (demo.plus_corners.size() >= want && demo.minus_corners.size() >= want) break;
        const int s = monochrome(c);
        if (s > 0 && demo.plus_corners.size() < want) demo.plus_corners.push_back(c);
        if (s < 0 && demo.minus_corners.size() < want) demo.minus_corners.push_back(c);
    }
    demo.exhausted = demo.plus_corners.size() < want || demo.minus_corners.size() < want;

    const auto square_mean = [&](const GaussInt& c) {
        CompensatedSum s;
        for (std::int64_t dx = 0; dx < side; ++dx) {
            for (std::int64_t dy = 0; dy < side; ++dy) s.add(eval(f, GaussInt(c.re() + dx, c.im() + dy), fz).real());
        }
        return s.value() / static_cast<double>(side * side);
    };
    const std::size_t pairs = std::min(demo.plus_corners.size(), demo.minus_corners.size());
    for (std::size_t k = 0; k < pairs; ++k) {
        for (const GaussInt& c : {demo.plus_corners[k], demo.minus_corners[k]}) {
            demo.sequence.push_back(c);
            demo.averages.push_back(square_mean(c));
        }
    }
    return demo;
}

} // namespace gmf
