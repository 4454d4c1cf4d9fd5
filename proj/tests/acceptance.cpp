// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gaussmf/cli.hpp"
#include "gaussmf/ergodic.hpp"
#include "gaussmf/euler.hpp"
#include "gaussmf/folner.hpp"
#include "gaussmf/omega.hpp"
#include "gaussmf/parallel.hpp"
#include "gaussmf/primes.hpp"
#include "gaussmf/stochastic.hpp"

using namespace gmf;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double time_limit, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0 && secs >= time_limit) {
        o.pass = false;
        o.detail += " [over time limit " + std::to_string(time_limit) + " s]";
    }
    if (!o.pass) ++failures;
    std::printf("%s  %-34s %8.2f s  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

bool trial_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// First-quadrant z is prime iff N(z) is a rational prime, or z is an
// associate of a rational prime p = 3 mod 4.
bool brute_prime(std::int64_t a, std::int64_t b)
{
    const auto n = static_cast<std::uint64_t>(a * a + b * b);
    if (trial_prime(n)) return true;
    return b == 0 && a % 4 == 3 && trial_prime(static_cast<std::uint64_t>(a));
}

// Ramified over 2, split over p = 1 mod 4 (norm p), inert otherwise (norm p^2).
PrimeClass brute_class(std::uint64_t norm)
{
    if (norm == 2) return PrimeClass::Ramified;
    return trial_prime(norm) ? PrimeClass::Split : PrimeClass::Inert;
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace

int main()
{
    const DilatedFolner square(JordanRegion::rectangle(0, 1, 0, 1));

    criterion("sieve exactness", 1.0, [] {
        const std::uint64_t bound = 10'000;
        std::vector<std::pair<std::int64_t, std::int64_t>> pts;
        for (std::int64_t a = 1; a * a < static_cast<std::int64_t>(bound); ++a) {
            for (std::int64_t b = 0; a * a + b * b < static_cast<std::int64_t>(bound); ++b) {
                if (brute_prime(a, b)) pts.emplace_back(a, b);
            }
        }
        std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
            const auto nx = x.first * x.first + x.second * x.second;
            const auto ny = y.first * y.first + y.second * y.second;
            if (nx != ny) return nx < ny;
            return std::atan2(static_cast<double>(x.second), static_cast<double>(x.first)) <
                   std::atan2(static_cast<double>(y.second), static_cast<double>(y.first));
        });
        const auto sieve = sieve_p1(bound);
        std::size_t mismatches = sieve.size() > pts.size() ? sieve.size() - pts.size() : pts.size() - sieve.size();
        for (std::size_t k = 0; k < std::min(sieve.size(), pts.size()); ++k) {
            const auto& p = sieve[k];
            const auto n = static_cast<std::uint64_t>(pts[k].first * pts[k].first + pts[k].second * pts[k].second);
            if (p.value.re() != pts[k].first || p.value.im() != pts[k].second || p.norm != n ||
                p.cls != brute_class(n)) {
                ++mismatches;
            }
        }
        return Outcome{mismatches == 0, std::to_string(sieve.size()) + " primes, " + std::to_string(mismatches) +
                                            " mismatches"};
    });

    criterion("factorization oracle", 30.0, [] {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<std::int64_t> coord(-10'000, 10'000);
        int failed = 0, done = 0;
        while (done < 100'000) {
            const std::int64_t a = coord(rng), b = coord(rng);
            if ((a == 0 && b == 0) || a * a + b * b > 100'000'000) continue;
            ++done;
            const GaussInt z(a, b);
            const Factorization f = factor(z);
            bool ok = f.reconstruct() == z;
            for (const auto& pp : f.factors) ok = ok && pp.exponent >= 1 && is_gaussian_prime(pp.prime.value);
            failed += ok ? 0 : 1;
        }
        return Outcome{failed == 0, std::to_string(done) + " inputs, " + std::to_string(failed) + " failures"};
    });

    criterion("landau density", 5.0, [] {
        std::uint64_t count = 0;
        for_each_p1(1'000'000, [&](const CanonicalPrime&) { ++count; });
        const double ratio = static_cast<double>(count) * std::log(1e6) / 1e6;
        return Outcome{ratio >= 1.0 && ratio <= 1.2, fmt("ratio %.6f", ratio) + ", count " + std::to_string(count)};
    });

    criterion("hecke sectors", 10.0, [] {
        std::vector<double> edges(9);
        for (int k = 0; k <= 8; ++k) edges[static_cast<std::size_t>(k)] = std::numbers::pi / 2 * k / 8;
        const auto c = count_primes_sectors(1'000'000, edges);
        double mean = 0;
        for (const auto n : c) mean += static_cast<double>(n) / 8.0;
        double worst = 0;
        for (const auto n : c) worst = std::max(worst, std::fabs(static_cast<double>(n) - mean) / mean);
        const double lo = static_cast<double>(count_primes_sector(1'000'000, 0, std::numbers::pi / 4));
        const double hi = static_cast<double>(count_primes_sector(1'000'000, std::numbers::pi / 4, std::numbers::pi / 2));
        const double rel = std::fabs(lo - hi) / std::max(lo, hi);
        return Outcome{worst <= 0.10 && rel <= 0.005,
                       fmt("max sector deviation %.4f", worst) + fmt(", halves differ by %.5f", rel)};
    });

    criterion("parity instance", 5.0, [&] {
        const AverageResult r = average(chi4_complete(), square, 2000);
        // Parity oracle: chi4(m^2+n^2) = 1 iff m, n have opposite parity, so
        // on [1, N]^2 with N even exactly half the points count.
        const double oracle = static_cast<double>(2 * 1000 * 1000) / (2000.0 * 2000.0);
        double worst = 0;
        for (const std::uint64_t b : {3ULL, 10ULL, 1000ULL, 100'000ULL, 1'000'000ULL}) {
            worst = std::max(worst, std::fabs(rational_euler_value(rational_chi4(), b) - 0.5));
        }
        const bool ok = r.value == Complex(oracle, 0.0) && worst <= 1e-12;
        return Outcome{ok, fmt("average %.17g", r.value.real()) + fmt(", rational_euler_value max error %.3g", worst)};
    });

    criterion("vanishing instance", 60.0, [&] {
        const AverageResult r = average(liouville_norm(), square, 2000);
        const Verdict v = vanishing_probe(liouville_norm(), 1'000'000);
        return Outcome{std::abs(r.value) <= 0.1 && v == Verdict::TendsToZero,
                       fmt("|average| %.6f", std::abs(r.value)) + ", verdict " + to_string(v)};
    });

    criterion("cross-formula identity", 0, [] {
        double worst = 0;
        const std::pair<const char*, RationalRule> gs[] = {
            {"one", rational_one()}, {"liouville", rational_liouville()}, {"chi4", rational_chi4()}};
        std::string detail;
        for (const auto& [name, g] : gs) {
            const double p = partial_P(from_rational(name, g), 100'000).partial_value.real();
            const double t = rational_euler_value(g, 100'000);
            worst = std::max(worst, std::fabs(p - t));
        }
        return Outcome{worst <= 1e-12, fmt("max |partial_P - closed form| %.3g", worst)};
    });

    criterion("omega residues mod q", 120.0, [] {
        const OmegaTable table = omega_box_table(4000);
        bool ok = true;
        std::string detail;
        for (const int q : {2, 3, 4, 5}) {
            std::vector<double> dev;
            for (const int n : {500, 1000, 2000, 4000}) {
                const auto h = residue_histogram(q, table, n);
                double d = 0;
                for (const double x : h) d = std::max(d, std::fabs(x - 1.0 / q));
                dev.push_back(d);
            }
            ok = ok && dev.back() <= 0.1;
            for (std::size_t k = 1; k < dev.size(); ++k) ok = ok && dev[k] <= dev[k - 1] + 0.02;
            detail += fmt("q=%.0f:", q);
            for (const double d : dev) detail += fmt(" %.4f", d);
            detail += "  ";
        }
        return Outcome{ok, detail};
    });

    criterion("polynomial discrepancy", 0, [] {
        const OmegaTable table = omega_box_table(2000);
        const std::vector<double> quad{0.0, 0.0, std::numbers::sqrt2};
        const std::vector<double> rational{0.0, 1.0 / 7.0};
        const double d1 = weyl_poly_discrepancy(quad, table, 500);
        const double d2 = weyl_poly_discrepancy(quad, table, 1000);
        const double d3 = weyl_poly_discrepancy(quad, table, 2000);
        const double r = weyl_poly_discrepancy(rational, table, 2000);
        return Outcome{d1 > d2 && d2 > d3 && r >= 0.05,
                       fmt("sqrt2 x^2: %.5f", d1) + fmt(" %.5f", d2) + fmt(" %.5f", d3) + fmt(", x/7: %.4f", r)};
    });

    criterion("class-constant tau limit", 0, [&] {
        // Ramified +2 from the documented example, inert in {0, 2, 3}.
        const auto s = DynamicalSystem::cyclic(5);
        bool ok = true;
        std::string detail;
        for (const std::int64_t inert : {0, 2, 3}) {
            const TauAssignment tau{2, 1, inert};
            const double v = tau_orbit_average(s, s.origin(), tau, Observable::indicator(0), square, 2000);
            ok = ok && std::fabs(v - 0.2) <= 0.05;
            detail += "R=2,I=" + std::to_string(inert) + fmt(": %.4f  ", v);
        }
        return Outcome{ok, detail + "(target 0.2 +- 0.05)"};
    });

    criterion("gcd moment bound", 0, [] {
        const auto pool = sieve_p1(100'000);
        std::mt19937_64 rng(7);
        int violations = 0;
        double tightest = 1e300;
        for (int t = 0; t < 200; ++t) {
            const std::size_t k = std::uniform_int_distribution<std::size_t>(5, 200)(rng);
            std::vector<std::size_t> idx(pool.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<GaussInt> f;
            for (std::size_t i = 0; i < k; ++i) f.push_back(pool[idx[i]].value);
            const double m = gcd_log_moment(f);
            const double lim = 1.0 + 4.0 / log_weight(f);
            tightest = std::min(tightest, lim - m);
            violations += m < lim ? 0 : 1;
        }
        return Outcome{violations == 0,
                       std::to_string(violations) + " violations in 200 sets" + fmt(", smallest margin %.4g", tightest)};
    });

    criterion("turan-kubilius suite", 0, [&] {
        std::vector<GaussInt> b;
        for (const auto& p : sieve_p1(10'000, kSplitMask)) {
            if (p.norm >= 1000) b.push_back(p.value);
        }
        bool ok = true;
        std::string detail = std::to_string(b.size()) + " primes;";
        for (const auto& f : {constant_one(), liouville_norm(), chi4_complete()}) {
            const auto r = tk_check([&f](const GaussInt& z) { return eval(f, z); }, b, square, 500);
            ok = ok && !r.violation;
            detail += " " + f.name() + fmt(" lhs %.4f", r.lhs) + fmt(" rhs %.4f", r.rhs_bound) + ";";
        }
        return Outcome{ok, detail};
    });

    criterion("normality statistics", 0, [] {
        const std::uint64_t bound = 1'000'000;
        const std::vector<GaussInt> one{GaussInt(0)};
        const std::vector<GaussInt> pair{GaussInt(0), GaussInt(1)};
        double worst_single = 0, worst_pair = 0, worst_corr = 0;
        for (const std::uint64_t seed : {1, 2, 3}) {
            const ValueGrid grid(random_pm1(seed), grid_radius(bound, pair));
            for (const int e : {1, -1}) {
                worst_single = std::max(worst_single,
                                        std::fabs(pattern_frequency(grid, PatternQuery{one, {e}, bound}) - 0.5));
            }
            for (const int e1 : {1, -1}) {
                for (const int e2 : {1, -1}) {
                    worst_pair = std::max(
                        worst_pair, std::fabs(pattern_frequency(grid, PatternQuery{pair, {e1, e2}, bound}) - 0.25));
                }
            }
            worst_corr = std::max({worst_corr, std::abs(correlation_statistic(grid, one, bound)),
                                   std::abs(correlation_statistic(grid, pair, bound))});
        }
        return Outcome{worst_single <= 0.05 && worst_pair <= 0.05 && worst_corr <= 0.05,
                       fmt("single %.5f", worst_single) + fmt(", pair %.5f", worst_pair) +
                           fmt(", correlation %.5f", worst_corr)};
    });

    criterion("determinism across workers", 0, [] {
        const auto dir = std::filesystem::temp_directory_path() / "gaussmf_acceptance";
        std::filesystem::create_directories(dir);
        std::vector<cli::ExperimentConfig> runs;
        const auto add = [&](cli::ExperimentConfig c) { runs.push_back(std::move(c)); };
        {
            cli::ExperimentConfig c;
            c.subcommand = "sieve";
            c.bounds = {10'000};
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "factor";
            c.inputs = {"2", "5", "3+4i", "123456-7891i"};
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "euler";
            c.spec = "liouville_norm";
            c.bounds = {1000, 100'000, 1'000'000};
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "average";
            c.spec = "chi4_complete";
            c.n_list = {100, 1000, 2000};
            add(c);
            c.spec = "liouville_norm";
            c.region = "disk";
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "ergodic";
            c.q = 5;
            c.n_list = {500, 1000, 2000, 4000};
            add(c);
            c.system = "torus";
            c.poly = {0.0, 0.0, std::numbers::sqrt2};
            c.n_list = {500, 1000, 2000};
            add(c);
            c.system = "cyclic";
            c.poly.clear();
            c.tau = {2, 1, 3};
            c.n_list = {2000};
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "tk";
            c.spec = "liouville_norm";
            c.n_list = {500};
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "gcdmoment";
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "patterns";
            c.spec = "random_pm1:2";
            c.bounds = {1'000'000};
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "counterexample";
            c.spec = "random_pm1:1";
            c.count = 4;
            add(c);
        }
        {
            cli::ExperimentConfig c;
            c.subcommand = "hecke";
            c.bounds = {1'000'000};
            add(c);
        }
        int differing = 0;
        std::string detail;
        std::ostringstream err;
        for (std::size_t k = 0; k < runs.size(); ++k) {
            std::string csv[2];
            for (const int w : {1, 4}) {
                auto c = runs[k];
                c.workers = w;
                c.out = (dir / ("run" + std::to_string(k) + "_w" + std::to_string(w))).string();
                const auto r = cli::run(c, err);
                if (r.exit_code != cli::kExitOk) throw std::runtime_error(c.subcommand + " failed: " + r.message);
                csv[w == 1 ? 0 : 1] = read_file(r.csv);
            }
            if (csv[0] != csv[1] || csv[0].empty()) {
                ++differing;
                detail += " " + runs[k].subcommand;
            }
        }
        std::filesystem::remove_all(dir);
        return Outcome{differing == 0, std::to_string(runs.size()) + " runs at workers 1 and 4, " +
                                           std::to_string(differing) + " differ" + detail};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
