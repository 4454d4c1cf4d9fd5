#include "gaussmf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "gaussmf/error.hpp"
#include "gaussmf/ergodic.hpp"
#include "gaussmf/euler.hpp"
#include "gaussmf/folner.hpp"
#include "gaussmf/parallel.hpp"
#include "gaussmf/primes.hpp"
#include "gaussmf/stochastic.hpp"

#ifndef GAUSSMF_VERSION
#define GAUSSMF_VERSION "0.0.0"
#endif

namespace gmf::cli {

using nlohmann::json;

const char* tool_version() noexcept { return GAUSSMF_VERSION; }

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names{"sieve", "factor",   "euler",    "average",        "ergodic",
                                                "tk",    "gcdmoment", "patterns", "counterexample", "hecke"};
    return names;
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

json to_json(const ExperimentConfig& c)
{
    return json{{"subcommand", c.subcommand}, {"spec", c.spec},         {"region", c.region},
                {"scale", c.scale},           {"N", c.n_list},          {"bound", c.bounds},
                {"seed", c.seed},             {"q", c.q},               {"alpha", c.alpha},
                {"poly", c.poly},             {"workers", c.workers},   {"out", c.out},
                {"system", c.system},         {"observable", c.observable}, {"tau", c.tau},
                {"dimension", c.dimension},   {"side", c.side},         {"count", c.count},
                {"sectors", c.sectors},       {"part", c.part},         {"inputs", c.inputs}};
}

namespace {

// CSV rows collected in memory and written once.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void row(std::vector<std::string> cells)
    {
        if (cells.size() != header_.size()) throw std::logic_error("csv row width mismatch");
        rows_.push_back(std::move(cells));
    }
    void write(const std::filesystem::path& path) const
    {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw ResourceError("cannot open " + path.string() + " for writing");
        write_line(os, header_);
        for (const auto& r : rows_) write_line(os, r);
        if (!os) throw ResourceError("write to " + path.string() + " failed");
    }

private:
    static void write_line(std::ostream& os, const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string fr(double v) { return format_real(v); }
template <typename T>
std::string fi(T v)
{
    return fmt::format("{}", v);
}

template <typename T>
std::vector<T> or_default(const std::vector<T>& v, std::vector<T> d)
{
    return v.empty() ? d : v;
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw DomainError(what);
}

// Accepts forms such as 7, -3, i, -i, 2i, 3+4i, 3-i.
GaussInt parse_gauss(const std::string& text)
{
    std::string s;
    for (const char ch : text) {
        if (ch != ' ') s.push_back(ch);
    }
    require(!s.empty(), "empty Gaussian integer");
    const auto bad = [&] { return DomainError("malformed Gaussian integer '" + text + "'"); };
    const auto parse_int = [&](const std::string& t) -> std::int64_t {
        if (t.empty() || t == "+") return 1;
        if (t == "-") return -1;
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != t.size()) throw bad();
        return v;
    };
    if (s.back() != 'i') return GaussInt(parse_int(s), 0);
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return GaussInt(0, parse_int(s));
    return GaussInt(parse_int(s.substr(0, split)), parse_int(s.substr(split)));
}

struct Output {
    explicit Output(Table t) : table(std::move(t)) {}

    Table table;
    json summary = json::object();
    std::vector<std::pair<std::string, Table>> extra; // suffix, table
};

Output run_sieve(const ExperimentConfig& c)
{
    const std::uint64_t bound = or_default(c.bounds, {1000}).back();
    Output o{Table({"re", "im", "norm", "class"})};
    std::uint64_t counts[3] = {0, 0, 0};
    for (const auto& p : sieve_p1(bound)) {
        o.table.row({fi(p.value.re()), fi(p.value.im()), fi(p.norm), to_string(p.cls)});
        ++counts[static_cast<int>(p.cls)];
    }
    const std::uint64_t total = counts[0] + counts[1] + counts[2];
    o.summary = {{"count", total},
                 {"ramified", counts[static_cast<int>(PrimeClass::Ramified)]},
                 {"split", counts[static_cast<int>(PrimeClass::Split)]},
                 {"inert", counts[static_cast<int>(PrimeClass::Inert)]}};
    if (bound > 2) {
        const double b = static_cast<double>(bound);
        o.summary["landau_ratio"] = static_cast<double>(total) / (b / std::log(b));
    }
    return o;
}

Output run_factor(const ExperimentConfig& c)
{
    require(!c.inputs.empty(), "factor needs at least one operand");
    Output o{Table({"input", "unit", "prime_re", "prime_im", "exponent"})};
    json list = json::array();
    for (const auto& in : c.inputs) {
        const GaussInt z = parse_gauss(in);
        const Factorization f = factor(z);
        const std::string unit = to_string(f.unit);
        if (f.factors.empty()) o.table.row({to_string(z), unit, "", "", ""});
        std::string text = unit;
        for (const auto& pp : f.factors) {
            o.table.row({to_string(z), unit, fi(pp.prime.value.re()), fi(pp.prime.value.im()), fi(pp.exponent)});
            text += fmt::format(" ({})^{}", to_string(pp.prime.value), pp.exponent);
        }
        list.push_back({{"input", to_string(z)}, {"factorization", text}});
    }
    o.summary["factorizations"] = list;
    return o;
}

Output run_euler(const ExperimentConfig& c)
{
    const MultFunc f = builtin_spec(c.spec);
    Output o{Table({"bound", "value", "value_im", "modulus", "factor_count", "s_full", "s_quarter", "verdict"})};
    ProductReport last;
    for (const std::uint64_t b : or_default(c.bounds, {1000})) {
        last = partial_P(f, b);
        o.table.row({fi(b), fr(last.partial_value.real()), fr(last.partial_value.imag()),
                     fr(std::abs(last.partial_value)), fi(last.factor_count), fr(last.s_full), fr(last.s_quarter),
                     to_string(last.verdict)});
    }
    o.summary = {{"value", last.partial_value.real()},
                 {"value_im", last.partial_value.imag()},
                 {"verdict", to_string(last.verdict)},
                 {"arg_count", last.arg_count}};
    if (last.tail_bound) o.summary["tail_bound"] = *last.tail_bound;
    return o;
}

Output run_average(const ExperimentConfig& c)
{
    const MultFunc f = builtin_spec(c.spec);
    const DilatedFolner seq(JordanRegion::parse(c.region), c.scale);
    Output o{Table({"N", "count", "value", "value_im", "reference", "abs_error"})};
    double reference = std::numeric_limits<double>::quiet_NaN();
    Complex ref{reference, 0.0};
    std::string ref_status = "ok";
    try {
        ref = quadrant_limit(f, seq.region());
        reference = ref.real();
    } catch (const DomainError& e) {
        ref_status = e.what();
    }
    for (const int n : or_default(c.n_list, {100, 1000})) {
        require(n >= 1, "N must be >= 1");
        const AverageResult r = average(f, seq, n);
        o.table.row({fi(n), fi(r.count), fr(r.value.real()), fr(r.value.imag()), fr(reference),
                     fr(std::abs(r.value - ref))});
    }
    o.summary = {{"reference", reference}, {"reference_im", ref.imag()}, {"reference_status", ref_status}};
    return o;
}

DynamicalSystem make_system(const ExperimentConfig& c)
{
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    const double alpha = c.alpha != 0.0 ? c.alpha : golden;
    if (c.system == "cyclic") {
        require(c.q >= 1, "q must be >= 1");
        return DynamicalSystem::cyclic(c.q);
    }
    if (c.system == "two_point") return DynamicalSystem::two_point();
    if (c.system == "torus") return DynamicalSystem::torus(alpha);
    if (c.system == "affine") return DynamicalSystem::affine_unipotent(c.dimension, alpha);
    throw DomainError("unknown system '" + c.system + "' (cyclic, torus, affine, two_point)");
}

Output run_ergodic(const ExperimentConfig& c)
{
    const DynamicalSystem s = make_system(c);
    const std::vector<int> ns = or_default(c.n_list, {500, 1000, 2000});
    for (const int n : ns) require(n >= 1, "N must be >= 1");
    const int n_max = *std::max_element(ns.begin(), ns.end());
    Output o{Table({"N", "value", "reference", "abs_error"})};

    if (!c.poly.empty()) {
        // Weyl: star discrepancy of Q(Omega) mod 1, reference 0.
        const OmegaTable table = omega_box_table(n_max);
        for (const int n : ns) {
            const double d = weyl_poly_discrepancy(c.poly, table, n);
            o.table.row({fi(n), fr(d), fr(0.0), fr(d)});
        }
        o.summary = {{"mode", "weyl_discrepancy"}};
        return o;
    }

    const Observable f = Observable::parse(!c.observable.empty() ? c.observable
                                           : s.is_finite()        ? std::string("indicator:0")
                                                                  : std::string("cos:1"));
    const double reference = invariant_integral(s, f);
    const State x0 = s.origin();

    if (!c.tau.empty()) {
        require(c.tau.size() == 3, "--tau takes ramified,split,inert");
        const TauAssignment tau{c.tau[0], c.tau[1], c.tau[2]};
        const DilatedFolner seq(JordanRegion::parse(c.region), c.scale);
        for (const int n : ns) {
            const double v = tau_orbit_average(s, x0, tau, f, seq, n);
            o.table.row({fi(n), fr(v), fr(reference), fr(std::fabs(v - reference))});
        }
        o.summary = {{"mode", "tau_orbit_average"}, {"observable", f.describe()}, {"system", s.describe()}};
        return o;
    }

    const OmegaTable table = omega_box_table(n_max);
    for (const int n : ns) {
        const double v = orbit_average_omega(s, x0, f, table, n);
        o.table.row({fi(n), fr(v), fr(reference), fr(std::fabs(v - reference))});
    }
    o.summary = {{"mode", "orbit_average_omega"}, {"observable", f.describe()}, {"system", s.describe()}};
    if (s.is_finite()) {
        Table hist({"bin", "frequency"});
        const auto h = residue_histogram(s.modulus(), table, n_max);
        for (std::size_t r = 0; r < h.size(); ++r) hist.row({fi(r), fr(h[r])});
        o.summary["histogram_N"] = n_max;
        o.extra.emplace_back(".histogram", std::move(hist));
    } else if (s.kind() == DynamicalSystem::Kind::Torus) {
        o.summary["delange_discrepancy"] = delange_discrepancy(s.alpha(), table, n_max);
    }
    return o;
}

std::vector<GaussInt> split_primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<GaussInt> out;
    for (const auto& p : sieve_p1(hi, kSplitMask)) {
        if (p.norm >= lo) out.push_back(p.value);
    }
    return out;
}

Output run_tk(const ExperimentConfig& c)
{
    const MultFunc f = builtin_spec(c.spec);
    const DilatedFolner seq(JordanRegion::parse(c.region), c.scale);
    const auto bounds = or_default(c.bounds, {1000, 10'000});
    require(bounds.size() == 2 && bounds[0] < bounds[1], "--bound for tk takes lo,hi split-prime norms");
    const auto b = split_primes_between(bounds[0], bounds[1]);
    require(!b.empty(), "no split primes in the requested norm range");
    const LatticeObservable a = [&f](const GaussInt& z) { return eval(f, z); };
    Output o{Table({"N", "lhs", "rhs_bound", "slack", "violation"})};
    bool any = false;
    TKReport last;
    for (const int n : or_default(c.n_list, {100, 200, 500})) {
        last = tk_check(a, b, seq, n);
        any = any || last.violation;
        o.table.row({fi(n), fr(last.lhs), fr(last.rhs_bound), fr(kTkSlack), last.violation ? "1" : "0"});
    }
    o.summary = {{"B_size", b.size()}, {"rhs_bound", last.rhs_bound}, {"violation_at_largest_N", last.violation},
                 {"any_violation", any}};
    return o;
}

Output run_gcdmoment(const ExperimentConfig& c)
{
    require(c.part == 1 || c.part == 2, "--part is 1 or 2");
    const int trials = c.count > 0 ? c.count : (c.part == 1 ? 200 : 25);
    const std::uint64_t bound = or_default(c.bounds, {c.part == 1 ? 100'000ULL : 20'000ULL}).back();
    const auto pool = sieve_p1(bound);
    require(pool.size() >= (c.part == 1 ? 200U : 20U), "prime pool too small for the sampled sizes");
    std::mt19937_64 rng(c.seed);
    const auto draw = [&](std::size_t k) {
        std::vector<std::size_t> idx(pool.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<GaussInt> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(pool[idx[i]].value);
        return out;
    };
    Output o{Table({"trial", "size1", "size2", "moment", "bound", "holds"})};
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        double m = 0.0, lim = 0.0;
        std::size_t k1 = 0, k2 = 0;
        if (c.part == 1) {
            k1 = std::uniform_int_distribution<std::size_t>(5, 200)(rng);
            const auto f = draw(k1);
            m = gcd_log_moment(f);
            lim = 1.0 + 4.0 / log_weight(f);
        } else {
            k1 = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
            k2 = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
            const auto f1 = draw(k1);
            const auto f2 = draw(k2);
            m = set_log_moment(product_set(f1, f2));
            lim = (1.0 + 8.0 / log_weight(f1)) * (1.0 + 8.0 / log_weight(f2));
        }
        const bool holds = m < lim;
        violations += holds ? 0 : 1;
        o.table.row({fi(t), fi(k1), fi(k2), fr(m), fr(lim), holds ? "1" : "0"});
    }
    o.summary = {{"trials", trials}, {"violations", violations}, {"part", c.part}};
    return o;
}

std::string shifts_text(const std::vector<GaussInt>& h)
{
    std::string s;
    for (std::size_t j = 0; j < h.size(); ++j) s += (j ? ";" : "") + to_string(h[j]);
    return s;
}

Output run_patterns(const ExperimentConfig& c)
{
    const MultFunc f = builtin_spec(c.spec);
    const std::uint64_t bound = or_default(c.bounds, {1'000'000}).back();
    const std::vector<GaussInt> single{GaussInt(0)};
    const std::vector<GaussInt> pair{GaussInt(0), GaussInt(1)};
    const ValueGrid grid(f, grid_radius(bound, pair));
    Output o{Table({"statistic", "shifts", "signs", "value", "expected", "abs_error"})};
    double worst = 0.0;
    const auto add = [&](const std::string& stat, const std::vector<GaussInt>& h, const std::string& signs,
                         double v, double expected) {
        worst = std::max(worst, std::fabs(v - expected));
        o.table.row({stat, shifts_text(h), signs, fr(v), fr(expected), fr(std::fabs(v - expected))});
    };
    for (const int e : {1, -1}) {
        add("frequency", single, e > 0 ? "+" : "-", pattern_frequency(grid, PatternQuery{single, {e}, bound}), 0.5);
    }
    for (const int e1 : {1, -1}) {
        for (const int e2 : {1, -1}) {
            const std::string signs = std::string(e1 > 0 ? "+" : "-") + (e2 > 0 ? "+" : "-");
            add("frequency", pair, signs, pattern_frequency(grid, PatternQuery{pair, {e1, e2}, bound}), 0.25);
        }
    }
    add("correlation", single, "", correlation_statistic(grid, single, bound).real(), 0.0);
    add("correlation", pair, "", correlation_statistic(grid, pair, bound).real(), 0.0);
    o.summary = {{"spec", f.name()}, {"seed", c.seed}, {"max_abs_error", worst}};
    return o;
}

Output run_counterexample(const ExperimentConfig& c)
{
    const MultFunc f = builtin_spec(c.spec);
    const int count = c.count > 0 ? c.count : 4;
    const std::uint64_t bound = or_default(c.bounds, {250'000}).back();
    const AdversarialDemo d = adversarial_folner_demo(f, c.side, count, bound);
    Output o{Table({"index", "list", "corner_re", "corner_im", "average"})};
    for (std::size_t k = 0; k < d.sequence.size(); ++k) {
        o.table.row({fi(k), k % 2 == 0 ? "plus" : "minus", fi(d.sequence[k].re()), fi(d.sequence[k].im()),
                     fr(d.averages[k])});
    }
    o.summary = {{"spec", f.name()},
                 {"seed", c.seed},
                 {"side", c.side},
                 {"plus_found", d.plus_corners.size()},
                 {"minus_found", d.minus_corners.size()},
                 {"exhausted", d.exhausted}};
    return o;
}

Output run_hecke(const ExperimentConfig& c)
{
    require(c.sectors >= 1, "--sectors must be >= 1");
    const std::uint64_t bound = or_default(c.bounds, {1'000'000}).back();
    std::vector<double> edges(static_cast<std::size_t>(c.sectors) + 1);
    for (int k = 0; k <= c.sectors; ++k) {
        edges[static_cast<std::size_t>(k)] = -std::numbers::pi + 2.0 * std::numbers::pi * k / c.sectors;
    }
    edges.front() = -std::numbers::pi;
    edges.back() = std::numbers::pi;
    const auto counts = count_primes_sectors(bound, edges);
    std::uint64_t total = 0;
    for (const auto n : counts) total += n;
    Output o{Table({"bin", "frequency"})};
    for (std::size_t k = 0; k < counts.size(); ++k) {
        o.table.row({fi(k), fr(total ? static_cast<double>(counts[k]) / static_cast<double>(total) : 0.0)});
    }
    o.summary = {{"total", total}, {"counts", counts}};
    return o;
}

Output dispatch(const ExperimentConfig& c)
{
    if (c.subcommand == "sieve") return run_sieve(c);
    if (c.subcommand == "factor") return run_factor(c);
    if (c.subcommand == "euler") return run_euler(c);
    if (c.subcommand == "average") return run_average(c);
    if (c.subcommand == "ergodic") return run_ergodic(c);
    if (c.subcommand == "tk") return run_tk(c);
    if (c.subcommand == "gcdmoment") return run_gcdmoment(c);
    if (c.subcommand == "patterns") return run_patterns(c);
    if (c.subcommand == "counterexample") return run_counterexample(c);
    if (c.subcommand == "hecke") return run_hecke(c);
    throw DomainError("unknown subcommand '" + c.subcommand + "'");
}

} // namespace

RunResult run(const ExperimentConfig& config, std::ostream& err)
{
    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
        set_workers(config.workers);
        Output o = dispatch(config);
        const std::string stem = config.out.empty() ? config.subcommand : config.out;
        result.csv = stem + ".csv";
        result.json = stem + ".json";
        if (result.csv.has_parent_path()) std::filesystem::create_directories(result.csv.parent_path());
        o.table.write(result.csv);
        json outputs = json::array({result.csv.string()});
        for (const auto& [suffix, table] : o.extra) {
            const std::filesystem::path p = stem + suffix + ".csv";
            table.write(p);
            outputs.push_back(p.string());
        }
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const json report{{"tool_version", tool_version()},
                          {"config", to_json(config)},
                          {"wall_time", wall},
                          {"outputs", outputs},
                          {"summary", o.summary}};
        std::ofstream js(result.json);
        if (!js) throw ResourceError("cannot open " + result.json.string() + " for writing");
        js << report.dump(2) << '\n';
        set_workers(0);
    } catch (const DomainError& e) {
        result.exit_code = kExitPrecondition;
        result.message = e.what();
    } catch (const ResourceError& e) {
        result.exit_code = kExitResource;
        result.message = e.what();
    } catch (const std::filesystem::filesystem_error& e) {
        result.exit_code = kExitResource;
        result.message = e.what();
    }
    if (result.exit_code != kExitOk) {
        set_workers(0);
        err << "error: " << result.message << '\n';
    }
    return result;
}

} // namespace gmf::cli
