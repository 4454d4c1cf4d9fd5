#include <iostream>

#include <CLI11.hpp>

#include "gaussmf/cli.hpp"

int main(int argc, char** argv)
{
    using gmf::cli::ExperimentConfig;
    ExperimentConfig c;
    CLI::App app{"Averages of multiplicative functions on the Gaussian integers"};
    app.set_version_flag("--version", gmf::cli::tool_version());
    app.require_subcommand(1, 1);

    const auto common = [&c](CLI::App* s) {
        s->add_option("--out", c.out, "Output stem: writes <out>.csv and <out>.json");
        s->add_option("--workers", c.workers, "OpenMP worker count (0: default)");
    };
    const auto spec = [&c](CLI::App* s) {
        s->add_option("--spec", c.spec, "one, liouville_norm, chi4_complete, random_pm1:<seed>, rational:<csv>");
    };
    const auto region = [&c](CLI::App* s) {
        s->add_option("--region", c.region, "square, centered_square, disk, inline JSON or @file");
        s->add_option("--scale", c.scale, "k_N = scale * N");
    };
    const auto ns = [&c](CLI::App* s) { s->add_option("--N", c.n_list, "Scale list")->delimiter(','); };
    const auto bounds = [&c](CLI::App* s) { s->add_option("--bound", c.bounds, "Norm bound(s)")->delimiter(','); };
    const auto seed = [&c](CLI::App* s) { s->add_option("--seed", c.seed, "Seed for random_pm1"); };

    auto* sieve = app.add_subcommand("sieve", "List P1 primes below a norm bound");
    bounds(sieve);
    common(sieve);

    auto* factor = app.add_subcommand("factor", "Factor Gaussian integers such as 3+4i");
    factor->add_option("z", c.inputs, "Operands")->required();
    common(factor);

    auto* euler = app.add_subcommand("euler", "Partial Euler product and vanishing verdict");
    spec(euler);
    bounds(euler);
    common(euler);

    auto* average = app.add_subcommand("average", "Averages along a dilated Folner sequence");
    spec(average);
    region(average);
    ns(average);
    common(average);

    auto* ergodic = app.add_subcommand("ergodic", "Orbit averages along Omega(m^2+n^2) or a tau assignment");
    ergodic->add_option("--system", c.system, "cyclic, torus, affine, two_point");
    ergodic->add_option("--q", c.q, "Modulus of the cyclic system");
    ergodic->add_option("--alpha", c.alpha, "Rotation number (0: golden ratio conjugate)");
    ergodic->add_option("--dimension", c.dimension, "Dimension of the affine system");
    ergodic->add_option("--observable", c.observable, "indicator:r, parity, cos:h, sin:h, cos2:h, interval:a:b");
    ergodic->add_option("--poly", c.poly, "Weyl polynomial coefficients, constant first")->delimiter(',');
    ergodic->add_option("--tau", c.tau, "Class powers ramified,split,inert")->delimiter(',');
    region(ergodic);
    ns(ergodic);
    common(ergodic);

    auto* tk = app.add_subcommand("tk", "Turan-Kubilius check over split primes with norm in [lo, hi)");
    spec(tk);
    region(tk);
    ns(tk);
    bounds(tk);
    common(tk);

    auto* gcd = app.add_subcommand("gcdmoment", "gcd moment inequality over random prime sets");
    gcd->add_option("--part", c.part, "1: single set, 2: product set");
    gcd->add_option("--count", c.count, "Number of random sets");
    seed(gcd);
    bounds(gcd);
    common(gcd);

    auto* patterns = app.add_subcommand("patterns", "Sign-pattern frequencies and correlations on a disk");
    spec(patterns);
    seed(patterns);
    bounds(patterns);
    common(patterns);

    auto* counter = app.add_subcommand("counterexample", "Monochromatic squares for a non-dilated sequence");
    spec(counter);
    seed(counter);
    counter->add_option("--side", c.side, "Square side");
    counter->add_option("--count", c.count, "Squares per sign");
    bounds(counter);
    common(counter);

    auto* hecke = app.add_subcommand("hecke", "Prime counts in equal argument sectors");
    hecke->add_option("--sectors", c.sectors, "Number of sectors");
    bounds(hecke);
    common(hecke);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return gmf::cli::kExitPrecondition;
    }
    // The default spec for patterns and counterexample is random_pm1:<seed>.
    if ((patterns->parsed() || counter->parsed()) && patterns->count("--spec") + counter->count("--spec") == 0) {
        c.spec = "random_pm1:" + std::to_string(c.seed);
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    const auto r = gmf::cli::run(c, std::cerr);
    if (r.exit_code == gmf::cli::kExitOk) std::cout << r.csv.string() << '\n' << r.json.string() << '\n';
    return r.exit_code;
}
