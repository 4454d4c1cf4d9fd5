#include "gaussmf/discrepancy.hpp"

#include <algorithm>
#include <cmath>

#include "gaussmf/error.hpp"
#include "gaussmf/parallel.hpp"

namespace gmf {

double frac(long double x) noexcept
{
    const auto f = static_cast<double>(x - std::floor(x));
    return f >= 1.0 ? 0.0 : f;
}

double star_discrepancy(std::vector<double> samples)
{
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(samples.size());
    for (double s : samples) atoms.emplace_back(s, 1.0);
    return weighted_star_discrepancy(std::move(atoms));
}

double weighted_star_discrepancy(std::vector<std::pair<double, double>> atoms)
{
    if (atoms.empty()) throw DomainError("discrepancy of an empty sample");
    CompensatedSum total;
    for (const auto& [x, w] : atoms) {
        if (!(x >= 0.0 && x < 1.0)) throw DomainError("discrepancy samples must lie in [0, 1)");
        if (!(w >= 0.0)) throw DomainError("discrepancy weights must be nonnegative");
        total.add(w);
    }
    const double mass = total.value();
    if (!(mass > 0.0)) throw DomainError("discrepancy weights sum to zero");
    std::sort(atoms.begin(), atoms.end());

    double d = 0.0;
    CompensatedSum below;
    for (std::size_t j = 0; j < atoms.size();) {
        const double x = atoms[j].first;
        CompensatedSum here = below;
        while (j < atoms.size() && atoms[j].first == x) here.add(atoms[j++].second);
        const double lo = below.value() / mass;
        const double hi = here.value() / mass;
        d = std::max({d, std::fabs(lo - x), std::fabs(hi - x)});
        below = here;
    }
    return d;
}

} // namespace gmf
