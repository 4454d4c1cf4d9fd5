#include "gaussmf/folner.hpp"

#include <algorithm>
#include <cmath>

#include "gaussmf/parallel.hpp"

namespace gmf {

namespace {

struct RowPartial {
    ComplexSum sum;
    std::uint64_t count = 0;

    void add(const RowPartial& o)
    {
        sum.add(o.sum);
        count += o.count;
    }
};

void check_scan(const LatticeBox& b)
{
    if (b.cells() > kMaxScanCells) {
        throw ResourceError("bounding box of " + std::to_string(b.cells()) + " cells exceeds the scan budget");
    }
}

std::uint64_t max_norm(const LatticeBox& b)
{
    const auto ax = static_cast<std::uint64_t>(std::max(std::llabs(b.x0), std::llabs(b.x1)));
    const auto ay = static_cast<std::uint64_t>(std::max(std::llabs(b.y0), std::llabs(b.y1)));
    return ax * ax + ay * ay;
}

// Radius of a square box centred at 0 that holds Phi_N / z.
std::int64_t quotient_radius(const LatticeBox& b, const GaussInt& z)
{
    const double r = std::sqrt(static_cast<double>(max_norm(b)) / static_cast<double>(norm(z)));
    return static_cast<std::int64_t>(std::ceil(r)) + 1;
}

bool contains_product(const DilatedFolner& seq, int n, std::int64_t x, std::int64_t y, const GaussInt& z)
{
    return seq.contains(x * z.re() - y * z.im(), x * z.im() + y * z.re(), n);
}

} // namespace

DilatedFolner::DilatedFolner(JordanRegion region, double scale_factor) : region_(std::move(region)), c_(scale_factor)
{
    if (!(c_ > 0)) throw DomainError("scale factor must be positive");
}

double DilatedFolner::scale(int n) const
{
    if (n < 1) throw DomainError("Folner index N must be >= 1");
    return c_ * n;
}

bool DilatedFolner::contains(std::int64_t x, std::int64_t y, int n) const
{
    return (x != 0 || y != 0) && region_.contains_scaled(x, y, scale(n));
}

LatticeBox DilatedFolner::box(int n) const { return region_.lattice_box(scale(n)); }

std::vector<GaussInt> enumerate(const DilatedFolner& seq, int n, std::uint64_t budget)
{
    const LatticeBox b = seq.box(n);
    check_scan(b);
    std::vector<GaussInt> out;
    for (std::int64_t x = b.x0; x <= b.x1; ++x) {
        for (std::int64_t y = b.y0; y <= b.y1; ++y) {
            if (!seq.contains(x, y, n)) continue;
            if (out.size() >= budget) {
                throw ResourceError("Phi_N exceeds the enumeration budget of " + std::to_string(budget));
            }
            out.emplace_back(x, y);
        }
    }
    return out;
}

std::uint64_t count(const DilatedFolner& seq, int n)
{
    const LatticeBox b = seq.box(n);
    if (b.empty()) return 0;
    check_scan(b);
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
    for (std::int64_t x = b.x0; x <= b.x1; ++x) {
        for (std::int64_t y = b.y0; y <= b.y1; ++y) total += seq.contains(x, y, n);
    }
    return total;
}

AverageResult average(const MultFunc& f, const DilatedFolner& seq, int n)
{
    const LatticeBox b = seq.box(n);
    if (b.empty()) throw DomainError("Phi_N is empty");
    check_scan(b);
    const Factorizer fz(max_norm(b));
    const auto rows = static_cast<std::size_t>(b.x1 - b.x0 + 1);
    std::vector<RowPartial> partials(rows);

#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < rows; ++i) {
        const std::int64_t x = b.x0 + static_cast<std::int64_t>(i);
        RowPartial row;
        for (std::int64_t y = b.y0; y <= b.y1; ++y) {
            if (!seq.contains(x, y, n)) continue;
            row.sum.add(eval(f, GaussInt{x, y}, fz));
            ++row.count;
        }
        partials[i] = row;
    }
    const RowPartial total = merge_in_order(partials);
    if (total.count == 0) throw DomainError("Phi_N is empty");
    return {total.sum.value() / static_cast<double>(total.count), total.count};
}

AverageResult average_reference(const MultFunc& f, const DilatedFolner& seq, int n)
{
    ComplexSum sum;
    std::uint64_t c = 0;
    for (const GaussInt& z : enumerate(seq, n)) {
        sum.add(eval(f, z));
        ++c;
    }
    if (c == 0) throw DomainError("Phi_N is empty");
    return {sum.value() / static_cast<double>(c), c};
}

Complex log_average(const MultFunc& f, std::span<const GaussInt> set)
{
    if (set.empty()) throw DomainError("logarithmic average over an empty set");
    ComplexSum num;
    CompensatedSum weight;
    for (const GaussInt& z : set) {
        if (z.is_zero()) throw DomainError("logarithmic average needs nonzero elements");
        const double w = 1.0 / static_cast<double>(norm(z));
        num.add(eval(f, z) * w);
        weight.add(w);
    }
    return num.value() / weight.value();
}

double folner_defect(const DilatedFolner& seq, int n, const GaussInt& h)
{
    const LatticeBox b = seq.box(n);
    check_scan(b);
    std::uint64_t size = 0, moved = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : size, moved)
    for (std::int64_t x = b.x0; x <= b.x1; ++x) {
        for (std::int64_t y = b.y0; y <= b.y1; ++y) {
            if (!seq.contains(x, y, n)) continue;
            ++size;
            moved += !seq.contains(x + h.re(), y + h.im(), n);
            moved += !seq.contains(x - h.re(), y - h.im(), n);
        }
    }
    if (size == 0) throw DomainError("Phi_N is empty");
    return static_cast<double>(moved) / static_cast<double>(size);
}

double dilation_stability(const DilatedFolner& seq, int n, const GaussInt& a, const GaussInt& b)
{
    if (a.is_zero() || b.is_zero()) throw DomainError("dilation needs nonzero a and b");
    const LatticeBox box = seq.box(n);
    const std::int64_t r = std::max(quotient_radius(box, a), quotient_radius(box, b));
    check_scan(LatticeBox{-r, r, -r, r});
    std::uint64_t in_a = 0, diff = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : in_a, diff)
    for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
            const bool ia = contains_product(seq, n, x, y, a);
            const bool ib = contains_product(seq, n, x, y, b);
            in_a += ia;
            diff += ia != ib;
        }
    }
    if (in_a == 0) throw DomainError("Phi_N / a is empty");
    return static_cast<double>(diff) / static_cast<double>(in_a);
}

std::vector<GaussInt> divide_set(const DilatedFolner& seq, int n, const GaussInt& p)
{
    if (p.is_zero()) throw DomainError("cannot divide by 0");
    const std::int64_t r = quotient_radius(seq.box(n), p);
    check_scan(LatticeBox{-r, r, -r, r});
    std::vector<GaussInt> out;
    for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
            if (contains_product(seq, n, x, y, p)) out.emplace_back(x, y);
        }
    }
    return out;
}

} // namespace gmf
