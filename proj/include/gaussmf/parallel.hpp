#pragma once

// Worker-count control and the compensated accumulators used by every
// reduction. Parallel kernels reduce per-row partials in row order, so a
// result never depends on how rows were distributed over threads.

#include <complex>
#include <cmath>
#include <cstddef>
#include <vector>

namespace gmf {

// Sets the OpenMP team size for subsequent kernels (n <= 0 keeps the default).
void set_workers(int n);
[[nodiscard]] int workers();

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    void add(const CompensatedSum& other) noexcept
    {
        add(other.sum_);
        add(other.comp_);
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexSum {
public:
    void add(std::complex<double> z) noexcept
    {
        re_.add(z.real());
        im_.add(z.imag());
    }
    void add(const ComplexSum& other) noexcept
    {
        re_.add(other.re_);
        im_.add(other.im_);
    }
    [[nodiscard]] std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

// Folds per-row partials left to right.
template <typename Acc>
[[nodiscard]] Acc merge_in_order(const std::vector<Acc>& partials)
{
    Acc total;
    for (const auto& p : partials) total.add(p);
    return total;
}

} // namespace gmf
