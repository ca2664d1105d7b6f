#include "singlet/lattice_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace singlet
{

namespace
{

constexpr long max_lattice_terms = 10'000'000;

struct Accumulator
{
    Complex sum{0.0, 0.0};
    double magnitude = 0.0;
    double rounding = 0.0;

    void add(const Complex &exponent)
    {
        const Complex term = std::exp(exponent);
        sum += term;
        const double size = std::abs(term);
        magnitude += size;
        // Argument reduction in exp() loses |Im exponent| ulps of phase.
        rounding += size * std::numeric_limits<double>::epsilon() * (8.0 + std::abs(exponent.imag()));
    }
};

// Walks k = start, start + dir, start + 2 dir, ... and stops once the terms
// decay geometrically with a tail bound below the target. Returns the tail bound.
double walk(const QuadraticExponent &e, double start, int dir, double tol, Accumulator &acc)
{
    const double a = -e.quadratic.real();
    const double b = e.linear.real() * dir;
    const double c = e.constant.real();
    // log|term| along the walk as a function of j >= 0, x = dir * k.
    const double x0 = start * dir;
    const double vertex = b / (2.0 * a);
    auto log_size = [&](double x) { return -a * x * x + b * x + c; };

    for (long j = 0; j < max_lattice_terms; ++j) {
        const double x = x0 + static_cast<double>(j);
        acc.add(e.exponent(dir * x));
        const double next = x + 1.0;
        if (next + 0.5 < vertex) {
            continue;
        }
        // Ratio of consecutive terms beyond `next` is at most exp(-a (2 next + 1) + b) < 1.
        const double ratio = std::exp(-a * (2.0 * next + 1.0) + b);
        if (ratio >= 1.0) {
            continue;
        }
        const double tail = std::exp(log_size(next)) / (1.0 - ratio);
        const double target = std::min(tol, 1e-18 * std::max(acc.magnitude, std::numeric_limits<double>::min()));
        if (tail < target || tail == 0.0) {
            return tail;
        }
    }
    throw std::runtime_error("gaussian_lattice_sum: term limit exceeded");
}

} // namespace

Evaluation gaussian_lattice_sum(const QuadraticExponent &e, double offset, LatticeRange range, double tol)
{
    if (!(e.quadratic.real() < 0.0)) {
        throw std::domain_error("gaussian_lattice_sum needs a decaying Gaussian (Re quadratic < 0)");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("gaussian_lattice_sum needs tol > 0");
    }
    Accumulator acc;
    double tail = 0.0;
    if (range == LatticeRange::nonnegative) {
        tail = walk(e, offset, +1, tol, acc);
    } else {
        const double a = -e.quadratic.real();
        const double vertex = e.linear.real() / (2.0 * a);
        const double centre = offset + std::round(vertex - offset);
        tail = walk(e, centre, +1, tol, acc);
        tail += walk(e, centre - 1.0, -1, tol, acc);
    }
    return Evaluation{acc.sum, tail + acc.rounding};
}

} // namespace singlet
