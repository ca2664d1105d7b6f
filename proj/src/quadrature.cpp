#include "singlet/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace singlet
{

namespace
{

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Panel
{
    double left;
    double right;
    int depth;
    Complex value;
    double error;
    double l1;
};

Panel evaluate_panel(const LineIntegrand &f, double left, double right, int depth)
{
    double error = 0.0;
    double l1 = 0.0;
    // Depth 0: a single Kronrod estimate with |K21 - G10| as its error.
    const Complex value = Rule::integrate(f, left, right, 0, 0.0, &error, &l1);
    return Panel{left, right, depth, value, error, l1};
}

struct ByError
{
    bool operator()(const Panel &a, const Panel &b) const
    {
        if (a.error != b.error) {
            return a.error < b.error;
        }
        return a.left > b.left;
    }
};

// Smallest X with C * int_{|x|>X} e^{-a x^2} dx < target.
double truncation_radius(double c, double a, double target)
{
    const double root_a = std::sqrt(a);
    double x = 1.0 / root_a;
    while (c * std::sqrt(std::numbers::pi / a) * std::erfc(root_a * x) >= target) {
        x *= 1.1;
        if (x > 1e6 / root_a) {
            throw QuadratureError("gauss_line_integral: cannot bound the Gaussian tail");
        }
    }
    return x;
}

// sup |f(x)| e^{a x^2} sampled on [-R, R]. Samples too small to matter for
// `target` are skipped; otherwise rounding noise in f far out is blown up by e^{a x^2}.
double envelope_constant(const LineIntegrand &f, double a, double radius, double target)
{
    const double negligible = 1e-2 * target / (2.0 * radius);
    constexpr int samples = 400;
    double c = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double x = -radius + 2.0 * radius * i / samples;
        const double fx = std::abs(f(x));
        const double v = fx * std::exp(a * x * x);
        if (fx >= negligible && std::isfinite(v)) {
            c = std::max(c, v);
        }
    }
    return c;
}

std::string format_error(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

} // namespace

Evaluation gauss_line_integral(const LineIntegrand &f, const LineQuadratureOptions &options)
{
    const double a = options.decay;
    if (!(a > 0.0)) {
        throw std::domain_error("gauss_line_integral needs decay > 0");
    }
    if (!(options.tol > 0.0)) {
        throw std::domain_error("gauss_line_integral needs tol > 0");
    }

    const double tail_target = options.tol / 2.0;
    double radius = 2.0 / std::sqrt(a);
    double c = 0.0;
    for (int iter = 0; iter < 20; ++iter) {
        c = envelope_constant(f, a, 2.0 * radius, tail_target);
        const double needed = truncation_radius(c, a, tail_target);
        if (needed <= radius) {
            break;
        }
        radius = needed;
    }
    const double tail = c * std::sqrt(std::numbers::pi / a) * std::erfc(std::sqrt(a) * radius);

    const int depth_limit = options.near_resonance ? 2 * options.max_depth : options.max_depth;
    const int initial_panels = std::max(8, static_cast<int>(std::ceil(4.0 * radius * std::sqrt(a))));

    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    std::vector<Panel> finished;
    double total_error = 0.0;
    double total_l1 = 0.0;
    const double width = 2.0 * radius / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double left = -radius + width * i;
        const double right = (i + 1 == initial_panels) ? radius : left + width;
        Panel panel = evaluate_panel(f, left, right, 0);
        total_error += panel.error;
        total_l1 += panel.l1;
        queue.push(panel);
    }

    const double eps = std::numeric_limits<double>::epsilon();
    auto floor_reached = [&] { return total_error <= std::max(tail_target, 64.0 * eps * total_l1); };
    while (!queue.empty() && !floor_reached()) {
        Panel worst = queue.top();
        queue.pop();
        // |K21 - G10| at the rounding level of the panel itself: bisection cannot improve it.
        if (worst.error <= 1024.0 * eps * worst.l1) {
            finished.push_back(worst);
            continue;
        }
        if (worst.depth >= depth_limit) {
            throw QuadratureError("gauss_line_integral: refinement limit exceeded on [" +
                                  std::to_string(worst.left) + ", " + std::to_string(worst.right) +
                                  "], error estimate " + format_error(total_error) + ", target " +
                                  format_error(std::max(tail_target, 64.0 * eps * total_l1)));
        }
        const double mid = 0.5 * (worst.left + worst.right);
        Panel lower = evaluate_panel(f, worst.left, mid, worst.depth + 1);
        Panel upper = evaluate_panel(f, mid, worst.right, worst.depth + 1);
        total_error += lower.error + upper.error - worst.error;
        total_l1 += lower.l1 + upper.l1 - worst.l1;
        queue.push(lower);
        queue.push(upper);
    }
    while (!queue.empty()) {
        finished.push_back(queue.top());
        queue.pop();
    }
    std::sort(finished.begin(), finished.end(), [](const Panel &x, const Panel &y) { return x.left < y.left; });

    Complex sum{0.0, 0.0};
    double error = 0.0;
    double l1 = 0.0;
    for (const Panel &panel : finished) {
        sum += panel.value;
        error += panel.error;
        l1 += panel.l1;
    }
    return Evaluation{sum, error + tail + 16.0 * eps * l1};
}

} // namespace singlet
