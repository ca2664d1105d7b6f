#pragma once

#include "singlet/evaluation.hpp"

#include <functional>
#include <stdexcept>

namespace singlet
{

/// Thrown when adaptive refinement cannot reach the requested tolerance, which
/// signals an integrand that does not meet the Gaussian-decay precondition.
class QuadratureError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

using LineIntegrand = std::function<Complex(double)>;

struct LineQuadratureOptions
{
    /// Rate a > 0 with |f(x)| <= C exp(-a x^2); pass slightly less than the true rate.
    double decay = 1.0;
    /// Absolute error target.
    double tol = 1e-10;
    /// Bisection levels allowed per initial panel.
    int max_depth = 14;
    /// Doubles max_depth (integrands with poles close to the real axis).
    bool near_resonance = false;
};

/// Integral of f over the real line. The domain is cut to [-X, X] with the
/// Gaussian tail C * int_{|x|>X} e^{-a x^2} below tol/2, then 21-point
/// Gauss-Kronrod panels are bisected (largest error first) until the summed
/// error estimate is below tol/2 or reaches the rounding floor of the integrand.
/// Panels are summed left to right, so results are reproducible.
Evaluation gauss_line_integral(const LineIntegrand &f, const LineQuadratureOptions &options);

inline Evaluation gauss_line_integral(const LineIntegrand &f, double decay, double tol = 1e-10)
{
    LineQuadratureOptions options;
    options.decay = decay;
    options.tol = tol;
    return gauss_line_integral(f, options);
}

} // namespace singlet
