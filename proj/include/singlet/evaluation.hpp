#pragma once

#include <complex>

namespace singlet
{

using Complex = std::complex<double>;

/// A floating-point value together with an absolute error bound (truncation,
/// quadrature and rounding contributions combined).
struct Evaluation
{
    Complex value{0.0, 0.0};
    double error = 0.0;
};

} // namespace singlet
