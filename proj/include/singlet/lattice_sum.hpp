#pragma once

#include "singlet/evaluation.hpp"

namespace singlet
{

/// exp(quadratic * k^2 + linear * k + constant); every theta-type series here is
/// a sum of such terms over a shifted integer lattice.
struct QuadraticExponent
{
    Complex quadratic;
    Complex linear;
    Complex constant{0.0, 0.0};

    Complex exponent(double k) const { return (quadratic * k + linear) * k + constant; }
};

enum class LatticeRange
{
    nonnegative, ///< k = offset + n, n >= 0
    all,         ///< k = offset + n, n in Z
};

/// Sums exp(e(k)) over the lattice until the geometric bound on the remaining
/// tail falls below min(tol, 1e-18 * sum |term|). Requires Re(quadratic) < 0.
/// The returned error is the tail bound plus a rounding estimate.
Evaluation gaussian_lattice_sum(const QuadraticExponent &e, double offset, LatticeRange range, double tol);

} // namespace singlet
