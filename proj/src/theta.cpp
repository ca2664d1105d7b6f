#include "singlet/theta.hpp"

#include "singlet/lattice_sum.hpp"
#include "singlet/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace singlet
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr Complex i_unit{0.0, 1.0};
// Two-sided theta sums are summed to this tail bound.
constexpr double theta_tail = 1e-16;

void require_upper_half_plane(Complex tau)
{
    if (!(tau.imag() > 0.0)) {
        throw std::domain_error("tau must lie in the upper half-plane, got Im(tau) = " + std::to_string(tau.imag()));
    }
}

void require_tol(double tol)
{
    if (!(tol > 0.0)) {
        throw std::domain_error("tolerance must be positive");
    }
}

void require_regular(Complex eps)
{
    if (eps.real() == 0.0) {
        throw std::domain_error("the regularization needs Re(eps) != 0");
    }
}

Evaluation scaled(const Evaluation &x, Complex factor)
{
    return Evaluation{factor * x.value, std::abs(factor) * x.error};
}

Evaluation half_integer_sum(const ModularPoint &pt, LatticeRange range, double tol)
{
    const QuadraticExponent e{pi * i_unit * pt.tau, 2.0 * pi * i_unit * pt.u + 2.0 * pi * pt.eps};
    return gaussian_lattice_sum(e, 0.5, range, tol);
}

} // namespace

Evaluation partial_theta(const ModularPoint &pt, double tol)
{
    require_upper_half_plane(pt.tau);
    require_tol(tol);
    return half_integer_sum(pt, LatticeRange::nonnegative, tol);
}

Evaluation theta2(const ModularPoint &pt)
{
    require_upper_half_plane(pt.tau);
    return half_integer_sum(pt, LatticeRange::all, theta_tail);
}

Evaluation theta4(const ModularPoint &pt)
{
    require_upper_half_plane(pt.tau);
    const Complex tau = pt.tau;
    const Complex eps = pt.eps;
    // pi i tau (n - i eps)^2 + 2 pi i u (n - i eps) + pi i n
    const QuadraticExponent e{pi * i_unit * tau, 2.0 * pi * tau * eps + 2.0 * pi * i_unit * pt.u + pi * i_unit,
                              -pi * i_unit * tau * eps * eps + 2.0 * pi * pt.u * eps};
    return gaussian_lattice_sum(e, 0.0, LatticeRange::all, theta_tail);
}

Evaluation dedekind_eta(Complex tau)
{
    require_upper_half_plane(tau);
    const QuadraticExponent e{3.0 * pi * i_unit * tau, pi * i_unit * tau + pi * i_unit, pi * i_unit * tau / 12.0};
    return gaussian_lattice_sum(e, 0.0, LatticeRange::all, theta_tail);
}

Evaluation false_theta(const ModularPoint &pt, double tol)
{
    const Evaluation plus = partial_theta(pt, tol);
    const Evaluation minus = partial_theta(ModularPoint{-pt.u, pt.tau, -pt.eps}, tol);
    return Evaluation{plus.value - minus.value, plus.error + minus.error};
}

Evaluation partial_theta_ab(int a, int b, const ModularPoint &pt, double tol)
{
    if (a <= 0) {
        throw std::invalid_argument("partial_theta_ab needs a >= 1, got " + std::to_string(a));
    }
    require_upper_half_plane(pt.tau);
    require_tol(tol);
    const QuadraticExponent e{2.0 * pi * i_unit * pt.tau * static_cast<double>(a),
                              2.0 * pi * i_unit * pt.u + 2.0 * pi * pt.eps};
    return gaussian_lattice_sum(e, static_cast<double>(b) / (2.0 * a), LatticeRange::nonnegative, tol);
}

Evaluation partial_theta_ab_reduced(int a, int b, const ModularPoint &pt, double tol)
{
    if (a <= 0) {
        throw std::invalid_argument("partial_theta_ab needs a >= 1, got " + std::to_string(a));
    }
    const double d = static_cast<double>(b) / (2.0 * a) - 0.5;
    const ModularPoint reduced{pt.u + static_cast<double>(b - a) * pt.tau, 2.0 * a * pt.tau, pt.eps};
    const Complex prefactor =
        std::exp(2.0 * pi * i_unit * (pt.u * d + pt.tau * (a * d * d)) + 2.0 * pi * pt.eps * d);
    return scaled(partial_theta(reduced, tol), prefactor);
}

Evaluation sine_line_integral(const ModularPoint &pt, double tol)
{
    require_upper_half_plane(pt.tau);
    require_regular(pt.eps);
    require_tol(tol);
    const Complex tau = pt.tau;
    const Complex u = pt.u;
    const Complex eps = pt.eps;
    auto integrand = [=](double x) {
        return std::exp(pi * i_unit * tau * (x * x) + 2.0 * pi * i_unit * u * x) / std::sin(pi * (x + i_unit * eps));
    };
    LineQuadratureOptions options;
    options.decay = 0.9 * pi * tau.imag();
    options.tol = tol;
    options.near_resonance = std::abs(eps.real()) < 0.02;
    return gauss_line_integral(integrand, options);
}

Evaluation h_eps(const ModularPoint &pt, double tol)
{
    const Complex factor = -i_unit * std::sqrt(-i_unit * pt.tau) / 2.0;
    return scaled(sine_line_integral(pt, tol), factor);
}

ModularPoint s_transform(const ModularPoint &pt)
{
    require_upper_half_plane(pt.tau);
    return ModularPoint{pt.u / pt.tau, -1.0 / pt.tau, pt.eps};
}

Evaluation f_eps(const ModularPoint &pt, double tol)
{
    const Complex gamma = std::exp(-pi * i_unit * pt.u * pt.u / pt.tau);
    return scaled(partial_theta(s_transform(pt), tol), gamma);
}

int correction_alpha(Complex eps)
{
    require_regular(eps);
    return eps.real() > 0.0 ? 1 : 0;
}

namespace
{

// e^{pi i u^2/tau} sqrt(-i tau) * (-i w I + c theta4)
Evaluation s_rhs(const ModularPoint &pt, double tol, double integral_weight, double theta_weight)
{
    const Evaluation integral = sine_line_integral(pt, tol);
    const Complex prefactor = std::exp(pi * i_unit * pt.u * pt.u / pt.tau) * std::sqrt(-i_unit * pt.tau);
    Complex bracket = -i_unit * integral_weight * integral.value;
    double error = integral_weight * integral.error;
    if (theta_weight != 0.0) {
        const Evaluation theta = theta4(pt);
        bracket += theta_weight * theta.value;
        error += std::abs(theta_weight) * theta.error;
    }
    return scaled(Evaluation{bracket, error}, prefactor);
}

double sgn(double x)
{
    return x > 0.0 ? 1.0 : -1.0;
}

} // namespace

Evaluation s_rhs_partial(const ModularPoint &pt, double tol)
{
    require_regular(pt.eps);
    // (1/2)(-i I + (sgn + 1) theta4)
    return s_rhs(pt, tol, 0.5, 0.5 * (sgn(pt.eps.real()) + 1.0));
}

Evaluation s_rhs_false(const ModularPoint &pt, double tol)
{
    require_regular(pt.eps);
    return s_rhs(pt, tol, 1.0, sgn(pt.eps.real()));
}

} // namespace singlet
