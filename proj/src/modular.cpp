#include "singlet/modular.hpp"

#include "singlet/lattice_sum.hpp"
#include "singlet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace singlet
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr Complex i_unit{0.0, 1.0};

constexpr std::array<std::pair<ThetaLaw, std::string_view>, 10> law_names{{
    {ThetaLaw::T, "T"},
    {ThetaLaw::S_partial, "S_partial"},
    {ThetaLaw::S_false, "S_false"},
    {ThetaLaw::elliptic_u1, "elliptic_u1"},
    {ThetaLaw::elliptic_utau, "elliptic_utau"},
    {ThetaLaw::correction, "correction"},
    {ThetaLaw::two_partial, "two_partial"},
    {ThetaLaw::theta2_S, "theta2_S"},
    {ThetaLaw::theta4_reflection, "theta4_reflection"},
    {ThetaLaw::theta4_shift, "theta4_shift"},
}};

// Tolerance for the evaluators behind a check at tolerance `tol`.
double working_tol(double tol)
{
    return std::clamp(tol * 1e-3, 1e-15, 1e-11);
}

constexpr double series_tol = 1e-300;

std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_point(Complex z)
{
    return format_number(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? "" : "+") + format_number(z.imag()) +
           "i";
}

void require_tau(Complex tau)
{
    if (!(tau.imag() > 0.0)) {
        throw std::domain_error("tau must lie in the upper half-plane");
    }
}

void require_regular(Complex eps)
{
    if (eps.real() == 0.0) {
        throw std::domain_error("the regularization needs Re(eps) != 0");
    }
}

void require_negative(Complex eps)
{
    if (!(eps.real() < 0.0)) {
        throw std::domain_error("this check needs Re(eps) < 0");
    }
}

} // namespace

ResidualReport make_report(std::string id, std::string point, Complex lhs, Complex rhs, double tolerance)
{
    ResidualReport report;
    report.id = std::move(id);
    report.point = std::move(point);
    report.lhs = lhs;
    report.rhs = rhs;
    report.tolerance = tolerance;
    report.abs_residual = std::abs(lhs - rhs);
    report.rel_residual = std::abs(lhs) > 0.0 ? report.abs_residual / std::abs(lhs) : report.abs_residual;
    const double measure = std::abs(lhs) < 1e-6 ? report.abs_residual : report.rel_residual;
    report.pass = measure <= tolerance;
    return report;
}

std::string_view to_string(ThetaLaw law)
{
    for (const auto &[value, name] : law_names) {
        if (value == law) {
            return name;
        }
    }
    return "unknown";
}

ThetaLaw parse_theta_law(std::string_view name)
{
    for (const auto &[value, law_name] : law_names) {
        if (law_name == name) {
            return value;
        }
    }
    throw std::invalid_argument("unknown theta law '" + std::string(name) + "'");
}

std::string describe(const ModularPoint &pt)
{
    return "u=" + format_point(pt.u) + " tau=" + format_point(pt.tau) + " eps=" + format_point(pt.eps);
}

ResidualReport verify_theta_law(ThetaLaw law, const ModularPoint &pt, double tol)
{
    require_tau(pt.tau);
    const double wt = working_tol(tol);
    // Lattice sums are cheap; summing them to underflow keeps amplified tails out of the residual.
    const double st = series_tol;
    const Complex u = pt.u;
    const Complex tau = pt.tau;
    const Complex eps = pt.eps;
    const Complex z_pow = std::exp(2.0 * pi * i_unit * u);
    const Complex q_pow = std::exp(2.0 * pi * i_unit * tau);
    Complex lhs;
    Complex rhs;
    switch (law) {
    case ThetaLaw::T:
        lhs = partial_theta({u, tau + 1.0, eps}, st).value;
        rhs = std::exp(i_unit * pi / 4.0) * partial_theta(pt, st).value;
        break;
    case ThetaLaw::S_partial:
        lhs = partial_theta(s_transform(pt), st).value;
        rhs = s_rhs_partial(pt, wt).value;
        break;
    case ThetaLaw::S_false:
        lhs = false_theta(s_transform(pt), st).value;
        rhs = s_rhs_false(pt, wt).value;
        break;
    case ThetaLaw::elliptic_u1:
        lhs = partial_theta({u + 1.0, tau, eps}, st).value;
        rhs = -partial_theta(pt, st).value;
        break;
    case ThetaLaw::elliptic_utau:
        // z q^{1/2} e^{2 pi eps} P(u+tau) + z^{1/2} q^{1/8} e^{pi eps} = P(u); the unrearranged
        // form cancels two terms of size |q|^{-3/8} and loses that many digits.
        lhs = z_pow * std::sqrt(q_pow) * std::exp(2.0 * pi * eps) * partial_theta({u + tau, tau, eps}, st).value +
              std::exp(pi * i_unit * u + 0.25 * pi * i_unit * tau + pi * eps);
        rhs = partial_theta(pt, st).value;
        break;
    case ThetaLaw::correction:
        lhs = f_eps(pt, st).value - h_eps(pt, wt).value;
        rhs = static_cast<double>(correction_alpha(eps)) * std::sqrt(-i_unit * tau) * theta4(pt).value;
        break;
    case ThetaLaw::two_partial:
        lhs = 2.0 * partial_theta(pt, st).value;
        rhs = false_theta(pt, st).value + theta2(pt).value;
        break;
    case ThetaLaw::theta2_S:
        lhs = theta2(s_transform(pt)).value;
        rhs = std::exp(pi * i_unit * u * u / tau) * std::sqrt(-i_unit * tau) * theta4(pt).value;
        break;
    case ThetaLaw::theta4_reflection:
        lhs = theta4({-u, tau, -eps}).value;
        rhs = theta4(pt).value;
        break;
    case ThetaLaw::theta4_shift:
        lhs = std::exp(-pi * i_unit * tau * eps * eps + 2.0 * pi * u * eps) *
              theta4({u - i_unit * eps * tau, tau, Complex{0.0, 0.0}}).value;
        rhs = theta4(pt).value;
        break;
    default:
        throw std::invalid_argument("unknown theta law");
    }
    return make_report(std::string(to_string(law)), describe(pt), lhs, rhs, tol);
}

Complex s_kernel_typical(double lambda, double mu, Complex eps)
{
    return std::exp(2.0 * pi * eps * (lambda - mu) - 2.0 * pi * i_unit * (lambda * mu));
}

Complex s_kernel_atypical(const SingletParams &params, int r, int s, double mu, Complex eps)
{
    require_regular(eps);
    const double ap = params.alpha_plus();
    const double am = params.alpha_minus();
    const Complex w = mu + i_unit * eps;
    return -std::exp(-2.0 * pi * eps * ((r - 1) * ap / 2.0 + mu) + pi * i_unit * ((r - 1) * ap * mu)) *
           std::sin(pi * s * am * w) / std::sin(pi * ap * w);
}

Evaluation x_correction(const SingletParams &params, int r, int s, Complex tau, Complex eps)
{
    require_tau(tau);
    require_regular(eps);
    if (eps.real() < 0.0) {
        return Evaluation{};
    }
    const int p = params.p();
    const double ap = params.alpha_plus();
    const Complex quadratic = pi * i_unit * tau / (2.0 * p);
    const Complex phase = pi * i_unit * static_cast<double>(r) + pi * i_unit * (static_cast<double>(s) / p);
    const Complex shift = 2.0 * pi * tau * eps / ap;
    const Complex constant = -pi * i_unit * tau * eps * eps;
    const Evaluation first = gaussian_lattice_sum({quadratic, phase + shift, constant}, 0.0, LatticeRange::all, 1e-16);
    const Evaluation second = gaussian_lattice_sum({quadratic, phase - shift, constant}, 0.0, LatticeRange::all, 1e-16);
    const Evaluation eta = dedekind_eta(tau);
    // (sgn + 1) / (2 alpha_+) = 1 / alpha_+ on this branch
    const Complex prefactor = 1.0 / (ap * eta.value);
    const Complex value = prefactor * (first.value - second.value);
    const double error =
        std::abs(prefactor) * (first.error + second.error) + std::abs(value) * eta.error / std::abs(eta.value);
    return Evaluation{value, error};
}

ResidualReport verify_char_S(const SingletParams &params, const ModuleLabel &label, Complex tau, Complex eps,
                             double tol)
{
    require_tau(tau);
    require_regular(eps);
    const double wt = working_tol(tol);
    const Evaluation eta = dedekind_eta(tau);
    const Complex lhs = char_eval(params, label, -1.0 / tau, eps, wt).value;

    // ch[F^eps_{mu + alpha_0/2}](tau) = e^{2 pi eps mu} q^{mu^2/2} / eta(tau)
    auto fock = [=](double mu) { return std::exp(2.0 * pi * eps * mu + pi * i_unit * tau * (mu * mu)) / eta.value; };

    LineIntegrand integrand;
    Complex correction{0.0, 0.0};
    if (label.is_typical()) {
        const double lambda = (to_double(label.m()) - (params.p() - 1)) / params.alpha_plus();
        integrand = [=](double mu) { return s_kernel_typical(lambda, mu, eps) * fock(mu); };
    } else {
        const int r = label.label().r;
        const int s = label.label().s;
        integrand = [=, &params](double mu) { return s_kernel_atypical(params, r, s, mu, eps) * fock(mu); };
        correction = x_correction(params, r, s, tau, eps).value;
    }
    LineQuadratureOptions options;
    options.decay = 0.9 * pi * tau.imag();
    options.tol = wt;
    options.near_resonance = std::abs(eps.real()) < 0.02;
    const Complex rhs = gauss_line_integral(integrand, options).value + correction;

    const std::string point = "p=" + std::to_string(params.p()) + " " + to_string(label) + " tau=" +
                              format_point(tau) + " eps=" + format_point(eps);
    return make_report(label.is_typical() ? "char_S_typical" : "char_S_atypical", point, lhs, rhs, tol);
}

namespace
{

struct TestFunction
{
    Complex tau;
    Complex eps;
    double c;
    double half_alpha0;

    Complex operator()(double mu) const
    {
        const double x = mu - half_alpha0;
        return std::exp(2.0 * pi * eps * (mu + c) + pi * i_unit * tau * (x * x) + 2.0 * pi * eps * x);
    }
};

std::string inversion_point(const SingletParams &params, double c, Complex eps, Complex tau)
{
    return "p=" + std::to_string(params.p()) + " c=" + format_number(c) + " tau=" + format_point(tau) +
           " eps=" + format_point(eps);
}

} // namespace

ResidualReport fourier_inversion_check(const SingletParams &params, double c, Complex eps, Complex tau, double tol)
{
    require_tau(tau);
    require_negative(eps);
    const double wt = working_tol(tol);
    const TestFunction f{tau, eps, c, params.alpha_zero() / 2.0};
    const double inner_decay = 0.9 * pi * tau.imag();
    // The inner transform decays like |e^{-pi i rho^2 / tau}|.
    const double outer_decay = 0.9 * pi * tau.imag() / std::norm(tau);

    auto inner = [&](double rho) {
        auto integrand = [&](double mu) { return std::exp(-2.0 * pi * i_unit * rho * (mu + c)) * f(mu); };
        return gauss_line_integral(integrand, inner_decay, wt).value;
    };
    // Inner values carry noise near wt, so the outer rule cannot resolve below it.
    const Complex lhs = gauss_line_integral(inner, outer_decay, wt * 10.0).value;
    const Complex rhs = f(-c);
    return make_report("fourier_inversion", inversion_point(params, c, eps, tau), lhs, rhs, tol);
}

ResidualReport sum_exchange_check(const SingletParams &params, double c, Complex eps, Complex tau, double tol)
{
    require_tau(tau);
    require_negative(eps);
    const double wt = working_tol(tol);
    const TestFunction f{tau, eps, c, params.alpha_zero() / 2.0};
    const double decay = 0.9 * pi * tau.imag();

    const Complex lhs =
        gauss_line_integral([&](double mu) { return f(mu) / std::sin(mu + i_unit * eps); }, decay, wt).value;
    const double l1 = gauss_line_integral([&](double mu) { return Complex{std::abs(f(mu)), 0.0}; }, decay, wt).value.real();

    Complex sum{0.0, 0.0};
    for (int m = 0;; ++m) {
        const double k = 2.0 * m + 1.0;
        // Remaining terms are bounded by the geometric tail of e^{Re(eps) k} l1.
        const double tail = 2.0 * l1 * std::exp(eps.real() * k) / (1.0 - std::exp(2.0 * eps.real()));
        if (tail < wt * 1e-2) {
            break;
        }
        auto integrand = [&](double mu) { return f(mu) * std::exp(eps * k - i_unit * mu * k); };
        sum += gauss_line_integral(integrand, decay, wt * 1e-2).value;
    }
    const Complex rhs = 2.0 * i_unit * sum;
    return make_report("sum_exchange", inversion_point(params, c, eps, tau), lhs, rhs, tol);
}

std::vector<ModularPoint> default_theta_grid()
{
    std::vector<ModularPoint> grid;
    for (const Complex tau : {Complex{0.0, 1.0}, Complex{0.0, 2.0}, Complex{0.3, 0.8}}) {
        for (const Complex u : {Complex{0.0, 0.0}, Complex{0.1, 0.0}, Complex{0.05, 0.02}}) {
            for (const double eps : {-0.3, -0.1, 0.1, 0.3}) {
                grid.push_back(ModularPoint{u, tau, Complex{eps, 0.0}});
            }
        }
    }
    return grid;
}

} // namespace singlet
