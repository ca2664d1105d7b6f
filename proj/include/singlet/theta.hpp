#pragma once

// Regularized partial, false and ordinary theta functions, and the Gaussian-line
// integral that appears in their S-transformation.
//
// Conventions: q = e(tau), z = e(u), e(x) = exp(2 pi i x); fractional powers z^k
// mean e(u k). All square roots are principal; Im(tau) > 0 keeps -i tau in the
// right half-plane.

#include "singlet/evaluation.hpp"

namespace singlet
{

inline constexpr double default_tol = 1e-10;

struct ModularPoint
{
    Complex u{0.0, 0.0};
    Complex tau{0.0, 1.0};
    Complex eps{-0.2, 0.0};
};

/// P_eps(u,tau) = sum_{k in Z>=0 + 1/2} z^k e^{2 pi eps k} q^{k^2/2}
Evaluation partial_theta(const ModularPoint &pt, double tol = default_tol);

/// theta_{4,eps}(u,tau) = sum_{n in Z} (-1)^n z^{n - i eps} q^{(n - i eps)^2/2}
Evaluation theta4(const ModularPoint &pt);

/// theta_{2,eps}(u,tau) = sum_{k in Z + 1/2} z^k e^{2 pi eps k} q^{k^2/2}
Evaluation theta2(const ModularPoint &pt);

/// F theta_eps(u,tau) = P_eps(u,tau) - P_{-eps}(-u,tau)
Evaluation false_theta(const ModularPoint &pt, double tol = default_tol);

/// sum_{n>=0} z^{n+b/2a} e^{2 pi eps (n+b/2a)} q^{a (n+b/2a)^2}, by direct summation.
Evaluation partial_theta_ab(int a, int b, const ModularPoint &pt, double tol = default_tol);

/// The same function through z^d q^{a d^2} e^{2 pi eps d} P_eps(u + (b-a) tau, 2a tau), d = b/2a - 1/2.
Evaluation partial_theta_ab_reduced(int a, int b, const ModularPoint &pt, double tol = default_tol);

/// int_R q^{x^2/2} z^x / sin(pi (x + i eps)) dx. Needs Re(eps) != 0.
Evaluation sine_line_integral(const ModularPoint &pt, double tol = default_tol);

/// h_eps(u,tau) = -(i sqrt(-i tau)/2) * sine_line_integral
Evaluation h_eps(const ModularPoint &pt, double tol = default_tol);

/// f_eps(u,tau) = e^{-pi i u^2/tau} P_eps(u/tau, -1/tau)
Evaluation f_eps(const ModularPoint &pt, double tol = default_tol);

/// 1 for Re(eps) > 0, 0 for Re(eps) < 0: f_eps - h_eps = alpha_eps sqrt(-i tau) theta_{4,eps}.
int correction_alpha(Complex eps);

/// Right-hand side of the S-law for P_eps:
///   e^{pi i u^2/tau} sqrt(-i tau)/2 * (-i * sine_line_integral + (sgn(Re eps) + 1) theta_{4,eps}(u,tau)),
/// which equals P_eps(u/tau, -1/tau).
Evaluation s_rhs_partial(const ModularPoint &pt, double tol = default_tol);

/// e^{pi i u^2/tau} sqrt(-i tau) * (-i * sine_line_integral + sgn(Re eps) theta_{4,eps}(u,tau)),
/// which equals F theta_eps(u/tau, -1/tau).
Evaluation s_rhs_false(const ModularPoint &pt, double tol = default_tol);

/// eta(tau) = sum_n (-1)^n q^{(6n+1)^2/24}
Evaluation dedekind_eta(Complex tau);

/// (u, tau) -> (u/tau, -1/tau), eps unchanged.
ModularPoint s_transform(const ModularPoint &pt);

} // namespace singlet
