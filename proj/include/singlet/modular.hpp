#pragma once

#include "singlet/characters.hpp"
#include "singlet/theta.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace singlet
{

struct ResidualReport
{
    std::string id;
    std::string point;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// pass iff rel_residual <= tolerance, or abs_residual <= tolerance when |lhs| < 1e-6.
ResidualReport make_report(std::string id, std::string point, Complex lhs, Complex rhs, double tolerance);

enum class ThetaLaw
{
    T,
    S_partial,
    S_false,
    elliptic_u1,
    elliptic_utau,
    correction,
    two_partial,       ///< 2 P_eps = F theta_eps + theta_{2,eps}
    theta2_S,          ///< theta_{2,eps}(u/tau,-1/tau) = e^{pi i u^2/tau} sqrt(-i tau) theta_{4,eps}(u,tau)
    theta4_reflection, ///< theta_{4,-eps}(-u,tau) = theta_{4,eps}(u,tau)
    theta4_shift,      ///< q^{-eps^2/2} z^{-i eps} theta_{4,0}(u - i eps tau, tau) = theta_{4,eps}(u,tau)
};

std::string_view to_string(ThetaLaw law);
/// Throws std::invalid_argument for unknown names.
ThetaLaw parse_theta_law(std::string_view name);

std::string describe(const ModularPoint &pt);

/// Evaluates both sides of `law` at `pt`; numeric work runs at a tolerance well below `tol`.
ResidualReport verify_theta_law(ThetaLaw law, const ModularPoint &pt, double tol);

/// e^{2 pi eps (lambda - mu)} e^{-2 pi i lambda mu}, lambda and mu real charges measured from alpha_0/2.
Complex s_kernel_typical(double lambda, double mu, Complex eps);

/// -e^{-2 pi eps ((r-1) alpha_+/2 + mu)} e^{pi i (r-1) alpha_+ mu} sin(pi s alpha_- (mu + i eps)) / sin(pi alpha_+ (mu + i eps))
Complex s_kernel_atypical(const SingletParams &params, int r, int s, double mu, Complex eps);

/// (sgn(Re eps) + 1)/(2 alpha_+ eta(tau)) sum_n (-1)^{rn} e^{pi i s n/p} q^{(n^2/alpha_+^2 - eps^2)/2}
///   (q^{-i eps n/alpha_+} - q^{i eps n/alpha_+})
Evaluation x_correction(const SingletParams &params, int r, int s, Complex tau, Complex eps);

/// char_eval(label, -1/tau) against the kernel integral over mu of
/// S(mu) ch[F^eps_{mu + alpha_0/2}](tau), plus X for atypical labels.
ResidualReport verify_char_S(const SingletParams &params, const ModuleLabel &label, Complex tau, Complex eps,
                             double tol);

/// Nested quadrature of int_rho int_mu e^{-2 pi i rho (mu + c)} f(mu) against f(-c), with
/// f(mu) = e^{2 pi eps (mu + c)} q^{(mu - alpha_0/2)^2/2} e^{2 pi eps (mu - alpha_0/2)}. Needs Re eps < 0.
ResidualReport fourier_inversion_check(const SingletParams &params, double c, Complex eps, Complex tau, double tol);

/// int f/sin(mu + i eps) against 2i sum_{m>=0} int f e^{eps(2m+1) - i mu (2m+1)}, same f. Needs Re eps < 0.
ResidualReport sum_exchange_check(const SingletParams &params, double c, Complex eps, Complex tau, double tol);

/// tau in {i, 2i, 0.3+0.8i} x u in {0, 0.1, 0.05+0.02i} x eps in {+-0.1, +-0.3}.
std::vector<ModularPoint> default_theta_grid();

} // namespace singlet
