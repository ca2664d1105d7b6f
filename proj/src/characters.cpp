#include "singlet/characters.hpp"

#include "singlet/theta.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace singlet
{

namespace
{

constexpr double pi = std::numbers::pi;

using Numerator = std::map<Rational, EpsLaurent>;

void add_to(Numerator &num, const Rational &exponent, const EpsLaurent &coeff)
{
    EpsLaurent &slot = num[exponent];
    slot += coeff;
    if (slot.is_zero()) {
        num.erase(exponent);
    }
}

// numerator / eta, exact to `cutoff`. The numerator must contain every term
// with exponent <= cutoff + 1/24.
QSeries divide_by_eta(const Numerator &num, const Rational &cutoff)
{
    const Rational lead = make_rational(1, 24);
    QSeries numerator{cutoff + lead};
    for (const auto &[e, c] : num) {
        numerator.add_term(e, c);
    }
    return (numerator * inverse_eta_series(cutoff + lead)).truncated(cutoff);
}

// t^{2o} q^{o^2/4p} for the Fock module with offset o = m - p + 1.
void add_fock(Numerator &num, int p, const Rational &offset, int sign)
{
    const Rational exponent = offset * offset / (4 * p);
    add_to(num, exponent, EpsLaurent::monomial(2 * offset, Rational{sign}));
}

void require_s(const SingletParams &params, int s)
{
    if (s < 1 || s > params.p()) {
        throw std::invalid_argument("atypical label needs 1 <= s <= p, got s = " + std::to_string(s));
    }
}

// sum_{n>=0} q^{(2pn + b - s)^2/4p} - q^{(2pn + b + s)^2/4p}
Numerator shifted_false_numerator(int p, int b, int s, const Rational &bound)
{
    Numerator num;
    for (long n = 0;; ++n) {
        const long base = 2L * p * n + b;
        const Rational lo{base - s};
        const Rational hi{base + s};
        const Rational e_lo = lo * lo / (4 * p);
        const Rational e_hi = hi * hi / (4 * p);
        if (base > s && e_lo > bound && e_hi > bound) {
            break;
        }
        if (e_lo <= bound) {
            add_to(num, e_lo, EpsLaurent::one());
        }
        if (e_hi <= bound) {
            add_to(num, e_hi, -EpsLaurent::one());
        }
    }
    return num;
}

} // namespace

std::string to_string(const ModuleLabel &label)
{
    if (label.is_typical()) {
        return "F(" + to_string(label.m()) + ")";
    }
    return to_string(label.label());
}

QSeries typical_char_series(const SingletParams &params, const Rational &m, const Rational &cutoff)
{
    Numerator num;
    const Rational offset = m - Rational{params.p() - 1};
    if (offset * offset / (4 * params.p()) <= cutoff + make_rational(1, 24)) {
        add_fock(num, params.p(), offset, +1);
    }
    return divide_by_eta(num, cutoff);
}

QSeries atypical_char_series(const SingletParams &params, int r, int s, const Rational &cutoff, CharMethod method)
{
    const int p = params.p();
    const Rational bound = cutoff + make_rational(1, 24);
    switch (method) {
    case CharMethod::felder: {
        // F(alpha_{r-2n-1,p-s}) - F(alpha_{r-2n-2,s}) have offsets A - s and A + s, A = (2+2n-r)p.
        Numerator num;
        const long as = std::abs(s);
        for (long n = 0;; ++n) {
            const Rational a{(2 + 2 * n - r) * static_cast<long>(p)};
            const Rational lo = a - s;
            const Rational hi = a + s;
            const bool lo_in = lo * lo / (4 * p) <= bound;
            const bool hi_in = hi * hi / (4 * p) <= bound;
            if (a > as && !lo_in && !hi_in) {
                break;
            }
            if (lo_in) {
                add_fock(num, p, lo, +1);
            }
            if (hi_in) {
                add_fock(num, p, hi, -1);
            }
        }
        return divide_by_eta(num, cutoff);
    }
    case CharMethod::false_theta:
        require_s(params, s);
        // (P_{p,pr-s} - P_{p,pr+s}) / eta
        return divide_by_eta(shifted_false_numerator(p, p * r, s, bound), cutoff);
    case CharMethod::direct:
        require_s(params, s);
        if (r >= 1) {
            return divide_by_eta(shifted_false_numerator(p, p * r, s, bound), cutoff);
        }
        // q^{p(-r/2 + 1/2 + n + (p -+ s)/2p)^2}: base 2p - pr + 2pn
        return divide_by_eta(shifted_false_numerator(p, 2 * p - p * r, s, bound), cutoff);
    }
    throw std::invalid_argument("unknown character method");
}

QSeries vacuum_char_series(const SingletParams &params, const Rational &cutoff)
{
    const int p = params.p();
    const Rational bound = cutoff + make_rational(1, 24);
    Numerator num;
    // p (n + (p-1)/2p)^2 = (2pn + p - 1)^2 / 4p
    for (long n = 0;; ++n) {
        bool any = false;
        for (const long k : {n, -n - 1}) {
            const Rational x{2L * p * k + p - 1};
            const Rational e = x * x / (4 * p);
            if (e <= bound) {
                add_to(num, e, EpsLaurent{Rational{k >= 0 ? 1 : -1}});
                any = true;
            }
        }
        if (!any) {
            break;
        }
    }
    return divide_by_eta(num, cutoff);
}

QSeries char_series(const SingletParams &params, const ModuleLabel &label, const Rational &cutoff)
{
    if (label.is_typical()) {
        return typical_char_series(params, label.m(), cutoff);
    }
    require_s(params, label.label().s);
    return atypical_char_series(params, label.label().r, label.label().s, cutoff);
}

Evaluation char_eval(const SingletParams &params, const ModuleLabel &label, Complex tau, Complex eps, double tol)
{
    const Evaluation eta = dedekind_eta(tau);
    const double alpha_plus = params.alpha_plus();
    const int p = params.p();
    const Complex i_unit{0.0, 1.0};
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon();

    // e^{2 pi eps x} q^{x^2/2} with x = offset / sqrt(2p)
    auto fock_numerator = [&](double offset) {
        const double x = offset / alpha_plus;
        return std::exp(2.0 * pi * eps * x + pi * i_unit * tau * (x * x));
    };

    if (label.is_typical()) {
        const double offset = to_double(label.m()) - (p - 1);
        const Complex value = fock_numerator(offset) / eta.value;
        return Evaluation{value, std::abs(value) * (eta.error / std::abs(eta.value) + rounding)};
    }

    require_s(params, label.label().s);
    const int r = label.label().r;
    const int s = label.label().s;
    Complex numerator{0.0, 0.0};
    double numerator_error = 0.0;
    for (const auto &[beta, sign] : {std::pair{beta_minus(params, r, s), +1}, std::pair{beta_plus(params, r, s), -1}}) {
        const double mb = to_double(beta.m);
        // ch[F_{alpha_0/2 - beta}] has offset -m_beta; alpha_+ beta = m_beta.
        const Complex fock = fock_numerator(-mb);
        const Evaluation partial =
            partial_theta(ModularPoint{-mb * tau, alpha_plus * alpha_plus * tau, alpha_plus * eps}, tol);
        numerator += static_cast<double>(sign) * fock * partial.value;
        numerator_error += std::abs(fock) * partial.error;
    }
    const Complex value = numerator / eta.value;
    const double error = numerator_error / std::abs(eta.value) +
                         std::abs(value) * (eta.error / std::abs(eta.value) + rounding);
    return Evaluation{value, error};
}

CharRelationReport verify_char_relations(const SingletParams &params, int r_min, int r_max, const Rational &cutoff)
{
    const int p = params.p();
    CharRelationReport report;
    auto check = [&](bool ok, const std::string &what) {
        ++report.checked;
        if (!ok) {
            report.failures.push_back("p=" + std::to_string(p) + " " + what);
        }
    };
    auto m_series = [&](int r, int s) { return atypical_char_series(params, r, s, cutoff); };

    for (int r = r_min; r <= r_max; ++r) {
        for (int s = 1; s <= p; ++s) {
            const QSeries fock = typical_char_series(params, alpha_rs(params, r, s).m, cutoff);
            check(fock == m_series(r, s) + m_series(r + 1, p - s),
                  "F(alpha_{" + std::to_string(r) + "," + std::to_string(s) + "}) != M(r,s) + M(r+1,p-s)");
        }
        check(m_series(r, 0).is_zero(), "M(" + std::to_string(r) + ",0) != 0");
        check(m_series(r, p) == typical_char_series(params, alpha_rs(params, r, p).m, cutoff),
              "M(" + std::to_string(r) + ",p) != F(alpha_{r,p})");
        for (int s = p + 1; s <= 2 * p - 1; ++s) {
            check(m_series(r, s) == m_series(r - 1, s - p) + m_series(r, 2 * p - s) + m_series(r + 1, s - p),
                  "virtual M(" + std::to_string(r) + "," + std::to_string(s) + ") reduction");
        }
    }
    return report;
}

CharRelationReport verify_char_methods(const SingletParams &params, int r_min, int r_max, const Rational &cutoff)
{
    CharRelationReport report;
    for (int r = r_min; r <= r_max; ++r) {
        for (int s = 1; s <= params.p(); ++s) {
            const QSeries felder = atypical_char_series(params, r, s, cutoff, CharMethod::felder).at_eps_zero();
            const QSeries false_theta = atypical_char_series(params, r, s, cutoff, CharMethod::false_theta);
            const QSeries direct = atypical_char_series(params, r, s, cutoff, CharMethod::direct);
            ++report.checked;
            if (!(felder == false_theta && felder == direct)) {
                report.failures.push_back("p=" + std::to_string(params.p()) + " " + to_string(AtypLabel{r, s}) +
                                          ": felder/false_theta/direct disagree");
            }
        }
    }
    return report;
}

} // namespace singlet
