#pragma once

#include "singlet/evaluation.hpp"
#include "singlet/laurent.hpp"

#include <map>
#include <optional>

namespace singlet
{

/// Truncated formal series  sum_e a_e q^e  with rational exponents e <= cutoff and
/// EpsLaurent coefficients. Everything above the cutoff is unknown, so all
/// operations keep track of the exponent up to which the result is exact.
class QSeries
{
public:
    using Terms = std::map<Rational, EpsLaurent>;

    /// The zero series, known exactly up to `cutoff`.
    explicit QSeries(Rational cutoff);

    static QSeries one(const Rational &cutoff);
    static QSeries monomial(const Rational &exponent, const EpsLaurent &coeff, const Rational &cutoff);

    const Rational &cutoff() const { return cutoff_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    EpsLaurent coeff(const Rational &exponent) const;
    /// Smallest exponent with a nonzero coefficient.
    std::optional<Rational> valuation() const;

    void add_term(const Rational &exponent, const EpsLaurent &coeff);

    /// Drops everything above `cutoff`; raising the cutoff is an error.
    QSeries truncated(const Rational &cutoff) const;

    /// Exact product with the monomial c q^shift; the cutoff moves by `shift`.
    QSeries shifted(const Rational &shift, const EpsLaurent &c = EpsLaurent::one()) const;

    /// Coefficients specialized to t = 1 (eps = 0).
    QSeries at_eps_zero() const;

    QSeries &operator+=(const QSeries &other);
    QSeries &operator-=(const QSeries &other);

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);

    friend bool operator==(const QSeries &, const QSeries &) = default;

private:
    Rational cutoff_;
    Terms terms_;
};

/// Truncated Cauchy product. The result cutoff is the minimum of the operand
/// cutoffs, lowered further when an operand has a negative leading exponent
/// (a neglected term of one factor can then land below the other's cutoff).
QSeries qseries_mul(const QSeries &a, const QSeries &b);

/// q^{1/24} prod_{i>=1} (1 - q^i), expanded exactly to `cutoff` (>= 1/24).
QSeries eta_series(const Rational &cutoff);

/// 1/eta = q^{-1/24} sum_n p(n) q^n, exact to `cutoff`.
QSeries inverse_eta_series(const Rational &cutoff);

/// sum_e laurent_eval(a_e) exp(2 pi i tau e). The error combines a rounding
/// estimate with a tail estimate that assumes the neglected coefficients stay
/// below twice the largest stored one per unit exponent (true for partition-type series).
Evaluation qseries_eval(const QSeries &a, Complex tau, Complex eps, int p);

} // namespace singlet
