#include "singlet/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace singlet
{

QSeries::QSeries(Rational cutoff) : cutoff_(std::move(cutoff)) {}

QSeries QSeries::one(const Rational &cutoff)
{
    return monomial(Rational{0}, EpsLaurent::one(), cutoff);
}

QSeries QSeries::monomial(const Rational &exponent, const EpsLaurent &coeff, const Rational &cutoff)
{
    QSeries out{cutoff};
    out.add_term(exponent, coeff);
    return out;
}

EpsLaurent QSeries::coeff(const Rational &exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? EpsLaurent{} : it->second;
}

std::optional<Rational> QSeries::valuation() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

void QSeries::add_term(const Rational &exponent, const EpsLaurent &coeff)
{
    if (exponent > cutoff_ || coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

QSeries QSeries::truncated(const Rational &cutoff) const
{
    if (cutoff > cutoff_) {
        throw std::invalid_argument("cannot truncate a series known to q^" + to_string(cutoff_) + " at q^" +
                                    to_string(cutoff));
    }
    QSeries out{cutoff};
    for (auto it = terms_.begin(); it != terms_.end() && it->first <= cutoff; ++it) {
        out.terms_.emplace(it->first, it->second);
    }
    return out;
}

QSeries QSeries::shifted(const Rational &shift, const EpsLaurent &c) const
{
    QSeries out{cutoff_ + shift};
    if (c.is_zero()) {
        return out;
    }
    for (const auto &[e, a] : terms_) {
        out.terms_.emplace(e + shift, a * c);
    }
    return out;
}

QSeries QSeries::at_eps_zero() const
{
    QSeries out{cutoff_};
    for (const auto &[e, a] : terms_) {
        out.add_term(e, EpsLaurent{a.at_one()});
    }
    return out;
}

QSeries &QSeries::operator+=(const QSeries &other)
{
    if (other.cutoff_ < cutoff_) {
        *this = truncated(other.cutoff_);
    }
    for (const auto &[e, a] : other.terms_) {
        add_term(e, a);
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &other)
{
    if (other.cutoff_ < cutoff_) {
        *this = truncated(other.cutoff_);
    }
    for (const auto &[e, a] : other.terms_) {
        add_term(e, -a);
    }
    return *this;
}

namespace
{

// Lower bound for every exponent of the full (untruncated) series.
Rational exponent_floor(const QSeries &a)
{
    const auto v = a.valuation();
    return v ? std::min(*v, a.cutoff()) : a.cutoff();
}

} // namespace

QSeries operator*(const QSeries &a, const QSeries &b)
{
    Rational cutoff = std::min(a.cutoff(), b.cutoff());
    cutoff = std::min<Rational>(cutoff, a.cutoff() + exponent_floor(b));
    cutoff = std::min<Rational>(cutoff, b.cutoff() + exponent_floor(a));

    QSeries out{cutoff};
    for (const auto &[ea, ca] : a.terms()) {
        for (const auto &[eb, cb] : b.terms()) {
            const Rational e = ea + eb;
            if (e <= cutoff) {
                out.add_term(e, ca * cb);
            }
        }
    }
    return out;
}

QSeries qseries_mul(const QSeries &a, const QSeries &b)
{
    return a * b;
}

QSeries eta_series(const Rational &cutoff)
{
    const Rational lead = make_rational(1, 24);
    if (cutoff < lead) {
        throw std::invalid_argument("eta_series needs cutoff >= 1/24, got " + to_string(cutoff));
    }
    const auto degree = static_cast<std::size_t>(floor(cutoff - lead).get_si());
    std::vector<mpz_class> poly(degree + 1, 0);
    poly[0] = 1;
    for (std::size_t i = 1; i <= degree; ++i) {
        for (std::size_t n = degree; n >= i; --n) {
            poly[n] -= poly[n - i];
        }
    }
    QSeries out{cutoff};
    for (std::size_t n = 0; n <= degree; ++n) {
        out.add_term(lead + Rational{static_cast<long>(n)}, EpsLaurent{Rational{poly[n]}});
    }
    return out;
}

QSeries inverse_eta_series(const Rational &cutoff)
{
    const Rational lead = make_rational(-1, 24);
    QSeries out{cutoff};
    if (cutoff < lead) {
        return out;
    }
    const auto degree = static_cast<std::size_t>(floor(cutoff - lead).get_si());
    std::vector<mpz_class> partitions(degree + 1, 0);
    partitions[0] = 1;
    for (std::size_t k = 1; k <= degree; ++k) {
        for (std::size_t n = k; n <= degree; ++n) {
            partitions[n] += partitions[n - k];
        }
    }
    for (std::size_t n = 0; n <= degree; ++n) {
        out.add_term(lead + Rational{static_cast<long>(n)}, EpsLaurent{Rational{partitions[n]}});
    }
    return out;
}

Evaluation qseries_eval(const QSeries &a, Complex tau, Complex eps, int p)
{
    if (!(tau.imag() > 0.0)) {
        throw std::domain_error("qseries_eval needs Im(tau) > 0");
    }
    const Complex two_pi_i{0.0, 2.0 * std::numbers::pi};
    Complex sum{0.0, 0.0};
    double magnitude = 0.0;
    double coeff_max = 0.0;
    for (const auto &[e, c] : a.terms()) {
        const Complex coeff = c.eval(eps, p);
        const Complex term = coeff * std::exp(two_pi_i * tau * to_double(e));
        sum += term;
        magnitude += std::abs(term) + std::abs(coeff) * std::numeric_limits<double>::epsilon();
        coeff_max = std::max(coeff_max, std::abs(coeff));
    }
    const double abs_q = std::exp(-2.0 * std::numbers::pi * tau.imag());
    double tail = 0.0;
    if (!a.is_zero()) {
        tail = 2.0 * abs_q < 1.0
                   ? 2.0 * coeff_max * std::pow(abs_q, to_double(a.cutoff())) / (1.0 - 2.0 * abs_q)
                   : std::numeric_limits<double>::infinity();
    }
    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * magnitude;
    return Evaluation{sum, tail + rounding};
}

} // namespace singlet
