#include "singlet/laurent.hpp"

#include <cmath>
#include <numbers>

namespace singlet
{

EpsLaurent::EpsLaurent(const Rational &c)
{
    add_term(Rational{0}, c);
}

EpsLaurent EpsLaurent::monomial(const Rational &exponent, const Rational &coeff)
{
    EpsLaurent out;
    out.add_term(exponent, coeff);
    return out;
}

Rational EpsLaurent::coeff(const Rational &exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational{0} : it->second;
}

Rational EpsLaurent::at_one() const
{
    Rational sum{0};
    for (const auto &[e, c] : terms_) {
        sum += c;
    }
    return sum;
}

std::complex<double> EpsLaurent::eval(std::complex<double> eps, int p) const
{
    const double scale = std::numbers::pi / std::sqrt(2.0 * p);
    std::complex<double> sum{0.0, 0.0};
    for (const auto &[e, c] : terms_) {
        sum += to_double(c) * std::exp(scale * to_double(e) * eps);
    }
    return sum;
}

EpsLaurent EpsLaurent::scale_exponents(const Rational &k) const
{
    EpsLaurent out;
    for (const auto &[e, c] : terms_) {
        out.add_term(e * k, c);
    }
    return out;
}

void EpsLaurent::add_term(const Rational &exponent, const Rational &coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

EpsLaurent &EpsLaurent::operator+=(const EpsLaurent &other)
{
    for (const auto &[e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

EpsLaurent &EpsLaurent::operator-=(const EpsLaurent &other)
{
    for (const auto &[e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

EpsLaurent &EpsLaurent::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

EpsLaurent laurent_mul(const EpsLaurent &a, const EpsLaurent &b)
{
    EpsLaurent out;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

std::complex<double> laurent_eval(const EpsLaurent &a, std::complex<double> eps, int p)
{
    return a.eval(eps, p);
}

} // namespace singlet
