#pragma once

#include "singlet/rational.hpp"

#include <complex>
#include <map>

namespace singlet
{

/// Finite sum  sum_m c_m t^m  with rational exponents and coefficients, where
/// t = exp(pi * eps / sqrt(2p)). Regularization factors and quantum dimensions
/// live here. Zero coefficients are never stored.
class EpsLaurent
{
public:
    using Terms = std::map<Rational, Rational>;

    EpsLaurent() = default;
    /// Constant c (zero-free).
    explicit EpsLaurent(const Rational &c);

    static EpsLaurent monomial(const Rational &exponent, const Rational &coeff = Rational{1});
    static EpsLaurent one() { return monomial(Rational{0}); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of t^exponent (zero if absent).
    Rational coeff(const Rational &exponent) const;

    /// Value at eps = 0, i.e. t = 1: the sum of the coefficients.
    Rational at_one() const;

    /// sum_m c_m exp(pi eps m / sqrt(2p)) in double precision.
    std::complex<double> eval(std::complex<double> eps, int p) const;

    /// Multiplies every exponent by k (t -> t^k).
    EpsLaurent scale_exponents(const Rational &k) const;

    EpsLaurent &operator+=(const EpsLaurent &other);
    EpsLaurent &operator-=(const EpsLaurent &other);
    EpsLaurent &operator*=(const Rational &c);

    friend EpsLaurent operator+(EpsLaurent a, const EpsLaurent &b) { return a += b; }
    friend EpsLaurent operator-(EpsLaurent a, const EpsLaurent &b) { return a -= b; }
    friend EpsLaurent operator-(EpsLaurent a) { return a *= Rational{-1}; }
    friend EpsLaurent operator*(EpsLaurent a, const Rational &c) { return a *= c; }
    friend EpsLaurent operator*(const Rational &c, EpsLaurent a) { return a *= c; }
    friend EpsLaurent operator*(const EpsLaurent &a, const EpsLaurent &b) { return laurent_mul(a, b); }

    friend bool operator==(const EpsLaurent &, const EpsLaurent &) = default;

    /// Exponentwise convolution.
    friend EpsLaurent laurent_mul(const EpsLaurent &a, const EpsLaurent &b);

private:
    void add_term(const Rational &exponent, const Rational &coeff);

    Terms terms_;
};

std::complex<double> laurent_eval(const EpsLaurent &a, std::complex<double> eps, int p);

} // namespace singlet
