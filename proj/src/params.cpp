#include "singlet/params.hpp"

#include <cmath>
#include <stdexcept>

namespace singlet
{

SingletParams::SingletParams(int p) : p_(p)
{
    if (p < 2) {
        throw std::invalid_argument("singlet parameter p must be >= 2, got " + std::to_string(p));
    }
}

Rational SingletParams::central_charge() const
{
    return Rational{1} - make_rational(6 * (p_ - 1) * (p_ - 1), p_);
}

double SingletParams::sqrt_2p() const
{
    return std::sqrt(2.0 * p_);
}

double SingletParams::alpha_plus() const
{
    return sqrt_2p();
}

double SingletParams::alpha_minus() const
{
    return -2.0 / sqrt_2p();
}

double SingletParams::alpha_zero() const
{
    return (2.0 * p_ - 2.0) / sqrt_2p();
}

double Charge::value(const SingletParams &params) const
{
    return to_double(m) / params.sqrt_2p();
}

std::string to_string(const AtypLabel &label)
{
    return "M(" + std::to_string(label.r) + "," + std::to_string(label.s) + ")";
}

Charge alpha_rs(const SingletParams &params, int r, int s)
{
    const int p = params.p();
    return Charge{Rational{(1 - r) * p + (s - 1)}};
}

Charge beta_plus(const SingletParams &params, int r, int s)
{
    return Charge{Rational{(r - 1) * params.p() - s}};
}

Charge beta_minus(const SingletParams &params, int r, int s)
{
    return Charge{Rational{(r - 1) * params.p() + s}};
}

AtypLabel normalize(const SingletParams &params, AtypLabel label)
{
    const int p = params.p();
    // floor((s-1)/p) shifts of (r,s) -> (r+1, s+p) or back.
    const int shift = (label.s - 1 >= 0) ? (label.s - 1) / p : -((p - label.s) / p);
    return AtypLabel{label.r - shift, label.s - shift * p};
}

std::optional<AtypLabel> atyp_decompose(const SingletParams &params, const Charge &charge)
{
    // m = (1-r)p + (s-1) with 0 <= s-1 < p: s-1 = m mod p, 1-r = floor(m/p).
    const Rational p{params.p()};
    const Rational quotient = charge.m / p;
    const mpz_class shift = floor(quotient);
    const Rational rest = charge.m - Rational{shift} * p; // s - 1, in [0, p)
    if (!is_integer(rest)) {
        return std::nullopt;
    }
    const int r = 1 - static_cast<int>(shift.get_si());
    const int s = static_cast<int>(to_int64(rest)) + 1;
    return AtypLabel{r, s};
}

Rational conformal_weight(const SingletParams &params, int m, int n)
{
    const int p = params.p();
    const int a = n * p - m;
    return make_rational(a * a - (p - 1) * (p - 1), 4 * p);
}

} // namespace singlet
