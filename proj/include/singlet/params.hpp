#pragma once

// Parameters of the singlet algebra W(2,2p-1) and its charge lattice.
//
// Every charge in play is a rational multiple of 1/sqrt(2p): alpha_+ = sqrt(2p),
// alpha_- = -sqrt(2/p) = -2/sqrt(2p). A charge is therefore stored as the single
// rational "m-coordinate" m, meaning lambda = m / sqrt(2p).

#include "singlet/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace singlet
{

class SingletParams
{
public:
    /// Throws std::invalid_argument unless p >= 2.
    explicit SingletParams(int p);

    int p() const { return p_; }

    Rational alpha_plus_m() const { return Rational{2 * p_}; }
    Rational alpha_minus_m() const { return Rational{-2}; }
    Rational alpha_zero_m() const { return Rational{2 * p_ - 2}; }

    /// c_{p,1} = 1 - 6 (p-1)^2 / p
    Rational central_charge() const;

    double sqrt_2p() const;
    double alpha_plus() const;
    double alpha_minus() const;
    double alpha_zero() const;

    friend bool operator==(const SingletParams &, const SingletParams &) = default;

private:
    int p_;
};

struct Charge
{
    Rational m;

    /// Atypical iff the charge lies on the dual lattice Z * (1/sqrt(2p)).
    bool is_atypical() const { return is_integer(m); }
    double value(const SingletParams &params) const;
    /// lambda - alpha_0/2 in m-coordinates.
    Rational offset(const SingletParams &params) const { return m - Rational{params.p() - 1}; }

    friend bool operator==(const Charge &, const Charge &) = default;
};

struct AtypLabel
{
    int r = 1;
    int s = 1;

    friend auto operator<=>(const AtypLabel &, const AtypLabel &) = default;
};

std::string to_string(const AtypLabel &label);

/// alpha_{r,s}: m = (1-r)p + (s-1). Defined for every integer s.
Charge alpha_rs(const SingletParams &params, int r, int s);

/// beta^+_{r,s} = ((r-1)alpha_+ + s alpha_-)/2, m = (r-1)p - s.
Charge beta_plus(const SingletParams &params, int r, int s);
/// beta^-_{r,s} = ((r-1)alpha_+ - s alpha_-)/2, m = (r-1)p + s.
Charge beta_minus(const SingletParams &params, int r, int s);

/// Uses alpha_{r,s} = alpha_{r+1,s+p} to bring s into [1, p].
AtypLabel normalize(const SingletParams &params, AtypLabel label);

/// The (r,s), 1 <= s <= p, with alpha_{r,s} = charge; nullopt for charges off the dual lattice.
std::optional<AtypLabel> atyp_decompose(const SingletParams &params, const Charge &charge);

/// h_{m,n} = ((np - m)^2 - (p-1)^2) / 4p
Rational conformal_weight(const SingletParams &params, int m, int n);

} // namespace singlet
