#pragma once

// The Verlinde algebra of characters: integer combinations of Typ(m), m not an
// integer, and Atyp(r,s) = M_{r,s}, 1 <= s <= p.

#include "singlet/params.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace singlet
{

class RingElem
{
public:
    using TypTerms = std::map<Rational, std::int64_t>;
    using AtypTerms = std::map<AtypLabel, std::int64_t>;

    RingElem() = default;

    static RingElem typ(const Rational &m, std::int64_t c = 1);
    static RingElem atyp(int r, int s, std::int64_t c = 1);

    /// Raw accumulation; no canonicalization happens here.
    void add_typ(const Rational &m, std::int64_t c);
    void add_atyp(AtypLabel label, std::int64_t c);

    const TypTerms &typ_terms() const { return typ_; }
    const AtypTerms &atyp_terms() const { return atyp_; }
    bool is_zero() const { return typ_.empty() && atyp_.empty(); }

    RingElem &operator+=(const RingElem &other);
    RingElem &operator-=(const RingElem &other);
    friend RingElem operator+(RingElem a, const RingElem &b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem &b) { return a -= b; }
    friend RingElem operator*(std::int64_t k, const RingElem &a);

    friend bool operator==(const RingElem &, const RingElem &) = default;

private:
    TypTerms typ_;
    AtypTerms atyp_;
};

/// Readable form such as "M(0,1) + 2*M(1,1) + F(1/2)".
std::string to_string(const RingElem &e);

/// True if no Typ key is an integer and every s lies in [1, p].
bool is_canonical(const SingletParams &params, const RingElem &e);

/// Typ(m), m an integer, becomes M_{r,s} + M_{r+1,p-s} with alpha_{r,s} = m (M_{.,0} dropped);
/// Atyp(r,s) with p < s <= 2p-1 becomes M_{r-1,s-p} + M_{r,2p-s} + M_{r+1,s-p}; Atyp(r,0) is dropped.
/// Other s values throw std::invalid_argument. Idempotent.
RingElem canonicalize(const SingletParams &params, const RingElem &e);

/// Product of canonical elements; the result is canonical.
RingElem fuse(const SingletParams &params, const RingElem &a, const RingElem &b);

/// Exponents {-s+1, -s+3, ..., s-1} of sin(sx)/sin(x) = sum_l e^{ixl}. Throws for s <= 0.
std::vector<int> sin_ratio_coeffs(int s);

/// Checks sin(x) * sum_l e^{ixl} = sin(sx) as Laurent polynomials in e^{ix}.
bool sin_ratio_identity_holds(int s);

/// Coefficients c_k of e^{-ixk} in
///   sum_{l'=0}^{order-1} sum_{l=|s-s'|+1, step 2}^{s+s'-1} (e^{-ixl} - e^{ixl}) e^{-ipx(2l'+1)},
/// the expansion of -sin(sx)sin(s'x)/(sin(x)sin(px)) for Im(x) < 0.
std::map<int, std::int64_t> double_sin_expansion(int s, int s_prime, int p, int order);

/// -sin(sx)sin(s'x)/(sin(x)sin(px)) evaluated directly.
std::complex<double> double_sin_lhs(int s, int s_prime, int p, std::complex<double> x);

/// sum_k c_k e^{-ixk}. Throws std::domain_error unless Im(x) < 0.
std::complex<double> double_sin_series_eval(const std::map<int, std::int64_t> &coeffs, std::complex<double> x);

/// Felder offsets of an atypical element: M_{r,s} contributes +1 at (2+2n-r)p - s and -1 at
/// (2+2n-r)p + s for n >= 0. Offsets above `bound` are dropped.
std::map<int, std::int64_t> felder_offsets(const SingletParams &params, const RingElem &e, int bound);

struct RingAxiomReport
{
    int checked = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

/// Random canonical element with 1..3 terms, r in [-3,3], typical m with denominators 2..5.
RingElem random_elem(const SingletParams &params, std::mt19937_64 &rng);

/// Commutativity, associativity, unit law, nonnegative basis structure constants and the
/// consistency identity (M_{r,s} + M_{r-1,p-s}) x F_mu = sum_{l=0}^{p-1} F_{alpha_{r-1,p-s-2l} + mu}
/// over n_trials seeded trials.
RingAxiomReport check_ring_axioms(const SingletParams &params, int n_trials, std::uint64_t seed);

/// Products M_{r,s} x M_{r',s'} with s + s' - 1 in {p, p+1, 2p-1}: commutative, canonical,
/// nonnegative and equal to the double-sine delta pattern.
RingAxiomReport check_overflow_boundaries(const SingletParams &params);

} // namespace singlet
