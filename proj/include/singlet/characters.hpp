#pragma once

// Characters of W(2,2p-1)-modules: exact q-series with t-weights
// (t = exp(pi eps / sqrt(2p))) and numeric evaluation.
//
// A Fock character with m-coordinate m is
//   ch[F^eps] = t^{2o} q^{o^2/4p} / eta(tau),   o = m - p + 1,
// and every atypical character is an alternating sum of such terms.

#include "singlet/evaluation.hpp"
#include "singlet/params.hpp"
#include "singlet/qseries.hpp"

#include <string>
#include <vector>

namespace singlet
{

class ModuleLabel
{
public:
    enum class Kind
    {
        typical,
        atypical,
    };

    static ModuleLabel typ(const Rational &m) { return ModuleLabel{Kind::typical, m, {}}; }
    static ModuleLabel atyp(int r, int s) { return ModuleLabel{Kind::atypical, Rational{0}, AtypLabel{r, s}}; }

    Kind kind() const { return kind_; }
    bool is_typical() const { return kind_ == Kind::typical; }
    const Rational &m() const { return m_; }
    const AtypLabel &label() const { return label_; }

    friend bool operator==(const ModuleLabel &, const ModuleLabel &) = default;

private:
    ModuleLabel(Kind kind, Rational m, AtypLabel label) : kind_(kind), m_(std::move(m)), label_(label) {}

    Kind kind_;
    Rational m_;
    AtypLabel label_;
};

/// "F(m)" or "M(r,s)".
std::string to_string(const ModuleLabel &label);

enum class CharMethod
{
    felder,
    false_theta,
    direct,
};

/// Fock character e^{2 pi eps (lambda - alpha_0/2)} q^{(lambda-alpha_0/2)^2/2}/eta, exact to `cutoff`.
QSeries typical_char_series(const SingletParams &params, const Rational &m, const Rational &cutoff);

/// ch[M_{r,s}] to `cutoff`. The felder method carries t-weights and accepts any
/// integer s (s > p gives the virtual characters, s = 0 gives zero). The other
/// two methods are t-free and need 1 <= s <= p (std::invalid_argument otherwise).
QSeries atypical_char_series(const SingletParams &params, int r, int s, const Rational &cutoff,
                             CharMethod method = CharMethod::felder);

/// sum_{n in Z} sgn(n) q^{p (n + (p-1)/2p)^2} / eta with sgn(0) = +1.
QSeries vacuum_char_series(const SingletParams &params, const Rational &cutoff);

QSeries char_series(const SingletParams &params, const ModuleLabel &label, const Rational &cutoff);

/// Closed-form numeric character. Atypical labels go through
///   ch[F^eps_{alpha_0/2 - beta^-}] P_{alpha_+ eps}(-alpha_+ beta^- tau; alpha_+^2 tau) - (same with beta^+).
Evaluation char_eval(const SingletParams &params, const ModuleLabel &label, Complex tau, Complex eps,
                     double tol = 1e-12);

struct CharRelationReport
{
    int checked = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

/// Exact checks, with t-weights, for r in [r_min, r_max]:
///   F_{alpha_{r,s}} = M_{r,s} + M_{r+1,p-s} (1 <= s <= p),
///   M_{r,s} = M_{r-1,s-p} + M_{r,2p-s} + M_{r+1,s-p} (p < s <= 2p-1),
///   M_{r,0} = 0 and M_{r,p} = F_{alpha_{r,p}}.
CharRelationReport verify_char_relations(const SingletParams &params, int r_min, int r_max, const Rational &cutoff);

/// Exact agreement of the felder (at t = 1), false_theta and direct series.
CharRelationReport verify_char_methods(const SingletParams &params, int r_min, int r_max, const Rational &cutoff);

} // namespace singlet
