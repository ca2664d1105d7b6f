#pragma once

// Regularized quantum dimensions, exact in t = exp(pi eps / sqrt(2p)).

#include "singlet/characters.hpp"
#include "singlet/fusion.hpp"
#include "singlet/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace singlet
{

/// t^{2m - (2p-2)} sum_{l=-p+1, step 2}^{p-1} t^{-2l}
EpsLaurent qdim_typical(const SingletParams &params, const Rational &m);

/// t^{-2p(r-1)} sum_{l=-s+1, step 2}^{s-1} t^{-2l}; zero for s = 0. Throws for s < 0.
EpsLaurent qdim_atypical(const SingletParams &params, int r, int s);

EpsLaurent qdim_elem(const SingletParams &params, const RingElem &e);

struct HomomorphismReport
{
    int pairs = 0;
    int basis_size = 0;
    int rank = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty() && rank == basis_size; }
};

/// qdim(a x b) = qdim(a) qdim(b) on n_pairs seeded random pairs, plus the rank over Q of
/// the exponent-support matrix of every basis element met in the trials.
HomomorphismReport verify_homomorphism(const SingletParams &params, int n_pairs, std::uint64_t seed);

/// Rank over Q of the coefficient matrix of the given Laurent polynomials.
int laurent_rank(const std::vector<EpsLaurent> &polys);

struct QdimLimitSample
{
    double t = 0.0;
    Complex ratio{0.0, 0.0};
    double rel_deviation = 0.0;
};

struct QdimLimitReport
{
    std::string label;
    Complex closed_form{0.0, 0.0};
    std::vector<QdimLimitSample> samples;
    /// Deviation at the smallest t.
    double deviation = 0.0;
    /// Polynomial extrapolation of the ratio to t = 0 and its relative deviation.
    Complex extrapolated{0.0, 0.0};
    double extrapolated_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// ch[V](it)/ch[M_{1,1}](it) for each t against laurent_eval(qdim(V), eps). Needs Re eps < 0.
/// pass iff the relative deviation at the smallest t is within `tolerance`.
QdimLimitReport qdim_numeric_limit(const SingletParams &params, const ModuleLabel &label, Complex eps,
                                   const std::vector<double> &t_values, double tolerance = 1e-3);

} // namespace singlet
