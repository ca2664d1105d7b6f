#include "singlet/qdim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace singlet
{

namespace
{

// sum_{l=-n+1, step 2}^{n-1} t^{-2l}
EpsLaurent symmetric_block(int n)
{
    EpsLaurent out;
    for (int l = -n + 1; l <= n - 1; l += 2) {
        out += EpsLaurent::monomial(Rational{-2 * l});
    }
    return out;
}

} // namespace

EpsLaurent qdim_typical(const SingletParams &params, const Rational &m)
{
    const int p = params.p();
    return laurent_mul(EpsLaurent::monomial(2 * m - Rational{2 * p - 2}), symmetric_block(p));
}

EpsLaurent qdim_atypical(const SingletParams &params, int r, int s)
{
    if (s < 0) {
        throw std::invalid_argument("qdim_atypical needs s >= 0, got " + std::to_string(s));
    }
    return laurent_mul(EpsLaurent::monomial(Rational{-2 * params.p() * (r - 1)}), symmetric_block(s));
}

EpsLaurent qdim_elem(const SingletParams &params, const RingElem &e)
{
    EpsLaurent out;
    for (const auto &[m, c] : e.typ_terms()) {
        out += qdim_typical(params, m) * Rational{c};
    }
    for (const auto &[label, c] : e.atyp_terms()) {
        out += qdim_atypical(params, label.r, label.s) * Rational{c};
    }
    return out;
}

int laurent_rank(const std::vector<EpsLaurent> &polys)
{
    std::set<Rational> exponents;
    for (const auto &poly : polys) {
        for (const auto &[e, c] : poly.terms()) {
            exponents.insert(e);
        }
    }
    const std::vector<Rational> columns(exponents.begin(), exponents.end());
    std::vector<std::vector<Rational>> rows;
    for (const auto &poly : polys) {
        std::vector<Rational> row;
        row.reserve(columns.size());
        for (const auto &e : columns) {
            row.push_back(poly.coeff(e));
        }
        rows.push_back(std::move(row));
    }

    int rank = 0;
    for (std::size_t col = 0; col < columns.size() && rank < static_cast<int>(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto &row) { return row[col] != 0; });
        if (pivot == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + rank, pivot);
        const auto &pivot_row = rows[rank];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) {
                continue;
            }
            const Rational factor = rows[i][col] / pivot_row[col];
            for (std::size_t j = col; j < columns.size(); ++j) {
                rows[i][j] -= factor * pivot_row[j];
            }
        }
        ++rank;
    }
    return rank;
}

HomomorphismReport verify_homomorphism(const SingletParams &params, int n_pairs, std::uint64_t seed)
{
    HomomorphismReport report;
    std::mt19937_64 rng(seed);
    std::set<AtypLabel> atyp_basis;
    std::set<Rational> typ_basis;
    auto record = [&](const RingElem &e) {
        for (const auto &[label, c] : e.atyp_terms()) {
            atyp_basis.insert(label);
        }
        for (const auto &[m, c] : e.typ_terms()) {
            typ_basis.insert(m);
        }
    };

    for (int i = 0; i < n_pairs; ++i) {
        const RingElem a = random_elem(params, rng);
        const RingElem b = random_elem(params, rng);
        const RingElem ab = fuse(params, a, b);
        record(a);
        record(b);
        record(ab);
        ++report.pairs;
        if (qdim_elem(params, ab) != laurent_mul(qdim_elem(params, a), qdim_elem(params, b))) {
            report.failures.push_back("p=" + std::to_string(params.p()) + " seed=" + std::to_string(seed) +
                                      " pair=" + std::to_string(i) + ": qdim(" + to_string(a) + " x " + to_string(b) +
                                      ") != qdim(a) qdim(b)");
        }
    }

    std::vector<EpsLaurent> images;
    for (const auto &label : atyp_basis) {
        images.push_back(qdim_atypical(params, label.r, label.s));
    }
    for (const auto &m : typ_basis) {
        images.push_back(qdim_typical(params, m));
    }
    report.basis_size = static_cast<int>(images.size());
    report.rank = laurent_rank(images);
    return report;
}

QdimLimitReport qdim_numeric_limit(const SingletParams &params, const ModuleLabel &label, Complex eps,
                                   const std::vector<double> &t_values, double tolerance)
{
    if (!(eps.real() < 0.0)) {
        throw std::domain_error("the quantum-dimension limit needs Re(eps) < 0");
    }
    if (t_values.empty()) {
        throw std::invalid_argument("qdim_numeric_limit needs at least one t value");
    }
    QdimLimitReport report;
    report.label = to_string(label);
    report.tolerance = tolerance;
    const EpsLaurent closed = label.is_typical() ? qdim_typical(params, label.m())
                                                 : qdim_atypical(params, label.label().r, label.label().s);
    report.closed_form = laurent_eval(closed, eps, params.p());
    const ModuleLabel vacuum = ModuleLabel::atyp(1, 1);

    std::vector<double> ts = t_values;
    std::sort(ts.begin(), ts.end(), std::greater<>());
    for (const double t : ts) {
        if (!(t > 0.0)) {
            throw std::domain_error("t values must be positive");
        }
        const Complex tau{0.0, t};
        const Complex numerator = char_eval(params, label, tau, eps).value;
        const Complex denominator = char_eval(params, vacuum, tau, eps).value;
        if (!std::isfinite(std::abs(numerator)) || !std::isfinite(std::abs(denominator)) ||
            std::abs(denominator) == 0.0) {
            throw std::range_error("character ratio under- or overflows at t = " + std::to_string(t));
        }
        const Complex ratio = numerator / denominator;
        report.samples.push_back({t, ratio, std::abs(ratio - report.closed_form) / std::abs(report.closed_form)});
    }
    report.deviation = report.samples.back().rel_deviation;

    // Neville's scheme for the interpolating polynomial at t = 0.
    std::vector<Complex> table;
    for (const auto &sample : report.samples) {
        table.push_back(sample.ratio);
    }
    const std::size_t n = table.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double ti = report.samples[i].t;
            const double tj = report.samples[i + level].t;
            table[i] = (tj * table[i] - ti * table[i + 1]) / (tj - ti);
        }
    }
    report.extrapolated = table[0];
    report.extrapolated_deviation = std::abs(report.extrapolated - report.closed_form) / std::abs(report.closed_form);
    report.pass = report.deviation <= tolerance;
    return report;
}

} // namespace singlet
