// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "singlet/characters.hpp"
#include "singlet/fusion.hpp"
#include "singlet/modular.hpp"
#include "singlet/parallel.hpp"
#include "singlet/qdim.hpp"
#include "singlet/theta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace singlet;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;
};

// Worst residual over a batch of reports, plus the first failure if any. The
// residual is the one the report was judged by (absolute when |lhs| < 1e-6).
struct Tally
{
    bool pass = true;
    double worst = 0.0;
    int count = 0;
    std::string first_failure;

    void add(const ResidualReport &r)
    {
        ++count;
        worst = std::max(worst, std::abs(r.lhs) < 1e-6 ? r.abs_residual : r.rel_residual);
        if (!r.pass && pass) {
            pass = false;
            first_failure = r.id + " at " + r.point;
        }
    }

    std::string summary(const std::string &what) const
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %d points, worst residual %.2e", what.c_str(), count, worst);
        return pass ? buf : std::string(buf) + ", first failure " + first_failure;
    }
};

Tally law_on_grid(ThetaLaw law, double tol)
{
    const auto grid = default_theta_grid();
    const auto reports = parallel_map<ResidualReport>(grid.size(), [&](std::size_t k) {
        return verify_theta_law(law, grid[k], tol);
    });
    Tally t;
    for (const auto &r : reports) {
        t.add(r);
    }
    return t;
}

std::string join(const std::vector<std::string> &items, std::size_t limit = 3)
{
    std::string out;
    for (std::size_t k = 0; k < items.size() && k < limit; ++k) {
        out += (k ? "; " : "") + items[k];
    }
    if (items.size() > limit) {
        out += "; ...";
    }
    return out;
}

Outcome criterion_1()
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> re(-0.5, 0.5);
    std::uniform_real_distribution<double> im(0.5, 2.0);
    std::uniform_real_distribution<double> size(0.05, 0.4);
    Tally t;
    for (int k = 0; k < 10; ++k) {
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        const ModularPoint pt{Complex{re(rng), 0.2 * re(rng)}, Complex{re(rng), im(rng)}, Complex{sign * size(rng), 0.0}};
        t.add(verify_theta_law(ThetaLaw::T, pt, 1e-12));
    }
    return {t.pass, t.summary("T-law")};
}

Outcome criterion_2()
{
    const Tally t = law_on_grid(ThetaLaw::S_partial, 1e-8);
    return {t.pass, t.summary("S-law for the partial theta")};
}

Outcome criterion_3()
{
    const Tally s = law_on_grid(ThetaLaw::S_false, 1e-8);
    const Tally two = law_on_grid(ThetaLaw::two_partial, 1e-12);
    return {s.pass && two.pass, s.summary("false theta S-law") + "; " + two.summary("2P = F + theta2")};
}

Outcome criterion_4()
{
    const Tally u1 = law_on_grid(ThetaLaw::elliptic_u1, 1e-12);
    const Tally utau = law_on_grid(ThetaLaw::elliptic_utau, 1e-12);
    const Tally corr = law_on_grid(ThetaLaw::correction, 1e-8);
    return {u1.pass && utau.pass && corr.pass,
            u1.summary("u+1") + "; " + utau.summary("u+tau") + "; " + corr.summary("correction")};
}

Outcome criterion_5()
{
    int checked = 0;
    std::vector<std::string> failures;
    for (int p = 2; p <= 5; ++p) {
        const auto r = verify_char_methods(SingletParams(p), -3, 3, Rational{20});
        checked += r.checked;
        failures.insert(failures.end(), r.failures.begin(), r.failures.end());
    }
    return {failures.empty(), std::to_string(checked) + " labels, cutoff 20" +
                                  (failures.empty() ? "" : ", " + join(failures))};
}

Outcome criterion_6()
{
    int checked = 0;
    std::vector<std::string> failures;
    for (int p = 2; p <= 5; ++p) {
        const auto r = verify_char_relations(SingletParams(p), -3, 3, Rational{20});
        checked += r.checked;
        failures.insert(failures.end(), r.failures.begin(), r.failures.end());
    }
    return {failures.empty(), std::to_string(checked) + " identities incl. M(r,0) = 0 and s = p" +
                                  (failures.empty() ? "" : ", " + join(failures))};
}

Outcome criterion_7()
{
    struct Case
    {
        int p, r, s;
        double eps;
    };
    std::vector<Case> cases;
    for (int p = 2; p <= 3; ++p) {
        for (const auto &[r, s] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{0, 1}}) {
            for (const double eps : {-0.2, 0.2}) {
                cases.push_back({p, r, s, eps});
            }
        }
    }
    const Complex tau{0.0, 1.0};
    const auto reports = parallel_map<ResidualReport>(cases.size(), [&](std::size_t k) {
        const Case &c = cases[k];
        return verify_char_S(SingletParams(c.p), ModuleLabel::atyp(c.r, c.s), tau, Complex{c.eps, 0.0}, 1e-6);
    });
    Tally t;
    bool x_branches = true;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        t.add(reports[k]);
        const Case &c = cases[k];
        const double x = std::abs(x_correction(SingletParams(c.p), c.r, c.s, tau, Complex{c.eps, 0.0}).value);
        x_branches = x_branches && ((c.eps < 0.0) ? x == 0.0 : x > 0.0);
    }
    return {t.pass && x_branches,
            t.summary("atypical S") + (x_branches ? ", X = 0 iff Re eps < 0" : ", X branch pattern wrong")};
}

Outcome criterion_8()
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> den(2, 9);
    const std::vector<Complex> taus{{0.0, 1.0}, {0.0, 2.0}, {0.3, 0.8}};
    const std::vector<double> epss{-0.3, -0.2, -0.1, 0.1, 0.2, 0.3};
    std::vector<std::pair<int, Rational>> points;
    for (int k = 0; k < 6; ++k) {
        const int p = 2 + k % 2;
        const int d = den(rng);
        Rational m = Rational{p - 1} + make_rational(std::uniform_int_distribution<int>(-3 * d, 3 * d)(rng), d);
        if (is_integer(m)) {
            m += make_rational(1, 2);
        }
        points.emplace_back(p, m);
    }
    const auto reports = parallel_map<ResidualReport>(points.size(), [&](std::size_t k) {
        return verify_char_S(SingletParams(points[k].first), ModuleLabel::typ(points[k].second), taus[k % 3],
                             Complex{epss[k], 0.0}, 1e-8);
    });
    Tally t;
    for (const auto &r : reports) {
        t.add(r);
    }
    return {t.pass, t.summary("typical S")};
}

Outcome criterion_9()
{
    const std::vector<std::tuple<double, Complex, Complex>> points{
        {0.0, {0.0, 1.0}, {-0.2, 0.0}}, {0.3, {0.0, 2.0}, {-0.3, 0.0}}, {-0.7, {0.3, 0.8}, {-0.4, 0.0}}};
    const auto reports = parallel_map<ResidualReport>(points.size(), [&](std::size_t k) {
        const auto &[c, tau, eps] = points[k];
        return fourier_inversion_check(SingletParams(2), c, eps, tau, 1e-8);
    });
    Tally t;
    for (const auto &r : reports) {
        t.add(r);
    }
    return {t.pass, t.summary("nested quadrature")};
}

Outcome criterion_10()
{
    int checked = 0;
    std::vector<std::string> failures;
    for (int p = 2; p <= 5; ++p) {
        for (const auto &r : {check_ring_axioms(SingletParams(p), 100, 10 + p), check_overflow_boundaries(SingletParams(p))}) {
            checked += r.checked;
            failures.insert(failures.end(), r.failures.begin(), r.failures.end());
        }
    }
    return {failures.empty(), std::to_string(checked) + " exact checks over p = 2..5" +
                                  (failures.empty() ? "" : ", " + join(failures))};
}

Outcome criterion_11()
{
    bool pass = true;
    std::ostringstream detail;
    for (int p = 2; p <= 5; ++p) {
        const SingletParams params(p);
        const auto h = verify_homomorphism(params, 200, 11 + p);
        bool values = true;
        for (int r = -3; r <= 3; ++r) {
            for (int s = 1; s <= p; ++s) {
                values = values && qdim_atypical(params, r, s).at_one() == s;
            }
        }
        for (const Rational &m : {make_rational(1, 2), make_rational(-7, 3), make_rational(3, 10)}) {
            values = values && qdim_typical(params, m).at_one() == p;
        }
        pass = pass && h.pass() && values;
        detail << (p > 2 ? "; " : "") << "p=" << p << ": " << h.pairs << " pairs, rank " << h.rank << "/"
               << h.basis_size << (values ? "" : ", t=1 values wrong") << (h.failures.empty() ? "" : ", " + join(h.failures));
    }
    return {pass, detail.str()};
}

Outcome criterion_12()
{
    std::vector<std::pair<int, ModuleLabel>> labels;
    for (int p = 2; p <= 3; ++p) {
        for (int r = -2; r <= 2; ++r) {
            for (int s = 1; s <= p; ++s) {
                labels.emplace_back(p, ModuleLabel::atyp(r, s));
            }
        }
    }
    const auto reports = parallel_map<QdimLimitReport>(labels.size(), [&](std::size_t k) {
        return qdim_numeric_limit(SingletParams(labels[k].first), labels[k].second, Complex{-0.2, 0.0}, {0.05}, 1e-3);
    });
    int passed = 0;
    double worst = 0.0;
    std::string worst_label;
    for (std::size_t k = 0; k < reports.size(); ++k) {
        passed += reports[k].pass ? 1 : 0;
        if (reports[k].deviation > worst) {
            worst = reports[k].deviation;
            worst_label = "p=" + std::to_string(labels[k].first) + " " + reports[k].label;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%d/%zu labels within 1e-3 at tau=0.05i, worst rel deviation %.2e (%s)", passed,
                  reports.size(), worst, worst_label.c_str());
    return {passed == static_cast<int>(reports.size()), buf};
}

Outcome criterion_13()
{
    const SingletParams params(2);
    const RingElem m12 = RingElem::atyp(1, 2);
    const RingElem product = fuse(params, m12, m12);
    const bool ring = product == RingElem::atyp(0, 1) + RingElem::atyp(1, 1, 2) + RingElem::atyp(2, 1);
    const EpsLaurent expected =
        EpsLaurent::monomial(Rational{4}) + EpsLaurent{Rational{2}} + EpsLaurent::monomial(Rational{-4});
    const bool qdim = qdim_elem(params, product) == expected && qdim_atypical(params, 1, 2) * qdim_atypical(params, 1, 2) == expected;
    return {ring && qdim, "M(1,2) x M(1,2) = " + to_string(product) + (qdim ? ", qdim t^4 + 2 + t^-4" : ", qdim mismatch")};
}

} // namespace

int main()
{
    struct Criterion
    {
        int id;
        const char *name;
        double budget_seconds; // 0: no time limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "T-law", 1.0, criterion_1},
        {2, "partial theta S-law", 60.0, criterion_2},
        {3, "false theta S-law and 2P identity", 0.0, criterion_3},
        {4, "elliptic and correction laws", 0.0, criterion_4},
        {5, "character constructions agree", 30.0, criterion_5},
        {6, "character relations", 0.0, criterion_6},
        {7, "atypical character S-transformation", 120.0, criterion_7},
        {8, "typical character S-transformation", 0.0, criterion_8},
        {9, "Fourier inversion", 0.0, criterion_9},
        {10, "Verlinde ring axioms", 10.0, criterion_10},
        {11, "quantum dimension homomorphism", 0.0, criterion_11},
        {12, "numeric quantum dimension limit", 0.0, criterion_12},
        {13, "worked instance", 0.0, criterion_13},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.budget_seconds == 0.0 || seconds < c.budget_seconds;
        const bool pass = outcome.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s %2d %s (%.2f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    in_time ? "" : ", over budget", outcome.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
