#include "singlet/suites.hpp"

#include "singlet/parallel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace singlet
{

using nlohmann::json;

namespace
{

json exact_line(const std::string &id, int checked, const std::vector<std::string> &failures)
{
    return {{"id", id}, {"checked", checked}, {"failures", failures}, {"pass", failures.empty()}};
}

json tagged(json line, std::string_view suite)
{
    line["suite"] = suite;
    return line;
}

// A numeric check that cannot reach its tolerance (e.g. quadrature refinement
// exhausted) becomes a failing line instead of aborting the suite.
template <class Check>
json guarded(const std::string &id, const std::string &subject, Check check)
{
    try {
        return to_json(check());
    } catch (const std::invalid_argument &) {
        throw;
    } catch (const std::exception &e) {
        return {{"id", id}, {"point", subject}, {"error", e.what()}, {"pass", false}};
    }
}

void add_lines(SuiteResult &out, std::string_view suite, const std::vector<json> &lines)
{
    for (const auto &line : lines) {
        out.add(tagged(line, suite));
    }
}

SuiteResult theta_suite(const SuiteConfig &config)
{
    const std::vector<std::pair<ThetaLaw, double>> laws{
        {ThetaLaw::T, 1e-2},
        {ThetaLaw::elliptic_u1, 1e-2},
        {ThetaLaw::elliptic_utau, 1e-2},
        {ThetaLaw::two_partial, 1e-2},
        {ThetaLaw::theta2_S, 1e-2},
        {ThetaLaw::theta4_reflection, 1e-2},
        {ThetaLaw::theta4_shift, 1e-2},
        {ThetaLaw::S_partial, 1e2},
        {ThetaLaw::S_false, 1e2},
        {ThetaLaw::correction, 1e2},
    };
    const auto grid = default_theta_grid();
    const std::size_t n = laws.size() * grid.size();
    const auto lines = parallel_map<json>(n, [&](std::size_t k) {
        const auto &[law, scale] = laws[k / grid.size()];
        const ModularPoint &pt = grid[k % grid.size()];
        return guarded(std::string(to_string(law)), describe(pt),
                       [&] { return verify_theta_law(law, pt, config.tol * scale); });
    });
    SuiteResult out;
    add_lines(out, "theta", lines);
    return out;
}

SuiteResult chars_suite(const SuiteConfig &config)
{
    const SingletParams params(config.p);
    SuiteResult out;
    const auto methods = verify_char_methods(params, -3, 3, config.cutoff);
    out.add(tagged(exact_line("char_methods", methods.checked, methods.failures), "chars"));
    const auto relations = verify_char_relations(params, -3, 3, config.cutoff);
    out.add(tagged(exact_line("char_relations", relations.checked, relations.failures), "chars"));

    std::vector<std::string> vacuum_failures;
    if (vacuum_char_series(params, config.cutoff) !=
        atypical_char_series(params, 1, 1, config.cutoff, CharMethod::false_theta)) {
        vacuum_failures.push_back("sgn-sum vacuum form differs from M(1,1)");
    }
    out.add(tagged(exact_line("vacuum_form", 1, vacuum_failures), "chars"));

    // Closed-form evaluation against the exact series.
    for (const ModuleLabel &label :
         {ModuleLabel::atyp(1, 1), ModuleLabel::atyp(2, 1), ModuleLabel::atyp(0, params.p()),
          ModuleLabel::typ(make_rational(1, 2))}) {
        const Evaluation closed = char_eval(params, label, config.tau, config.eps);
        const Evaluation series = qseries_eval(char_series(params, label, config.cutoff), config.tau, config.eps,
                                               params.p());
        const double residual = std::abs(closed.value - series.value);
        const double bound = closed.error + series.error;
        out.add({{"suite", "chars"},
                 {"id", "char_numeric"},
                 {"label", to_string(label)},
                 {"closed_form", format_complex(closed.value)},
                 {"series", format_complex(series.value)},
                 {"abs_residual", format_double(residual)},
                 {"bound", format_double(bound)},
                 {"pass", residual <= bound}});
    }
    return out;
}

SuiteResult modular_suite(const SuiteConfig &config)
{
    const SingletParams params(config.p);
    const double eps_size = std::abs(config.eps.real());
    if (eps_size == 0.0) {
        throw std::invalid_argument("the modular suite needs Re(eps) != 0");
    }

    struct Task
    {
        enum Kind
        {
            char_s,
            fourier,
            exchange
        } kind;
        ModuleLabel label;
        Complex tau;
        Complex eps;
        double c;
        double tol;
    };
    std::vector<Task> tasks;
    const std::vector<std::pair<int, int>> atyp{{1, 1}, {1, 2}, {2, 1}, {0, 1}};
    for (const auto &[r, s] : atyp) {
        if (s > params.p()) {
            continue;
        }
        for (const double sign : {-1.0, 1.0}) {
            tasks.push_back({Task::char_s, ModuleLabel::atyp(r, s), config.tau, Complex{sign * eps_size, 0.0}, 0.0,
                             config.tol * 1e4});
        }
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> den(2, 9);
    const std::vector<Complex> taus{{0.0, 1.0}, {0.0, 2.0}, {0.3, 0.8}};
    const std::vector<double> epss{-0.3, -0.2, -0.1, 0.1, 0.2, 0.3};
    for (int k = 0; k < 6; ++k) {
        // Offsets |m - p + 1| <= 3 keep the character well above the quadrature floor.
        const int d = den(rng);
        Rational m = Rational{params.p() - 1} + make_rational(std::uniform_int_distribution<int>(-3 * d, 3 * d)(rng), d);
        if (is_integer(m)) {
            m += make_rational(1, 2);
        }
        tasks.push_back({Task::char_s, ModuleLabel::typ(m), taus[k % 3], Complex{epss[k], 0.0}, 0.0,
                         config.tol * 1e2});
    }
    const std::vector<double> shifts{0.0, 0.3, -0.7};
    for (int k = 0; k < 3; ++k) {
        tasks.push_back({Task::fourier, ModuleLabel::atyp(1, 1), taus[k], Complex{-0.1 * (k + 2), 0.0}, shifts[k],
                         config.tol * 1e2});
    }
    tasks.push_back({Task::exchange, ModuleLabel::atyp(1, 1), config.tau, Complex{-eps_size, 0.0}, 0.25,
                     config.tol * 1e2});

    const auto lines = parallel_map<json>(tasks.size(), [&](std::size_t k) {
        const Task &task = tasks[k];
        const std::string subject = to_string(task.label) + " tau=" + format_complex(task.tau) +
                                    " eps=" + format_complex(task.eps) + " c=" + format_double(task.c);
        switch (task.kind) {
        case Task::char_s:
            return guarded("char_S", subject,
                           [&] { return verify_char_S(params, task.label, task.tau, task.eps, task.tol); });
        case Task::fourier:
            return guarded("fourier_inversion", subject,
                           [&] { return fourier_inversion_check(params, task.c, task.eps, task.tau, task.tol); });
        case Task::exchange:
            break;
        }
        return guarded("sum_exchange", subject,
                       [&] { return sum_exchange_check(params, task.c, task.eps, task.tau, task.tol); });
    });
    SuiteResult out;
    add_lines(out, "modular", lines);
    return out;
}

SuiteResult ring_suite(const SuiteConfig &config)
{
    const SingletParams params(config.p);
    SuiteResult out;
    const auto axioms = check_ring_axioms(params, 100, config.seed);
    out.add(tagged(exact_line("ring_axioms", axioms.checked, axioms.failures), "ring"));
    const auto boundaries = check_overflow_boundaries(params);
    out.add(tagged(exact_line("overflow_boundaries", boundaries.checked, boundaries.failures), "ring"));

    std::vector<std::string> sin_failures;
    for (int s = 1; s <= 2 * params.p(); ++s) {
        if (!sin_ratio_identity_holds(s)) {
            sin_failures.push_back("sin(sx)/sin(x) expansion fails for s=" + std::to_string(s));
        }
    }
    out.add(tagged(exact_line("sin_ratio", 2 * params.p(), sin_failures), "ring"));

    if (params.p() == 2) {
        const RingElem m12 = RingElem::atyp(1, 2);
        const RingElem expected = RingElem::atyp(0, 1) + RingElem::atyp(1, 1, 2) + RingElem::atyp(2, 1);
        const RingElem product = fuse(params, m12, m12);
        std::vector<std::string> failures;
        if (product != expected) {
            failures.push_back("M(1,2) x M(1,2) = " + to_string(product));
        }
        out.add(tagged(exact_line("worked_instance", 1, failures), "ring"));
    }
    return out;
}

SuiteResult qdim_suite(const SuiteConfig &config)
{
    const SingletParams params(config.p);
    const int p = params.p();
    if (!(config.eps.real() < 0.0)) {
        throw std::invalid_argument("the qdim suite needs Re(eps) < 0");
    }
    SuiteResult out;
    const auto hom = verify_homomorphism(params, 200, config.seed);
    out.add({{"suite", "qdim"},
             {"id", "homomorphism"},
             {"pairs", hom.pairs},
             {"basis_size", hom.basis_size},
             {"rank", hom.rank},
             {"failures", hom.failures},
             {"pass", hom.pass()}});

    std::vector<std::string> special;
    int checked = 0;
    for (int r = -2; r <= 2; ++r) {
        for (int s = 1; s <= p; ++s) {
            ++checked;
            if (qdim_atypical(params, r, s).at_one() != Rational{s}) {
                special.push_back("qdim " + to_string(AtypLabel{r, s}) + " at t=1 is not s");
            }
            ++checked;
            const EpsLaurent fock = qdim_typical(params, alpha_rs(params, r - 1, p - s).m);
            if (fock != qdim_atypical(params, r, s) + qdim_atypical(params, r - 1, p - s)) {
                special.push_back("qdim F(alpha_{r-1,p-s}) != qdim M(r,s) + qdim M(r-1,p-s) at " +
                                  to_string(AtypLabel{r, s}));
            }
        }
        for (int s = p + 1; s <= 2 * p - 1; ++s) {
            ++checked;
            if (qdim_atypical(params, r, s) != qdim_atypical(params, r - 1, s - p) +
                                                   qdim_atypical(params, r, 2 * p - s) +
                                                   qdim_atypical(params, r + 1, s - p)) {
                special.push_back("virtual qdim relation fails at " + to_string(AtypLabel{r, s}));
            }
        }
    }
    for (const Rational &m : {make_rational(1, 2), make_rational(-7, 3), make_rational(3, 10)}) {
        ++checked;
        if (qdim_typical(params, m).at_one() != Rational{p}) {
            special.push_back("qdim F(" + to_string(m) + ") at t=1 is not p");
        }
    }
    out.add(tagged(exact_line("qdim_specializations", checked, special), "qdim"));

    std::vector<ModuleLabel> labels;
    for (int r = -2; r <= 2; ++r) {
        for (int s = 1; s <= p; ++s) {
            labels.push_back(ModuleLabel::atyp(r, s));
        }
    }
    labels.push_back(ModuleLabel::typ(make_rational(3, 10)));
    const auto limits = parallel_map<json>(labels.size(), [&](std::size_t k) {
        return guarded("qdim_limit", to_string(labels[k]),
                       [&] { return qdim_numeric_limit(params, labels[k], config.eps, {0.2, 0.1, 0.05}); });
    });
    add_lines(out, "qdim", limits);
    return out;
}

} // namespace

void SuiteResult::add(json line)
{
    pass = pass && line.value("pass", false);
    lines.push_back(std::move(line));
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"theta", "chars", "modular", "ring", "qdim", "all"};
    return names;
}

SuiteResult run_suite(std::string_view name, const SuiteConfig &config)
{
    if (name == "theta") {
        return theta_suite(config);
    }
    if (name == "chars") {
        return chars_suite(config);
    }
    if (name == "modular") {
        return modular_suite(config);
    }
    if (name == "ring") {
        return ring_suite(config);
    }
    if (name == "qdim") {
        return qdim_suite(config);
    }
    if (name == "all") {
        SuiteResult all;
        for (const char *part : {"theta", "chars", "modular", "ring", "qdim"}) {
            for (auto &line : run_suite(part, config).lines) {
                all.add(std::move(line));
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace singlet
