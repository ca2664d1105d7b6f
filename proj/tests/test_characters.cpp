#include "singlet/characters.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace singlet;

namespace
{

std::vector<long> coeffs_at_one(const QSeries &s, const Rational &lead, int count)
{
    std::vector<long> out;
    for (int n = 0; n < count; ++n) {
        out.push_back(to_int64(s.coeff(lead + n).at_one()));
    }
    return out;
}

} // namespace

TEST_SUITE("characters")
{
    TEST_CASE("vacuum character at p=2")
    {
        const SingletParams params(2);
        const QSeries m11 = atypical_char_series(params, 1, 1, Rational{12});
        // h - c/24 = (p-1)^2/4p - 1/24 = 1/12
        CHECK(*m11.at_eps_zero().valuation() == make_rational(1, 12));
        CHECK(coeffs_at_one(m11, make_rational(1, 12), 11) ==
              std::vector<long>{1, 0, 1, 2, 3, 4, 6, 8, 12, 16, 23});
    }

    TEST_CASE("virasoro vacuum series")
    {
        // (1 - q) / eta, shifted by q^{1/24}
        const Rational cut{12};
        const QSeries one_minus_q =
            QSeries::one(cut + make_rational(1, 24)) -
            QSeries::monomial(Rational{1}, EpsLaurent::one(), cut + make_rational(1, 24));
        const QSeries vir = (one_minus_q * inverse_eta_series(cut + make_rational(1, 24))).truncated(cut);
        CHECK(coeffs_at_one(vir, make_rational(-1, 24), 11) == std::vector<long>{1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12});
    }

    TEST_CASE("typical character leading term")
    {
        const SingletParams params(2);
        const QSeries f = typical_char_series(params, make_rational(1, 2), Rational{3});
        // (m - p + 1)^2 / 4p - 1/24 with m = 1/2
        const Rational lead = make_rational(1, 32) - make_rational(1, 24);
        CHECK(*f.valuation() == lead);
        CHECK(f.coeff(lead) == EpsLaurent::monomial(Rational{-1}));
    }

    TEST_CASE("three constructions agree")
    {
        for (int p = 2; p <= 5; ++p) {
            const auto report = verify_char_methods(SingletParams(p), -3, 3, Rational{20});
            CAPTURE(p);
            CHECK(report.checked == 7 * p);
            CHECK(report.pass());
        }
    }

    TEST_CASE("fock decomposition and virtual labels")
    {
        for (int p = 2; p <= 5; ++p) {
            const auto report = verify_char_relations(SingletParams(p), -3, 3, Rational{20});
            CAPTURE(p);
            CHECK(report.pass());
        }
    }

    TEST_CASE("sign-sum vacuum agrees with the felder form")
    {
        for (int p = 2; p <= 5; ++p) {
            const SingletParams params(p);
            CHECK(vacuum_char_series(params, Rational{20}) ==
                  atypical_char_series(params, 1, 1, Rational{20}, CharMethod::false_theta));
        }
    }

    TEST_CASE("labels outside 1..p are rejected by the truncated methods")
    {
        const SingletParams params(3);
        CHECK_THROWS_AS(atypical_char_series(params, 1, 0, Rational{5}, CharMethod::false_theta),
                        std::invalid_argument);
        CHECK_THROWS_AS(atypical_char_series(params, 1, 4, Rational{5}, CharMethod::direct), std::invalid_argument);
        CHECK_THROWS_AS(char_series(params, ModuleLabel::atyp(1, 4), Rational{5}), std::invalid_argument);
        CHECK(atypical_char_series(params, 1, 0, Rational{5}).is_zero());
    }

    TEST_CASE("closed form against the series")
    {
        const Complex tau{0.0, 1.0};
        for (int p = 2; p <= 3; ++p) {
            const SingletParams params(p);
            for (const Complex eps : {Complex{-0.2, 0.0}, Complex{0.2, 0.0}}) {
                for (const auto &label : {ModuleLabel::atyp(1, 1), ModuleLabel::atyp(0, p), ModuleLabel::atyp(2, 1),
                                          ModuleLabel::typ(make_rational(1, 3))}) {
                    const Evaluation closed = char_eval(params, label, tau, eps);
                    const Evaluation series = qseries_eval(char_series(params, label, Rational{25}), tau, eps, p);
                    CAPTURE(to_string(label));
                    CHECK(std::abs(closed.value - series.value) < 1e-12 * std::abs(closed.value));
                }
            }
        }
    }
}
