#include "singlet/lattice_sum.hpp"
#include "singlet/laurent.hpp"
#include "singlet/qseries.hpp"
#include "singlet/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace singlet;

namespace
{

// Coefficients of q^{offset + n}, n = 0..count-1, at t = 1.
std::vector<long> shifted_coeffs(const QSeries &s, const Rational &offset, int count)
{
    std::vector<long> out;
    for (int n = 0; n < count; ++n) {
        out.push_back(to_int64(s.coeff(offset + n).at_one()));
    }
    return out;
}

EpsLaurent random_laurent(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> exp_num(-6, 6);
    std::uniform_int_distribution<int> exp_den(1, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    EpsLaurent out;
    for (int k = 0; k < 3; ++k) {
        out += EpsLaurent::monomial(make_rational(exp_num(rng), exp_den(rng)), Rational{coeff(rng)});
    }
    return out;
}

} // namespace

TEST_SUITE("exactalg")
{
    TEST_CASE("rational parsing and printing")
    {
        CHECK(parse_rational("6/4") == make_rational(3, 2));
        CHECK(parse_rational("-7") == Rational{-7});
        CHECK(to_string(make_rational(4, 2)) == "2/1");
        CHECK(to_string(make_rational(-1, 3)) == "-1/3");
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
        CHECK_THROWS_AS(to_int64(make_rational(1, 2)), std::domain_error);
    }

    TEST_CASE("laurent arithmetic is exact")
    {
        const EpsLaurent a = EpsLaurent::monomial(Rational{2}) + EpsLaurent::monomial(Rational{-2});
        const EpsLaurent square = a * a;
        CHECK(square.coeff(Rational{4}) == 1);
        CHECK(square.coeff(Rational{0}) == 2);
        CHECK(square.coeff(Rational{-4}) == 1);
        CHECK(square.at_one() == 4);
        CHECK((a - a).is_zero());
    }

    TEST_CASE("laurent ring laws on random elements")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const EpsLaurent a = random_laurent(rng);
            const EpsLaurent b = random_laurent(rng);
            const EpsLaurent c = random_laurent(rng);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b).at_one() == a.at_one() * b.at_one());
        }
    }

    TEST_CASE("laurent evaluation")
    {
        // t^2 at eps = -0.2, p = 2: exp(2 pi (-0.2) / 2)
        const auto v = laurent_eval(EpsLaurent::monomial(Rational{2}), Complex{-0.2, 0.0}, 2);
        CHECK(std::abs(v - 0.53348809109110325118) < 1e-15);
    }

    TEST_CASE("eta expansion matches the pentagonal number theorem")
    {
        const std::vector<long> expected{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1,
                                         0, 0, 0, 0, 0, 0, 1,  0, 0, 0, 1, 0, 0, 0, 0};
        const QSeries eta = eta_series(Rational{31});
        CHECK(shifted_coeffs(eta, make_rational(1, 24), 31) == expected);
    }

    TEST_CASE("inverse eta gives partition numbers")
    {
        const std::vector<long> partitions{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
        const QSeries inv = inverse_eta_series(Rational{13});
        CHECK(shifted_coeffs(inv, make_rational(-1, 24), 13) == partitions);
        const QSeries product = eta_series(Rational{13}) * inv;
        CHECK(product == QSeries::one(product.cutoff()));
    }

    TEST_CASE("truncated product keeps only exact terms")
    {
        const Rational cut{5};
        const QSeries a = QSeries::monomial(Rational{-2}, EpsLaurent::one(), cut);
        const QSeries b = QSeries::monomial(Rational{6}, EpsLaurent::one(), Rational{7}) +
                          QSeries::monomial(Rational{1}, EpsLaurent::one(), Rational{7});
        const QSeries ab = a * b;
        // Neglected terms of b at q^{>7} land at q^{>5}.
        CHECK(ab.cutoff() <= Rational{5});
        CHECK(ab.coeff(Rational{-1}).at_one() == 1);
        CHECK(ab.coeff(Rational{4}).at_one() == 1);
    }

    TEST_CASE("gaussian lattice sum reproduces theta3")
    {
        // sum_n e^{-pi n^2} = pi^{1/4} / Gamma(3/4)
        const double pi = std::numbers::pi;
        const Evaluation v =
            gaussian_lattice_sum({Complex{-pi, 0.0}, Complex{0.0, 0.0}}, 0.0, LatticeRange::all, 1e-16);
        CHECK(std::abs(v.value - std::pow(pi, 0.25) / std::tgamma(0.75)) < 1e-15);
        CHECK_THROWS(gaussian_lattice_sum({Complex{1.0, 0.0}, Complex{0.0, 0.0}}, 0.0, LatticeRange::all, 1e-12));
    }

    TEST_CASE("line quadrature on a shifted gaussian")
    {
        const double pi = std::numbers::pi;
        const Evaluation v = gauss_line_integral(
            [](double x) { return std::exp(Complex{-x * x, 0.0} + Complex{0.0, 1.5} * x); }, 0.9, 1e-13);
        CHECK(std::abs(v.value - std::sqrt(pi) * std::exp(-0.5625)) < 1e-13);
        CHECK(v.error < 1e-12);
        CHECK_THROWS_AS(gauss_line_integral([](double) { return Complex{1.0, 0.0}; }, 0.0), std::domain_error);
    }
}
