#include "singlet/qdim.hpp"

#include <doctest.h>

#include <random>

using namespace singlet;

TEST_SUITE("qdim")
{
    TEST_CASE("worked instance gives t^4 + 2 + t^-4")
    {
        const SingletParams params(2);
        const RingElem m12 = RingElem::atyp(1, 2);
        const EpsLaurent expected = EpsLaurent::monomial(Rational{4}) + EpsLaurent{Rational{2}} +
                                    EpsLaurent::monomial(Rational{-4});
        CHECK(qdim_elem(params, fuse(params, m12, m12)) == expected);
        CHECK(qdim_atypical(params, 1, 2) * qdim_atypical(params, 1, 2) == expected);
    }

    TEST_CASE("values at t=1")
    {
        for (int p = 2; p <= 5; ++p) {
            const SingletParams params(p);
            for (int r = -3; r <= 3; ++r) {
                for (int s = 1; s <= p; ++s) {
                    CHECK(qdim_atypical(params, r, s).at_one() == s);
                }
            }
            CHECK(qdim_typical(params, make_rational(-5, 7)).at_one() == p);
        }
        CHECK(qdim_atypical(SingletParams(2), 1, 0).is_zero());
        CHECK_THROWS_AS(qdim_atypical(SingletParams(2), 1, -1), std::invalid_argument);
    }

    TEST_CASE("homomorphism on random pairs")
    {
        for (int p = 2; p <= 5; ++p) {
            const SingletParams params(p);
            std::mt19937_64 rng(40 + p);
            for (int trial = 0; trial < 100; ++trial) {
                const RingElem a = random_elem(params, rng);
                const RingElem b = random_elem(params, rng);
                CHECK(qdim_elem(params, fuse(params, a, b)) == qdim_elem(params, a) * qdim_elem(params, b));
            }
            const auto report = verify_homomorphism(params, 200, 3);
            CHECK(report.pairs == 200);
            CHECK(report.pass());
        }
    }

    TEST_CASE("rank over Q")
    {
        const EpsLaurent a = EpsLaurent::monomial(Rational{1}) + EpsLaurent::monomial(Rational{-1});
        const EpsLaurent b = EpsLaurent::monomial(Rational{1});
        CHECK(laurent_rank({a, b, a - b}) == 2);
        CHECK(laurent_rank({a, b, EpsLaurent{Rational{3}}}) == 3);
    }

    TEST_CASE("numeric limit needs Re eps < 0")
    {
        CHECK_THROWS_AS(qdim_numeric_limit(SingletParams(2), ModuleLabel::atyp(1, 1), Complex{0.2, 0.0}, {0.1}),
                        std::domain_error);
        // The vacuum ratio is identically one.
        const auto unit = qdim_numeric_limit(SingletParams(2), ModuleLabel::atyp(1, 1), Complex{-0.2, 0.0}, {0.1});
        CHECK(unit.pass);
    }
}
