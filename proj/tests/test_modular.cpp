#include "singlet/modular.hpp"

#include <doctest.h>

#include <cmath>

using namespace singlet;

TEST_SUITE("modular")
{
    TEST_CASE("atypical kernel reference value")
    {
        const Complex k = s_kernel_atypical(SingletParams(2), 1, 1, 0.0, Complex{-0.2, 0.0});
        CHECK(std::abs(k - 0.41529201916535425655) < 1e-14);
    }

    TEST_CASE("correction term vanishes for Re eps < 0")
    {
        const SingletParams params(3);
        CHECK(std::abs(x_correction(params, 1, 2, Complex{0.0, 1.0}, Complex{-0.2, 0.0}).value) == 0.0);
        CHECK(std::abs(x_correction(params, 1, 2, Complex{0.0, 1.0}, Complex{0.2, 0.0}).value) > 1e-3);
    }

    TEST_CASE("atypical S transformation on both branches")
    {
        for (int p = 2; p <= 3; ++p) {
            for (const auto &[r, s] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{0, 1}}) {
                for (const double eps : {-0.2, 0.2}) {
                    const auto report =
                        verify_char_S(SingletParams(p), ModuleLabel::atyp(r, s), Complex{0.0, 1.0},
                                      Complex{eps, 0.0}, 1e-6);
                    CAPTURE(report.point);
                    CAPTURE(report.rel_residual);
                    CHECK(report.pass);
                }
            }
        }
    }

    TEST_CASE("typical S transformation")
    {
        const auto report = verify_char_S(SingletParams(2), ModuleLabel::typ(make_rational(7, 3)), Complex{0.3, 0.8},
                                          Complex{0.1, 0.0}, 1e-8);
        CAPTURE(report.rel_residual);
        CHECK(report.pass);
    }

    TEST_CASE("fourier inversion and sum exchange")
    {
        const SingletParams params(2);
        const auto inversion = fourier_inversion_check(params, 0.3, Complex{-0.3, 0.0}, Complex{0.0, 2.0}, 1e-8);
        CAPTURE(inversion.rel_residual);
        CHECK(inversion.pass);
        const auto exchange = sum_exchange_check(params, 0.25, Complex{-0.2, 0.0}, Complex{0.0, 1.0}, 1e-8);
        CHECK(exchange.pass);
        CHECK_THROWS_AS(fourier_inversion_check(params, 0.0, Complex{0.2, 0.0}, Complex{0.0, 1.0}, 1e-8),
                        std::domain_error);
    }

    TEST_CASE("residual report uses the absolute residual near zero")
    {
        const auto small = make_report("x", "pt", Complex{1e-9, 0.0}, Complex{2e-9, 0.0}, 1e-8);
        CHECK(small.pass);
        const auto large = make_report("x", "pt", Complex{1.0, 0.0}, Complex{1.0 + 1e-6, 0.0}, 1e-8);
        CHECK_FALSE(large.pass);
    }
}
