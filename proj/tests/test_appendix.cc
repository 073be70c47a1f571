// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "leja/appendix.hpp"
#include "leja/bounds.hpp"
#include "leja/errors.hpp"

using namespace leja;

TEST_CASE("inequality 1") {
    const double l = lambda_constant();
    const auto r = ineq1(1.0, 1.0, 2.0, l);
    CHECK(r.lhs == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(r.rhs == 1.0);
    CHECK(r.holds);

    const auto edge = ineq1(1.0, 1.0, -std::exp(-l), l);
    CHECK(edge.holds);
    CHECK(edge.margin >= -1e-12);
    CHECK(ineq1(1.0, 1.0, std::exp(-l), l).holds);

    const auto zero = ineq1(1.0, 2.0, 2.0, l);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.holds);

    for (double t : {1e-3, 0.5, 7.0, 1e4}) {
        CHECK(ineq1(t * 0.7, t * 1.9, t * -3.1, l).lhs ==
              doctest::Approx(ineq1(0.7, 1.9, -3.1, l).lhs).epsilon(1e-13));
    }
    CHECK_THROWS_AS((void)ineq1(1.0, 1.0, 0.1, l), ValidationError);
    CHECK_THROWS_AS((void)ineq1(1.0, 1.0, 0.0, l), ValidationError);
    CHECK_THROWS_AS((void)ineq1(-1.0, 1.0, 3.0, l), ValidationError);
}

TEST_CASE("inequality 1 can fail inside the excluded interval") {
    const double l = lambda_constant();
    const double s = std::exp(-l);
    double worst = -INFINITY;
    for (int i = 1; i < 20000; ++i) {
        const double x = -s + 2.0 * s * i / 20000.0;
        if (x == 0.0) continue;
        const double lx = std::log(std::abs(x));
        const double log_lhs = 0.5 * (std::log(std::abs(x + 1.0)) - lx) + 0.5 * (std::log(std::abs(x - 1.0)) - lx);
        worst = std::max(worst, log_lhs);
    }
    CHECK(worst > 0.0);
}

TEST_CASE("inequality 2") {
    const auto r = ineq2(1.0, 1.0, 0.5);
    CHECK(r.lhs == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r.rhs == doctest::Approx(2.0 * std::pow(2.0, 0.125)).epsilon(1e-14));
    CHECK(r.holds);
    CHECK(ineq2(1.0, 1.0, 1.0 - 1e-12).holds);
    CHECK(ineq2(1.0, 1.0, 1.0 - 1e-12).lhs < 1e-3);
    CHECK_THROWS_AS((void)ineq2(1.0, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS((void)ineq2(1.0, 1.0, 2.0), ValidationError);

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> lu(std::log(1e-3), std::log(1e3)), u(0.0, 1.0);
    int bad = 0;
    for (int i = 0; i < 100000; ++i) {
        const double A = std::exp(lu(rng)), B = std::exp(lu(rng));
        double t = u(rng);
        if (t == 0.0) continue;
        if (!ineq2(A, B, t * A).holds) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("inequality 3") {
    const auto eq = ineq3(0.7, 0.7);
    CHECK(eq.lhs == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(eq.holds);
    CHECK(ineq3(1.0, 3.0).lhs == doctest::Approx(4.0 / std::pow(3.0, 0.75)).epsilon(1e-14));
    CHECK(ineq3(1e-6, 1.0).lhs == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(ineq3(1e-6, 1.0).holds);
    CHECK_THROWS_AS((void)ineq3(0.0, 1.0), ValidationError);
}

TEST_CASE("inequality 4 and the lambda bracket") {
    const auto r = ineq4();
    CHECK(r.lhs == 0.2);
    CHECK(std::abs(r.rhs - 0.24565978) <= 1e-8);
    CHECK(r.holds);
    CHECK(lambda_equation_value(0.2) < 0.0);
    CHECK(lambda_equation_value(0.3) > 0.0);
    CHECK(std::exp(std::exp(0.2)) * (std::exp(0.2) - 1.0) < 1.0);
}

TEST_CASE("tightness of the 1/8") {
    const auto s = ineq2_tightness_scan();
    CHECK(s.max_value == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(std::abs(s.argmax - 3.0) <= 1e-3);
}
