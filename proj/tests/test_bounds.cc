// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "leja/bounds.hpp"
#include "leja/compact_set.hpp"
#include "leja/errors.hpp"
#include "leja/green.hpp"
#include "leja/interp.hpp"
#include "leja/leja.hpp"

using namespace leja;

namespace {
double f_lambda(double l) { return std::exp(std::exp(l)) * (std::exp(l) - 1.0) - 1.0; }
}  // namespace

TEST_CASE("lambda constant") {
    const double l = lambda_const(1e-10);
    CHECK(std::abs(l - 0.24565978) <= 1e-8);
    CHECK(l > 0.2);
    CHECK(std::abs(f_lambda(l)) <= 1e-10);
    CHECK(std::abs(f_lambda(lambda_constant())) <= 1e-15);
    CHECK(std::abs(lambda_constant() - l) <= 1e-9);
    CHECK_THROWS_AS((void)lambda_const(0.0), ValidationError);
}

TEST_CASE("diameter bound formula") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto m = build_green_model(k);
    for (double d : {0.01, 0.05, 0.3}) {
        const double g0 = g_of_delta(m, d);
        CHECK(theorem1_bound(k, m, 1, d) == doctest::Approx(2.0 * std::pow(2.0 / d * std::exp(g0), 1.125)).epsilon(1e-12));
    }
    const double g20 = g_of_delta(m, 0.05);
    const double want = 2.0 * 20.0 * std::pow(2.0 / 0.05 * std::exp(20.0 * g20), 1.125);
    CHECK(theorem1_bound(k, m, 20, 0.05) == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::isinf(theorem1_bound(k, m, 100000, 1.0)));
    CHECK_THROWS_AS((void)theorem1_bound(k, m, 0, 0.1), ValidationError);
    CHECK_THROWS_AS((void)theorem1_bound(k, m, 3, -0.1), ValidationError);
}

TEST_CASE("tau bound reduces to the plain bound and degrades with tau") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto m = build_green_model(k);
    GTable g(m);
    for (std::size_t n : {1u, 5u, 50u})
        for (double d : {1e-3, 0.02, 0.4}) CHECK(theorem2_bound(k, g, n, 1.0, d) == theorem1_bound(k, g, n, d));
    for (double d : {1e-3, 0.01, 0.1}) {
        const double base = std::log(2.0 / d) + 50 * g(d);
        if (base >= 0) CHECK(theorem2_bound(k, g, 50, 0.9, d) >= theorem1_bound(k, g, 50, d));
    }
    CHECK_THROWS_AS((void)theorem2_bound(k, g, 3, 0.0, 0.1), ValidationError);
}

TEST_CASE("delta optimisation: U shape and interior minimiser") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto m = build_green_model(k);
    GTable g(m);
    for (std::size_t n : {2u, 10u, 50u, 100u}) {
        const auto r = theorem1_bound_opt(k, g, n);
        CHECK(r.interior);
        CHECK(r.best_bound > 0.0);
        CHECK(r.best_bound <= *std::min_element(r.bound_values.begin(), r.bound_values.end()) * (1 + 1e-12));
        CHECK(r.bound_values.front() > r.best_bound);
        CHECK(r.bound_values.back() > r.best_bound);
        for (double v : r.bound_values) CHECK((std::isfinite(v) && v > 0.0));
    }
    const auto r1 = theorem1_bound_opt(k, g, 1);
    CHECK(r1.best_bound >= 1.0);

    const auto same = theorem2_bound_opt(k, g, 10, 1.0);
    CHECK(same.best_bound == theorem1_bound_opt(k, g, 10).best_bound);

    DeltaGridSpec narrow;
    narrow.lo_factor = 0.1;
    narrow.hi_factor = 1.0;
    CHECK_THROWS_AS((void)theorem1_bound_opt(k, g, 10, narrow), ValidationError);
}

TEST_CASE("optimised bound grows polynomially on two intervals") {
    const auto k = make_union({{0.0, 1.0}, {2.0, 3.0}});
    const auto m = build_green_model(k);
    GTable g(m);
    std::vector<double> ds, gs;
    for (int i = 0; i <= 8; ++i) {
        ds.push_back(1e-4 * std::pow(10.0, i / 4.0));
        gs.push_back(g(ds.back()));
    }
    const double beta = log_log_slope(ds, gs);
    std::vector<double> ns, bs;
    for (std::size_t n = 10; n <= 100; n += 10) {
        ns.push_back(static_cast<double>(n));
        bs.push_back(theorem1_bound_opt(k, g, n).best_bound);
    }
    CHECK(log_log_slope(ns, bs) <= 1.0 + 1.125 / beta + 0.3);
}

TEST_CASE("Leja Lebesgue constants sit below the optimised bound") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto m = build_green_model(k);
    GTable g(m);
    const auto s = leja_sequence(k, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
        const InterpolationOperator op(std::vector<double>(s.points.begin(), s.points.begin() + n));
        CHECK(lebesgue_constant(op, k).lambda_n <= theorem1_bound_opt(k, g, n).best_bound);
    }
}

TEST_CASE("subexponential threshold") {
    const auto k = make_union({{-1.0, 1.0}});
    const auto m = build_green_model(k);
    GTable g(m);
    for (double eps : {0.5, 0.1}) {
        const auto w = subexponential_threshold(k, g, eps);
        CHECK(w.g_delta < (8.0 / 9.0) * eps);
        const double d = diam(k);
        for (std::size_t n = w.n0; n < w.n0 + 2000; n += 37)
            CHECK(theorem1_log_bound(d, n, w.delta, w.g_delta) / static_cast<double>(n) < eps);
        for (std::size_t n = w.n0; n < w.n0 + 200; n += 13)
            CHECK(theorem1_bound_opt(k, g, n).best_log_bound / static_cast<double>(n) < eps);
        if (w.n0 > 1) CHECK(theorem1_log_bound(d, w.n0 - 1, w.delta, w.g_delta) / static_cast<double>(w.n0 - 1) >= eps);
    }
}

TEST_CASE("GTable memoises") {
    const auto m = build_green_model(make_union({{-1.0, 1.0}}));
    GTable g(m);
    const double a = g(0.1);
    CHECK(g.cached() == 1);
    CHECK(g(0.1) == a);
    CHECK(g.cached() == 1);
}
